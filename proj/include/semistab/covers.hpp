#pragma once

#include <vector>

#include "semistab/certify.hpp"

namespace semistab {

/// Twist c with K_X = pi^* O_Y(c) on a Kawamata cover branched with
/// multiplicity k_i along D_i: c = -s + sum (k_i - 1).
int cover_canonical_twist(int s, const std::vector<int>& k_list);

/// mu(Omega_X(log D')) = (-s + sum k_i) / n with respect to pi^* O_Y(1).
/// Throws ArgumentError when n < 1 or a k_i < 1.
Rational cover_log_slope(int n, int s, const std::vector<int>& k_list);

/// Semistable on the cover exactly when the base pair is ample-or-trivial;
/// the certificate wraps the base proof in a CoverPullback node. Unknown
/// (with the base obligations as residual) in every other case.
Verdict cover_verdict(const LogPair& base, const StabilityKb& kb = StabilityKb::builtin());

} // namespace semistab
