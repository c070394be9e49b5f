#pragma once

#include <optional>

#include "semistab/rational.hpp"
#include "semistab/stability_kb.hpp"
#include "semistab/variety.hpp"

namespace semistab {

/// Three-valued answer of a vanishing predicate. Unknown is never read as
/// either of the other two.
enum class TriBool { Holds, Fails, Unknown };

const char* to_string(TriBool b);

// -- exact dimensions on projective space -----------------------------------

/// h^q(P^n, Omega^p(t)) by the closed Bott formula.
/// Throws ArgumentError unless n >= 1, 0 <= p <= n, 0 <= q <= n.
BigInt bott_dim(int n, int p, int t, int q);

/// h^q(P^n, Omega^p(t)) by chasing the Euler sequences
///   0 -> Omega^p(t) -> O(t-p)^C(n+1,p) -> Omega^{p-1}(t) -> 0
/// from line-bundle cohomology. Undetermined connecting ranks are settled
/// only by Serre duality, the Hodge numbers and H^0 vanishing for negative
/// twists; std::nullopt means the chase stayed ambiguous.
///
/// Results are memoised in a process-wide cache guarded for concurrent use.
std::optional<BigInt> euler_oracle_dim(int n, int p, int t, int q);

// -- vanishing predicates ----------------------------------------------------

/// H^0(Y, Omega^a_Y(t)) = 0 for t < 0 and a < dim Y (Kodaira-Akizuki-Nakano).
/// Unknown otherwise, never Fails.
TriBool kan_h0_vanishes(int dim_y, int a, int t);

/// H^0(Y, Omega^a_Y) = 0 on a Fano Y for a >= 1 (rational connectedness);
/// Fails for a = 0.
TriBool fano_hodge_vanishes(const VarietySpec& space, int a);

enum class BoundaryMode {
    /// Only t < a * index / dim.
    Strict,
    /// Also t = index / dim when a = 1 and Omega is known stable.
    AllowStableBoundary,
};

/// H^0(X, Omega^a_X(t)) = 0 from (semi)stability of Omega_X recorded in kb:
/// Holds when t < a * index / dim (exact comparison). Always Unknown in
/// dimension 2 and when the Picard rank is not known to be one.
/// Throws ArgumentError unless 1 <= a < dim.
TriBool stability_vanishing(const VarietySpec& space, int a, int t, const StabilityKb& kb,
                            BoundaryMode mode = BoundaryMode::AllowStableBoundary);

/// H^0(Q_m, Omega^p(t)) = 0 for t <= p (Snow). Unknown for t > p.
/// Throws ArgumentError unless m >= 3 and 1 <= p < m.
TriBool quadric_h0_vanishes(int m, int p, int t);

/// Intrinsic type of a smooth irreducible divisor of degree k with
/// 1 <= k < ambient.index() (so that the divisor is itself Fano).
/// Throws ArgumentError otherwise, or when the ambient is a curve.
VarietySpec divisor_intrinsic_type(const VarietySpec& ambient, int k);

} // namespace semistab
