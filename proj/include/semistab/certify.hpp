#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semistab/certificate.hpp"
#include "semistab/cohomology.hpp"
#include "semistab/rational.hpp"
#include "semistab/variety.hpp"

namespace semistab {

/// mu(Omega^a_X(log D)) = a (k - s) / n, as a coefficient of deg O(1)^n.
/// Throws ArgumentError unless 1 <= a <= n.
Rational slope_log(const LogPair& pair, int a);

struct Obligation {
    int a = 0;
    int t = 0;

    friend bool operator==(const Obligation&, const Obligation&) = default;
    friend auto operator<=>(const Obligation&, const Obligation&) = default;
};

/// All (a, t) with 1 <= a < n and 0 <= t < a (s - k) / n. Twists t < 0
/// are left to the Norimatsu certificate.
/// Throws PreconditionError unless the pair is log Fano.
std::vector<Obligation> destabilizing_candidates(int n, int s, int k);
std::vector<Obligation> destabilizing_candidates(const LogPair& pair);

/// Inductive proof of H^0(Y, Omega^a_Y(log D)(t)) = 0, t < 0, for a divisor
/// with `components` components on a variety of dimension `dim`: the
/// residue sequence peels off one component at a time down to KAN leaves.
/// Throws PreconditionError unless t < 0 and 1 <= a < dim.
CertificateNode norimatsu_certificate(int dim, int components, int a, int t);
CertificateNode norimatsu_certificate(const LogPair& pair, int a, int t);

enum class CaseStatus { Resolved, Unresolved };
const char* to_string(CaseStatus s);

/// One obligation of a case table.
struct CaseRow {
    int n = 0, s = 0, k = 0, a = 0, t = 0;
    CaseStatus status = CaseStatus::Unresolved;
    /// Rule that discharged the divisor-side group (or the cupping map).
    std::optional<Rule> rule;
    /// Short description of the deciding leaf, e.g. "Q5 p=2 t=2".
    std::string detail;

    friend bool operator==(const CaseRow&, const CaseRow&) = default;
};

struct Witness {
    int a = 1;
    int t = 0;
    /// Lower bound for h^0(Omega^a_X(log D)(t)).
    int h0_lower_bound = 0;
    /// mu(Omega_X(log D)).
    Rational sheaf_slope;
    /// Slope of the destabilizing subsheaf O(-t)^... , i.e. t / a.
    Rational subsheaf_slope;

    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class Outcome { Semistable, NotSemistable, Unknown };
const char* to_string(Outcome o);

/// Semistable carries a proof; NotSemistable a witness and the derivation
/// of its lower bound; Unknown the obligations left open. Unknown is not a
/// negative result.
struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::optional<CertificateNode> certificate;
    std::optional<Witness> witness;
    std::vector<CaseRow> residual;
    std::string note;

    static Verdict semistable(CertificateNode proof);
    /// Throws PreconditionError unless h0_lower_bound >= 1 and the subsheaf
    /// slope exceeds the sheaf slope.
    static Verdict not_semistable(Witness witness, CertificateNode derivation);
    /// Throws PreconditionError on an empty residual list.
    static Verdict unknown(std::vector<CaseRow> residual, std::string note = {});
};

/// Semistable when s <= sum k_i and Pic = Z is known; nullopt otherwise.
/// Every obligation then has t < 0 and is covered by one Norimatsu tree per
/// form degree, taken at the largest such twist.
std::optional<Verdict> ample_or_trivial_verdict(const LogPair& pair);

/// Surjectivity of H^0(Y, Omega^q(c)) -> H^0(D, Omega^q_D(c)) for c < k,
/// q < dim Y - 1, combined with a proof that the source vanishes
/// (Bott on P^n, Snow or stability on quadrics, stability otherwise).
/// Throws PreconditionError when q >= dim Y - 1.
TriBool restriction_vanishing(const VarietySpec& ambient, int k, int q, int c,
                              const StabilityKb& kb = StabilityKb::builtin());
/// Same decision, returning the certificate when it Holds.
std::optional<CertificateNode> restriction_certificate(const VarietySpec& ambient, int k, int q,
                                                       int c,
                                                       const StabilityKb& kb = StabilityKb::builtin());

/// Injectivity of the cupping map (+) H^0(O_{D_i}) -> H^1(Omega_X) at
/// (a, t) = (1, 0): Holds for one component, Fails for several since
/// h^1(Omega_X) = 1. Throws PreconditionError off (1, 0) or when the
/// Picard rank is not known to be one.
TriBool cupping_injective(const LogPair& pair, int a = 1, int t = 0);

/// For r >= 2 components: h^0(Omega_X(log D)) >= r - 1, so O_X is a
/// destabilizing rank-one subsheaf. nullopt when r = 1.
/// Throws PreconditionError unless the pair is log Fano of dimension >= 2
/// with Pic = Z known.
std::optional<Witness> reducible_witness(const LogPair& pair);
std::optional<std::pair<Witness, CertificateNode>> reducible_witness_certificate(const LogPair& pair);

struct Resolution {
    CaseStatus status = CaseStatus::Unresolved;
    std::optional<CertificateNode> certificate;
    /// Deciding rule and leaf description (see CaseRow).
    std::optional<Rule> rule;
    std::string detail;
};

/// Tries to prove H^0(X, Omega^a_X(log D)(t)) = 0 for an irreducible D
/// through the residue sequence, in a fixed order:
///  1. ambient H^0(Omega^a_X(t)) = 0 (Bott on P^n, stability otherwise,
///     Snow as a fallback on quadrics); no further step if this is open;
///  2. divisor side H^0(D, Omega^{a-1}_D(t)) = 0 on the intrinsic type of D:
///     KAN, FanoHodge, Bott (D = P^m), strict stability (dim D >= 3),
///     Snow (quadrics), restriction from D's own embedding;
///  3. at (1, 0), injectivity of the cupping map.
/// Requires 1 <= a < n and t >= 0, but not that (a, t) is a candidate.
Resolution discharge(const LogPair& pair, int a, int t,
                     const StabilityKb& kb = StabilityKb::builtin());

/// discharge() restricted to destabilizing candidates of a log Fano pair
/// with one smooth component. Throws PreconditionError otherwise.
Resolution resolve_obligation(const LogPair& pair, int a, int t,
                              const StabilityKb& kb = StabilityKb::builtin());

/// Decides semistability of Omega_X(log D).
/// Throws ValidationError on a non-SNC divisor, a singular or reducible
/// component, or an ambient whose Picard rank is not known to be one.
Verdict certify(const LogPair& pair, const StabilityKb& kb = StabilityKb::builtin());

/// Generic Picard-rank-one variety of dimension n and index s: P^n for
/// s = n + 1, Q_n for s = n (n >= 3), an abstract Fano otherwise.
/// Throws ArgumentError unless 1 <= s <= n + 1.
VarietySpec generic_variety(int n, int s);

/// Every candidate of (generic_variety(n, s), irreducible D of degree k)
/// with its resolution. Throws ArgumentError unless 0 < k < s <= n + 1
/// and 2 <= n <= 6.
std::vector<CaseRow> case_table(int n, int s, int k,
                                const StabilityKb& kb = StabilityKb::builtin());

// -- comparison with the published hypothesis list ----------------------------

/// Whether the published semistability theorem for irreducible D covers
/// (n, s, k). Defined for 2 <= n <= 6.
bool published_hypothesis_includes(int n, int s, int k);
/// Human-readable form of that hypothesis for dimension n.
std::string published_hypothesis_text(int n);

struct CrosscheckEntry {
    int s = 0;
    int k = 0;
    bool engine_resolves = false;
    bool statement_includes = false;
    std::vector<CaseRow> open_rows;
};

struct DiscrepancyReport {
    int n = 0;
    std::string statement;
    std::vector<CrosscheckEntry> entries;
    std::vector<std::pair<int, int>> agree;
    std::vector<std::pair<int, int>> engine_only;     ///< resolved, statement excludes
    std::vector<std::pair<int, int>> statement_only;  ///< statement includes, engine open
};

/// Throws ArgumentError unless 2 <= n <= 6.
DiscrepancyReport theorem_crosscheck(int n, const StabilityKb& kb = StabilityKb::builtin());

} // namespace semistab
