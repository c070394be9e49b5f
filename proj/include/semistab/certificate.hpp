#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semistab/stability_kb.hpp"
#include "semistab/variety.hpp"

namespace semistab {

/// Rule applied at one certificate node.
enum class Rule {
    SlopeBound,
    KAN,
    Norimatsu,
    AmpleOrTrivial,
    ResidueSplit,
    BottVanish,
    SnowVanish,
    StabilityVanish,
    FanoHodge,
    RestrictionSurjective,
    CuppingInjective,
    ReducibleWitness,
    CoverPullback,
};

const char* to_string(Rule rule);
/// Throws ParseError on an unknown name.
Rule rule_from_string(const std::string& name);
/// BottVanish, SnowVanish, KAN, StabilityVanish, FanoHodge, CuppingInjective.
bool is_base_predicate(Rule rule);

using ParamValue = std::variant<long long, std::string>;

/// One rule application. Inputs are kept in a sorted map so that printing
/// is deterministic.
struct CertificateNode {
    Rule rule = Rule::KAN;
    std::string citation;
    std::map<std::string, ParamValue> inputs;
    std::vector<CertificateNode> children;

    /// Throws ParseError when the key is missing or has the wrong type.
    long long integer(const std::string& key) const;
    const std::string& text(const std::string& key) const;

    /// Number of edges on the longest root-to-leaf path.
    int height() const;
    std::size_t size() const;
    /// Leaves in depth-first order.
    std::vector<const CertificateNode*> leaves() const;
    std::vector<CertificateNode*> leaves();

    friend bool operator==(const CertificateNode&, const CertificateNode&) = default;
};

// -- leaf and rule constructors ---------------------------------------------
//
// Each H^0-vanishing node proves a claim "H^0(space, Omega^p(t)) = 0"; the
// KAN claim only fixes the dimension of the space.

CertificateNode bott_leaf(int n, int p, int t);
CertificateNode snow_leaf(int m, int p, int t);
CertificateNode kan_leaf(int dim, int a, int t);
CertificateNode fano_hodge_leaf(const VarietySpec& space, int a);
CertificateNode stability_leaf(const VarietySpec& space, int a, int t, bool strict);
CertificateNode cupping_leaf(int components, int h11);
CertificateNode restriction_node(const VarietySpec& ambient, int k, int q, int c,
                                 CertificateNode ambient_proof);

struct VanishingClaim {
    /// nullopt: any smooth projective variety of dimension `dim`.
    std::optional<VarietySpec> space;
    int dim = 0;
    int p = 0;
    int t = 0;

    bool covers(const VarietySpec& target, int p, int t) const;
};

/// Claim proved by an H^0-vanishing node; nullopt for other rules.
std::optional<VanishingClaim> claim_of(const CertificateNode& node);

// -- replay -----------------------------------------------------------------

struct ReplayResult {
    bool ok = true;
    std::string failure;

    explicit operator bool() const noexcept { return ok; }
};

/// Re-evaluates every base predicate and every side condition of the tree.
ReplayResult replay(const CertificateNode& root, const StabilityKb& kb = StabilityKb::builtin());

// -- text form --------------------------------------------------------------

/// JSON tree: {"rule", "citation", "inputs": {...}, "children": [...]}.
std::string certificate_to_json(const CertificateNode& node, int indent = 2);
/// Throws ParseError on malformed input.
CertificateNode certificate_from_json(const std::string& text);

} // namespace semistab
