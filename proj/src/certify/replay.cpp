#include <sstream>

#include "semistab/certificate.hpp"
#include "semistab/certify.hpp"
#include "semistab/cohomology.hpp"
#include "semistab/errors.hpp"

namespace semistab {

namespace {

/// Thrown internally to abort a replay with a reason.
struct ReplayFailure {
    std::string reason;
};

[[noreturn]] void fail(const CertificateNode& node, const std::string& why)
{
    throw ReplayFailure{std::string(to_string(node.rule)) + ": " + why};
}

void expect(bool cond, const CertificateNode& node, const std::string& why)
{
    if (!cond)
        fail(node, why);
}

int as_int(const CertificateNode& node, const std::string& key)
{
    return static_cast<int>(node.integer(key));
}

void expect_children(const CertificateNode& node, std::size_t n)
{
    expect(node.children.size() == n, node,
           "expected " + std::to_string(n) + " children, found " +
               std::to_string(node.children.size()));
}

void expect_claim(const CertificateNode& parent, const CertificateNode& child,
                  const VarietySpec& space, int p, int t)
{
    auto claim = claim_of(child);
    std::ostringstream what;
    what << "child " << to_string(child.rule) << " does not prove H^0(" << space << ", Omega^" << p
         << "(" << t << ")) = 0";
    expect(claim && claim->covers(space, p, t), parent, what.str());
}

void expect_norimatsu(const CertificateNode& parent, const CertificateNode& child, int dim,
                      int components, int a, int t)
{
    bool ok = child.rule == Rule::Norimatsu && as_int(child, "dim") == dim &&
              as_int(child, "components") == components && as_int(child, "a") == a &&
              as_int(child, "t") == t;
    expect(ok, parent,
           "expected Norimatsu child for dim=" + std::to_string(dim) +
               " r=" + std::to_string(components) + " a=" + std::to_string(a) +
               " t=" + std::to_string(t));
}

int sum(const std::vector<int>& v)
{
    int s = 0;
    for (int x : v)
        s += x;
    return s;
}

void check(const CertificateNode& node, const StabilityKb& kb);

void check_leaf(const CertificateNode& node, const StabilityKb& kb)
{
    expect_children(node, 0);
    switch (node.rule) {
    case Rule::BottVanish: {
        int n = as_int(node, "n"), p = as_int(node, "p"), t = as_int(node, "t");
        expect(bott_dim(n, p, t, 0) == 0, node, "h^0 is nonzero");
        break;
    }
    case Rule::SnowVanish:
        expect(quadric_h0_vanishes(as_int(node, "m"), as_int(node, "p"), as_int(node, "t")) ==
                   TriBool::Holds,
               node, "outside t <= p");
        break;
    case Rule::KAN:
        expect(kan_h0_vanishes(as_int(node, "dim"), as_int(node, "a"), as_int(node, "t")) ==
                   TriBool::Holds,
               node, "needs t < 0 and a < dim");
        break;
    case Rule::FanoHodge:
        expect(fano_hodge_vanishes(VarietySpec::parse(node.text("space")), as_int(node, "a")) ==
                   TriBool::Holds,
               node, "needs a >= 1");
        break;
    case Rule::StabilityVanish: {
        const std::string& mode = node.text("mode");
        expect(mode == "strict" || mode == "boundary", node, "unknown mode '" + mode + "'");
        auto m = mode == "strict" ? BoundaryMode::Strict : BoundaryMode::AllowStableBoundary;
        expect(stability_vanishing(VarietySpec::parse(node.text("space")), as_int(node, "a"),
                                   as_int(node, "t"), kb, m) == TriBool::Holds,
               node, "twist not below the stability bound");
        break;
    }
    case Rule::CuppingInjective:
        expect(as_int(node, "components") == 1 && as_int(node, "h11") == 1, node,
               "source rank exceeds h^{1,1}");
        break;
    default:
        fail(node, "not a base predicate");
    }
}

void check_restriction(const CertificateNode& node, const StabilityKb& kb)
{
    auto ambient = VarietySpec::parse(node.text("ambient"));
    int k = as_int(node, "k"), q = as_int(node, "q"), c = as_int(node, "c");
    expect(c < k, node, "needs c < k");
    expect(q >= 0 && q < ambient.dim() - 1, node, "needs q < dim - 1");
    expect(k >= 1 && k < ambient.index(), node, "divisor is not Fano");
    expect_children(node, 1);
    expect_claim(node, node.children[0], ambient, q, c);
    check(node.children[0], kb);
}

void check_residue_split(const CertificateNode& node, const StabilityKb& kb)
{
    auto ambient = VarietySpec::parse(node.text("ambient"));
    int k = as_int(node, "k"), a = as_int(node, "a"), t = as_int(node, "t");
    expect(a >= 1 && a < ambient.dim(), node, "needs 1 <= a < n");
    expect_children(node, 2);
    expect_claim(node, node.children[0], ambient, a, t);

    const CertificateNode& side = node.children[1];
    if (side.rule == Rule::CuppingInjective) {
        expect(a == 1 && t == 0, node, "cupping map only controls (a, t) = (1, 0)");
        expect(ambient.picard_rank_one_known() && as_int(side, "h11") == ambient.h11(), node,
               "h11 does not match the ambient");
    } else {
        auto divisor = divisor_intrinsic_type(ambient, k);
        expect_claim(node, side, divisor, a - 1, t);
    }
    for (const auto& c : node.children)
        check(c, kb);
}

void check_slope_bound(const CertificateNode& node, const StabilityKb& kb)
{
    auto ambient = VarietySpec::parse(node.text("ambient"));
    int k = as_int(node, "k");
    expect(as_int(node, "components") == 1, node, "needs an irreducible divisor");
    expect(ambient.index() > k, node, "pair is not log Fano");
    auto cands = destabilizing_candidates(ambient.dim(), ambient.index(), k);
    expect(as_int(node, "candidates") == static_cast<int>(cands.size()), node,
           "candidate count mismatch");
    expect_children(node, cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const auto& c = node.children[i];
        bool ok = c.rule == Rule::ResidueSplit && c.text("ambient") == ambient.str() &&
                  as_int(c, "k") == k && as_int(c, "a") == cands[i].a &&
                  as_int(c, "t") == cands[i].t;
        expect(ok, node,
               "child " + std::to_string(i) + " does not discharge (a, t) = (" +
                   std::to_string(cands[i].a) + ", " + std::to_string(cands[i].t) + ")");
        check(c, kb);
    }
}

void check_norimatsu(const CertificateNode& node, const StabilityKb& kb)
{
    int dim = as_int(node, "dim"), r = as_int(node, "components");
    int a = as_int(node, "a"), t = as_int(node, "t");
    expect(t < 0, node, "needs t < 0");
    expect(a >= 1 && a < dim, node, "needs 1 <= a < dim");
    expect(r >= 1, node, "needs a component");
    expect_children(node, 2);

    const auto& own = node.children[0];
    const auto& residue = node.children[1];
    if (r == 1) {
        expect(own.rule == Rule::KAN, node, "base case needs a KAN leaf on Y");
        expect_claim(node, own, VarietySpec::abstract_fano(dim, 1), a, t);
    } else {
        expect_norimatsu(node, own, dim, r - 1, a, t);
    }
    // forms of degree 0 on the component: O_D(t), no further residue
    if (r == 1 || a - 1 == 0) {
        expect(residue.rule == Rule::KAN, node, "needs a KAN leaf on the component");
        expect_claim(node, residue, VarietySpec::abstract_fano(dim - 1, 1), a - 1, t);
    } else {
        expect_norimatsu(node, residue, dim - 1, r - 1, a - 1, t);
    }
    check(own, kb);
    check(residue, kb);
}

void check_ample_or_trivial(const CertificateNode& node, const StabilityKb& kb)
{
    auto ambient = VarietySpec::parse(node.text("ambient"));
    auto degrees = split_degrees(node.text("degrees"));
    int k = sum(degrees);
    int n = ambient.dim();
    expect(!degrees.empty(), node, "empty divisor");
    expect(ambient.index() <= k, node, "K_X + D is not ample or trivial");
    expect(ambient.picard_rank_one_known(), node, "needs Pic = Z");
    expect_children(node, static_cast<std::size_t>(n - 1));
    for (int a = 1; a < n; ++a) {
        // largest t with t < a (s - k) / n
        Rational bound = rat(static_cast<long long>(a) * (ambient.index() - k), n);
        int t_max = static_cast<int>(bound.ceil()) - 1;
        expect_norimatsu(node, node.children[a - 1], n, static_cast<int>(degrees.size()), a,
                         t_max);
        check(node.children[a - 1], kb);
    }
}

void check_reducible_witness(const CertificateNode& node, const StabilityKb& kb)
{
    auto ambient = VarietySpec::parse(node.text("ambient"));
    auto degrees = split_degrees(node.text("degrees"));
    int r = static_cast<int>(degrees.size());
    expect(r >= 2, node, "needs at least two components");
    expect(ambient.dim() >= 2, node, "needs dim >= 2");
    expect(ambient.index() > sum(degrees), node, "pair is not log Fano");
    expect(ambient.picard_rank_one_known() && as_int(node, "h11") == 1, node, "needs h11 = 1");
    expect(as_int(node, "h0_lower_bound") == r - 1, node, "lower bound is not r - h11");
    expect_children(node, 1);
    expect_claim(node, node.children[0], ambient, 1, 0);
    check(node.children[0], kb);
}

void check_cover(const CertificateNode& node, const StabilityKb& kb)
{
    auto ambient = VarietySpec::parse(node.text("ambient"));
    auto degrees = split_degrees(node.text("degrees"));
    int twist = -ambient.index();
    for (int k : degrees)
        twist += k - 1;
    expect(as_int(node, "canonical_twist") == twist, node, "canonical twist mismatch");
    expect_children(node, 1);
    const auto& base = node.children[0];
    expect(base.rule == Rule::AmpleOrTrivial && base.text("ambient") == node.text("ambient") &&
               base.text("degrees") == node.text("degrees"),
           node, "child must certify the base pair");
    check(base, kb);
}

void check(const CertificateNode& node, const StabilityKb& kb)
{
    switch (node.rule) {
    case Rule::SlopeBound:
        return check_slope_bound(node, kb);
    case Rule::ResidueSplit:
        return check_residue_split(node, kb);
    case Rule::RestrictionSurjective:
        return check_restriction(node, kb);
    case Rule::Norimatsu:
        return check_norimatsu(node, kb);
    case Rule::AmpleOrTrivial:
        return check_ample_or_trivial(node, kb);
    case Rule::ReducibleWitness:
        return check_reducible_witness(node, kb);
    case Rule::CoverPullback:
        return check_cover(node, kb);
    default:
        return check_leaf(node, kb);
    }
}

} // namespace

ReplayResult replay(const CertificateNode& root, const StabilityKb& kb)
{
    try {
        check(root, kb);
        return {};
    } catch (const ReplayFailure& f) {
        return {false, f.reason};
    } catch (const std::exception& e) {
        return {false, std::string(to_string(root.rule)) + ": " + e.what()};
    }
}

} // namespace semistab
