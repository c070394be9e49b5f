#include <algorithm>
#include <sstream>
#include <variant>

#include "semistab/certify.hpp"
#include "semistab/errors.hpp"

namespace semistab {

namespace {

std::string fmt(const VarietySpec& space, int p, int t)
{
    std::ostringstream os;
    os << space << " p=" << p << " t=" << t;
    return os.str();
}

CertificateNode residue_split(const VarietySpec& ambient, int k, int a, int t,
                              CertificateNode ambient_proof, CertificateNode divisor_proof)
{
    CertificateNode node;
    node.rule = Rule::ResidueSplit;
    node.citation = "residue sequence 0 -> Omega^a_X(t) -> Omega^a_X(log D)(t) -> "
                    "Omega^{a-1}_D(t) -> 0";
    node.inputs = {{"ambient", ambient.str()}, {"k", k}, {"a", a}, {"t", t}};
    node.children.push_back(std::move(ambient_proof));
    node.children.push_back(std::move(divisor_proof));
    return node;
}

/// Proof of H^0(X, Omega^a_X(t)) = 0 on the pair's ambient.
std::optional<CertificateNode> ambient_vanishing(const VarietySpec& x, int a, int t,
                                                 const StabilityKb& kb)
{
    if (x.kind() == VarietyKind::ProjectiveSpace)
        return bott_dim(x.dim(), a, t, 0) == 0 ? std::optional(bott_leaf(x.dim(), a, t))
                                               : std::nullopt;
    if (stability_vanishing(x, a, t, kb, BoundaryMode::AllowStableBoundary) == TriBool::Holds) {
        bool strict = stability_vanishing(x, a, t, kb, BoundaryMode::Strict) == TriBool::Holds;
        return stability_leaf(x, a, t, strict);
    }
    if (x.kind() == VarietyKind::Quadric && x.dim() >= 3 &&
        quadric_h0_vanishes(x.dim(), a, t) == TriBool::Holds)
        return snow_leaf(x.dim(), a, t);
    return std::nullopt;
}

/// Standard embedding of a divisor type: quadrics in P^{m+1} with k = 2,
/// P^m as a hyperplane, and an abstract divisor in the pair's ambient.
std::pair<VarietySpec, int> own_embedding(const VarietySpec& d, const VarietySpec& x, int k)
{
    switch (d.kind()) {
    case VarietyKind::Quadric:
        return {VarietySpec::projective_space(d.dim() + 1), 2};
    case VarietyKind::ProjectiveSpace:
        return {VarietySpec::projective_space(d.dim() + 1), 1};
    case VarietyKind::AbstractFano:
        break;
    }
    return {x, k};
}

/// Proof of H^0(D, Omega^p_D(t)) = 0, p >= 1, t >= 0, with the deciding rule.
std::optional<CertificateNode> divisor_vanishing(const VarietySpec& x, int k, const VarietySpec& d,
                                                 int p, int t, const StabilityKb& kb)
{
    if (t < 0 && kan_h0_vanishes(d.dim(), p, t) == TriBool::Holds)
        return kan_leaf(d.dim(), p, t);
    if (t == 0 && fano_hodge_vanishes(d, p) == TriBool::Holds)
        return fano_hodge_leaf(d, p);
    if (d.kind() == VarietyKind::ProjectiveSpace && bott_dim(d.dim(), p, t, 0) == 0)
        return bott_leaf(d.dim(), p, t);
    if (d.dim() >= 3 && p < d.dim() &&
        stability_vanishing(d, p, t, kb, BoundaryMode::Strict) == TriBool::Holds)
        return stability_leaf(d, p, t, true);
    if (d.kind() == VarietyKind::Quadric && d.dim() >= 3 && p < d.dim() &&
        quadric_h0_vanishes(d.dim(), p, t) == TriBool::Holds)
        return snow_leaf(d.dim(), p, t);
    auto [y, ky] = own_embedding(d, x, k);
    if (ky < y.index() && p < y.dim() - 1)
        return restriction_certificate(y, ky, p, t, kb);
    return std::nullopt;
}

std::string leaf_detail(const CertificateNode& node)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, value] : node.inputs) {
        if (!first)
            os << ' ';
        first = false;
        os << key << '=';
        std::visit([&](const auto& v) { os << v; }, value);
    }
    return os.str();
}

CaseRow row_of(const LogPair& pair, int a, int t, const Resolution& res)
{
    CaseRow row;
    row.n = pair.dim();
    row.s = pair.index();
    row.k = pair.total_degree();
    row.a = a;
    row.t = t;
    row.status = res.status;
    row.rule = res.rule;
    row.detail = res.detail;
    return row;
}

void require_pic_one(const VarietySpec& x, const char* what)
{
    if (!x.picard_rank_one_known())
        throw PreconditionError(std::string(what) + " needs Pic = Z, unknown for " + x.str());
}

int t_max(int a, int s, int k, int n)
{
    return static_cast<int>(rat(static_cast<long long>(a) * (s - k), n).ceil()) - 1;
}

} // namespace

const char* to_string(CaseStatus s)
{
    return s == CaseStatus::Resolved ? "Resolved" : "Unresolved";
}

const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::Semistable:
        return "Semistable";
    case Outcome::NotSemistable:
        return "NotSemistable";
    case Outcome::Unknown:
        return "Unknown";
    }
    return "?";
}

Verdict Verdict::semistable(CertificateNode proof)
{
    Verdict v;
    v.outcome = Outcome::Semistable;
    v.certificate = std::move(proof);
    return v;
}

Verdict Verdict::not_semistable(Witness witness, CertificateNode derivation)
{
    if (witness.h0_lower_bound < 1)
        throw PreconditionError("witness needs h0_lower_bound >= 1");
    if (!(witness.subsheaf_slope > witness.sheaf_slope))
        throw PreconditionError("witness subsheaf slope " + witness.subsheaf_slope.str() +
                                " does not exceed " + witness.sheaf_slope.str());
    Verdict v;
    v.outcome = Outcome::NotSemistable;
    v.witness = std::move(witness);
    v.certificate = std::move(derivation);
    return v;
}

Verdict Verdict::unknown(std::vector<CaseRow> residual, std::string note)
{
    if (residual.empty())
        throw PreconditionError("Unknown verdict needs a residual obligation");
    Verdict v;
    v.outcome = Outcome::Unknown;
    v.residual = std::move(residual);
    v.note = std::move(note);
    return v;
}

Rational slope_log(const LogPair& pair, int a)
{
    if (a < 1 || a > pair.dim())
        throw ArgumentError("form degree " + std::to_string(a) + " outside [1, " +
                            std::to_string(pair.dim()) + "]");
    return rat(static_cast<long long>(a) * (pair.total_degree() - pair.index()), pair.dim());
}

std::vector<Obligation> destabilizing_candidates(int n, int s, int k)
{
    if (n < 1)
        throw ArgumentError("dimension must be >= 1");
    if (s <= k)
        throw PreconditionError("pair is not log Fano (s=" + std::to_string(s) +
                                ", k=" + std::to_string(k) + ")");
    std::vector<Obligation> out;
    for (int a = 1; a < n; ++a) {
        const Rational bound = rat(static_cast<long long>(a) * (s - k), n);
        for (int t = 0; Rational(t) < bound; ++t)
            out.push_back({a, t});
    }
    return out;
}

std::vector<Obligation> destabilizing_candidates(const LogPair& pair)
{
    return destabilizing_candidates(pair.dim(), pair.index(), pair.total_degree());
}

CertificateNode norimatsu_certificate(int dim, int components, int a, int t)
{
    if (t >= 0)
        throw PreconditionError("Norimatsu vanishing needs t < 0, got t=" + std::to_string(t));
    if (a < 1 || a >= dim)
        throw PreconditionError("Norimatsu vanishing needs 1 <= a < dim, got a=" +
                                std::to_string(a) + ", dim=" + std::to_string(dim));
    if (components < 1)
        throw PreconditionError("Norimatsu vanishing needs a component");

    CertificateNode node;
    node.rule = Rule::Norimatsu;
    node.citation = "Norimatsu, Esnault-Viehweg 6.7: H^0(Omega^a_Y(log D)(t)) = 0 for t < 0, "
                    "induction on the number of components";
    node.inputs = {{"dim", dim}, {"components", components}, {"a", a}, {"t", t}};
    if (components == 1) {
        node.children.push_back(kan_leaf(dim, a, t));
        node.children.push_back(kan_leaf(dim - 1, a - 1, t));
    } else {
        node.children.push_back(norimatsu_certificate(dim, components - 1, a, t));
        node.children.push_back(a == 1 ? kan_leaf(dim - 1, 0, t)
                                       : norimatsu_certificate(dim - 1, components - 1, a - 1, t));
    }
    return node;
}

CertificateNode norimatsu_certificate(const LogPair& pair, int a, int t)
{
    return norimatsu_certificate(pair.dim(), pair.num_components(), a, t);
}

std::optional<Verdict> ample_or_trivial_verdict(const LogPair& pair)
{
    if (pair.log_fano() || !pair.ambient().picard_rank_one_known())
        return std::nullopt;
    const int n = pair.dim();
    CertificateNode node;
    node.rule = Rule::AmpleOrTrivial;
    node.citation = "K_X + D ample or trivial: every candidate twist t < a (s - k) / n <= 0, "
                    "covered by Norimatsu vanishing at the largest such t";
    node.inputs = {{"ambient", pair.ambient().str()},
                   {"degrees", join_degrees(pair.degrees())},
                   {"k", pair.total_degree()}};
    for (int a = 1; a < n; ++a)
        node.children.push_back(
            norimatsu_certificate(pair, a, t_max(a, pair.index(), pair.total_degree(), n)));
    return Verdict::semistable(std::move(node));
}

std::optional<CertificateNode> restriction_certificate(const VarietySpec& ambient, int k, int q,
                                                       int c, const StabilityKb& kb)
{
    if (q >= ambient.dim() - 1)
        throw PreconditionError("restriction needs q < dim - 1, got q=" + std::to_string(q) +
                                " on " + ambient.str());
    if (c >= k || q < 1 || k >= ambient.index())
        return std::nullopt;
    std::optional<CertificateNode> source;
    if (ambient.kind() == VarietyKind::ProjectiveSpace) {
        if (bott_dim(ambient.dim(), q, c, 0) == 0)
            source = bott_leaf(ambient.dim(), q, c);
    } else if (ambient.kind() == VarietyKind::Quadric && ambient.dim() >= 3 &&
               quadric_h0_vanishes(ambient.dim(), q, c) == TriBool::Holds) {
        source = snow_leaf(ambient.dim(), q, c);
    } else if (stability_vanishing(ambient, q, c, kb) == TriBool::Holds) {
        bool strict = stability_vanishing(ambient, q, c, kb, BoundaryMode::Strict) == TriBool::Holds;
        source = stability_leaf(ambient, q, c, strict);
    }
    if (!source)
        return std::nullopt;
    return restriction_node(ambient, k, q, c, std::move(*source));
}

TriBool restriction_vanishing(const VarietySpec& ambient, int k, int q, int c,
                              const StabilityKb& kb)
{
    return restriction_certificate(ambient, k, q, c, kb) ? TriBool::Holds : TriBool::Unknown;
}

TriBool cupping_injective(const LogPair& pair, int a, int t)
{
    if (a != 1 || t != 0)
        throw PreconditionError("cupping map only controls (a, t) = (1, 0)");
    require_pic_one(pair.ambient(), "cupping map");
    return pair.num_components() <= pair.ambient().h11() ? TriBool::Holds : TriBool::Fails;
}

std::optional<std::pair<Witness, CertificateNode>> reducible_witness_certificate(const LogPair& pair)
{
    require_pic_one(pair.ambient(), "reducible witness");
    if (!pair.log_fano())
        throw PreconditionError("reducible witness needs a log Fano pair");
    if (pair.dim() < 2)
        throw PreconditionError("reducible witness needs dim >= 2");
    const int r = pair.num_components();
    if (r < 2)
        return std::nullopt;

    Witness w;
    w.a = 1;
    w.t = 0;
    w.h0_lower_bound = r - pair.ambient().h11();
    w.sheaf_slope = slope_log(pair, 1);
    w.subsheaf_slope = Rational(0);

    CertificateNode node;
    node.rule = Rule::ReducibleWitness;
    node.citation = "0 -> H^0(Omega_X) -> H^0(Omega_X(log D)) -> (+) H^0(O_{D_i}) -> "
                    "H^1(Omega_X), h^{1,1} = 1: O_X is a destabilizing subsheaf";
    node.inputs = {{"ambient", pair.ambient().str()},
                   {"degrees", join_degrees(pair.degrees())},
                   {"h11", pair.ambient().h11()},
                   {"h0_lower_bound", w.h0_lower_bound}};
    node.children.push_back(fano_hodge_leaf(pair.ambient(), 1));
    return std::pair{w, std::move(node)};
}

std::optional<Witness> reducible_witness(const LogPair& pair)
{
    auto res = reducible_witness_certificate(pair);
    if (!res)
        return std::nullopt;
    return res->first;
}

Resolution discharge(const LogPair& pair, int a, int t, const StabilityKb& kb)
{
    const VarietySpec& x = pair.ambient();
    const int n = pair.dim();
    const int k = pair.total_degree();
    if (a < 1 || a >= n)
        throw PreconditionError("obligation needs 1 <= a < n, got a=" + std::to_string(a));
    if (t < 0)
        throw PreconditionError("obligation needs t >= 0, got t=" + std::to_string(t));

    Resolution res;
    auto ambient_proof = ambient_vanishing(x, a, t, kb);
    if (!ambient_proof) {
        res.detail = "ambient " + fmt(x, a, t) + " open";
        return res;
    }

    std::optional<CertificateNode> side;
    if (a == 1) {
        // H^0(O_D(t)) is never zero for t >= 0; only the cupping map helps
        if (t == 0 && pair.num_components() == 1 && x.picard_rank_one_known() &&
            cupping_injective(pair) == TriBool::Holds) {
            side = cupping_leaf(1, x.h11());
            res.detail = "cupping r=1 h11=" + std::to_string(x.h11());
        } else {
            res.detail = "divisor H^0(O_D(" + std::to_string(t) + ")) nonzero";
        }
    } else if (k >= x.index() || n < 2) {
        res.detail = "divisor is not Fano";
    } else {
        const VarietySpec d = divisor_intrinsic_type(x, k);
        side = divisor_vanishing(x, k, d, a - 1, t, kb);
        if (side)
            res.detail = side->rule == Rule::RestrictionSurjective
                             ? leaf_detail(*side) + " via " + leaf_detail(side->children[0])
                             : leaf_detail(*side);
        else
            res.detail = "divisor " + fmt(d, a - 1, t) + " open";
    }
    if (!side)
        return res;

    res.status = CaseStatus::Resolved;
    res.rule = side->rule;
    res.certificate = residue_split(x, k, a, t, std::move(*ambient_proof), std::move(*side));
    return res;
}

Resolution resolve_obligation(const LogPair& pair, int a, int t, const StabilityKb& kb)
{
    if (!pair.log_fano())
        throw PreconditionError("obligations exist only for log Fano pairs");
    if (pair.num_components() != 1)
        throw PreconditionError("obligations are resolved for an irreducible divisor; "
                                "reducible pairs go through the witness");
    auto cands = destabilizing_candidates(pair);
    if (std::find(cands.begin(), cands.end(), Obligation{a, t}) == cands.end())
        throw PreconditionError("(a, t) = (" + std::to_string(a) + ", " + std::to_string(t) +
                                ") is not a destabilizing candidate");
    return discharge(pair, a, t, kb);
}

Verdict certify(const LogPair& pair, const StabilityKb& kb)
{
    if (!pair.snc())
        throw ValidationError("divisor " + pair.str() + " is not simple normal crossing");
    for (const auto& c : pair.components()) {
        if (!c.smooth)
            throw ValidationError("component of degree " + std::to_string(c.degree) +
                                  " in " + pair.str() + " is singular");
        if (!c.irreducible)
            throw ValidationError("component of degree " + std::to_string(c.degree) + " in " +
                                  pair.str() + " is reducible; list its parts separately");
    }
    if (!pair.ambient().picard_rank_one_known())
        throw ValidationError("ambient " + pair.ambient().str() +
                              " does not have Picard rank one known");

    if (auto v = ample_or_trivial_verdict(pair))
        return *v;
    if (pair.num_components() >= 2) {
        auto w = reducible_witness_certificate(pair);
        return Verdict::not_semistable(w->first, std::move(w->second));
    }

    auto cands = destabilizing_candidates(pair);
    CertificateNode root;
    root.rule = Rule::SlopeBound;
    root.citation = "a subsheaf O(-t) -> Omega^a_X(log D) destabilizes only if "
                    "t < a (s - k) / n; each candidate is excluded by the residue sequence";
    root.inputs = {{"ambient", pair.ambient().str()},
                   {"k", pair.total_degree()},
                   {"components", pair.num_components()},
                   {"candidates", static_cast<long long>(cands.size())}};
    std::vector<CaseRow> open;
    for (const auto& c : cands) {
        auto res = discharge(pair, c.a, c.t, kb);
        if (res.status == CaseStatus::Resolved)
            root.children.push_back(std::move(*res.certificate));
        else
            open.push_back(row_of(pair, c.a, c.t, res));
    }
    if (!open.empty())
        return Verdict::unknown(std::move(open), "no vanishing rule decides these obligations");
    return Verdict::semistable(std::move(root));
}

} // namespace semistab
