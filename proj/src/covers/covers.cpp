#include "semistab/covers.hpp"

#include <string>

#include "semistab/errors.hpp"

namespace semistab {

namespace {

int sum_checked(const std::vector<int>& k_list)
{
    int total = 0;
    for (int k : k_list) {
        if (k < 1)
            throw ArgumentError("branch multiplicity " + std::to_string(k) + " < 1");
        total += k;
    }
    return total;
}

std::vector<CaseRow> base_obligations(const LogPair& base)
{
    std::vector<CaseRow> rows;
    const int n = base.dim(), s = base.index(), k = base.total_degree();
    if (base.log_fano()) {
        for (const auto& c : destabilizing_candidates(base))
            rows.push_back({n, s, k, c.a, c.t, CaseStatus::Unresolved, std::nullopt,
                            "no transfer rule for log Fano bases"});
    }
    if (rows.empty())
        rows.push_back({n, s, k, 1, 0, CaseStatus::Unresolved, std::nullopt,
                        "base is not certified ample-or-trivial"});
    return rows;
}

} // namespace

int cover_canonical_twist(int s, const std::vector<int>& k_list)
{
    int twist = -s;
    for (int k : k_list)
        twist += k - 1;
    return twist;
}

Rational cover_log_slope(int n, int s, const std::vector<int>& k_list)
{
    if (n < 1)
        throw ArgumentError("dimension must be >= 1");
    return rat(static_cast<long long>(sum_checked(k_list)) - s, n);
}

Verdict cover_verdict(const LogPair& base, const StabilityKb&)
{
    if (!base.kd_ample_or_trivial())
        return Verdict::unknown(base_obligations(base),
                                "K + D on the base is not ample or trivial; pullback does not apply");
    auto v = ample_or_trivial_verdict(base);
    if (!v)
        return Verdict::unknown(base_obligations(base),
                                "base " + base.ambient().str() + " does not have Pic = Z known");

    CertificateNode node;
    node.rule = Rule::CoverPullback;
    node.citation = "Kawamata cover: K_X + D' = pi^*(K_Y + D) by the generalised Hurwitz formula; "
                    "pullback of a semistable sheaf under a finite map is semistable (Maruyama)";
    node.inputs = {{"ambient", base.ambient().str()},
                   {"degrees", join_degrees(base.degrees())},
                   {"canonical_twist", cover_canonical_twist(base.index(), base.degrees())}};
    node.children.push_back(std::move(*v->certificate));
    return Verdict::semistable(std::move(node));
}

} // namespace semistab
