#include <string>

#include "semistab/certify.hpp"
#include "semistab/errors.hpp"

namespace semistab {

namespace {

void check_table_dim(int n)
{
    if (n < 2 || n > 6)
        throw ArgumentError("case tables cover 2 <= n <= 6, got n=" + std::to_string(n));
}

} // namespace

VarietySpec generic_variety(int n, int s)
{
    if (n < 1 || s < 1 || s > n + 1)
        throw ArgumentError("need 1 <= s <= n + 1, got n=" + std::to_string(n) +
                            ", s=" + std::to_string(s));
    if (s == n + 1)
        return VarietySpec::projective_space(n);
    if (s == n && n >= 3)
        return VarietySpec::quadric(n);
    return VarietySpec::abstract_fano(n, s);
}

std::vector<CaseRow> case_table(int n, int s, int k, const StabilityKb& kb)
{
    check_table_dim(n);
    if (k <= 0 || k >= s || s > n + 1)
        throw ArgumentError("need 0 < k < s <= n + 1, got s=" + std::to_string(s) +
                            ", k=" + std::to_string(k));
    const LogPair pair = LogPair::smooth(generic_variety(n, s), {k});
    std::vector<CaseRow> rows;
    for (const auto& c : destabilizing_candidates(pair)) {
        auto res = resolve_obligation(pair, c.a, c.t, kb);
        rows.push_back({n, s, k, c.a, c.t, res.status, res.rule, res.detail});
    }
    return rows;
}

bool published_hypothesis_includes(int n, int s, int k)
{
    check_table_dim(n);
    switch (n) {
    case 2:
        return s == 3;
    case 3:
        return s <= 4;
    case 4:
        return s <= 5;
    case 5:
        return s == 2 || s == 5 || s == 6 || (s == 3 && k == 2) || (s == 4 && k == 3);
    default:
        return s <= 4 || s == 6 || s == 7 || (s == 5 && (k == 4 || k == 3));
    }
}

std::string published_hypothesis_text(int n)
{
    check_table_dim(n);
    switch (n) {
    case 2:
        return "n=2 and s=3";
    case 3:
        return "n=3 and s<=4";
    case 4:
        return "n=4 and s<=5";
    case 5:
        return "n=5 and s=2,5,6 or (s,k)=(3,2),(4,3)";
    default:
        return "n=6 and s<=4, s=6,7 or (s,k)=(5,4),(5,3)";
    }
}

DiscrepancyReport theorem_crosscheck(int n, const StabilityKb& kb)
{
    check_table_dim(n);
    DiscrepancyReport report;
    report.n = n;
    report.statement = published_hypothesis_text(n);
    for (int s = 2; s <= n + 1; ++s) {
        for (int k = 1; k < s; ++k) {
            CrosscheckEntry e;
            e.s = s;
            e.k = k;
            e.statement_includes = published_hypothesis_includes(n, s, k);
            for (auto& row : case_table(n, s, k, kb))
                if (row.status == CaseStatus::Unresolved)
                    e.open_rows.push_back(std::move(row));
            e.engine_resolves = e.open_rows.empty();
            if (e.engine_resolves == e.statement_includes)
                report.agree.emplace_back(s, k);
            else if (e.engine_resolves)
                report.engine_only.emplace_back(s, k);
            else
                report.statement_only.emplace_back(s, k);
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

} // namespace semistab
