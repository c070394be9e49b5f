#include "semistab/report.hpp"

#include <sstream>
#include <variant>

#include "json.hpp"

namespace semistab {

namespace {

nlohmann::json row_json(const CaseRow& row)
{
    nlohmann::json j = {{"n", row.n},
                        {"s", row.s},
                        {"k", row.k},
                        {"a", row.a},
                        {"t", row.t},
                        {"status", to_string(row.status)},
                        {"detail", row.detail}};
    j["rule"] = row.rule ? nlohmann::json(to_string(*row.rule)) : nlohmann::json(nullptr);
    return j;
}

void outline(std::ostream& os, const CertificateNode& node, int depth)
{
    os << std::string(2 * static_cast<std::size_t>(depth), ' ') << to_string(node.rule);
    for (const auto& [key, value] : node.inputs) {
        os << ' ' << key << '=';
        std::visit([&](const auto& v) { os << v; }, value);
    }
    os << '\n';
    for (const auto& c : node.children)
        outline(os, c, depth + 1);
}

std::string pairs(const std::vector<std::pair<int, int>>& list)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, k] : list) {
        os << (first ? "" : " ") << "(s=" << s << ",k=" << k << ")";
        first = false;
    }
    return first ? "none" : os.str();
}

} // namespace

std::string format_case_row(const CaseRow& row)
{
    std::ostringstream os;
    os << "n=" << row.n << " s=" << row.s << " k=" << row.k << " a=" << row.a << " t=" << row.t
       << ' ' << to_string(row.status);
    if (row.rule)
        os << ' ' << to_string(*row.rule);
    if (!row.detail.empty())
        os << " (" << row.detail << ')';
    return os.str();
}

std::string verdict_to_json(const LogPair& pair, const Verdict& verdict, int indent)
{
    nlohmann::json j;
    j["outcome"] = to_string(verdict.outcome);
    j["pair"] = {{"ambient", pair.ambient().str()},
                 {"n", pair.dim()},
                 {"s", pair.index()},
                 {"degrees", pair.degrees()},
                 {"slope", slope_log(pair, 1).str()}};
    j["certificate"] = verdict.certificate
                           ? nlohmann::json::parse(certificate_to_json(*verdict.certificate, -1))
                           : nlohmann::json(nullptr);
    if (verdict.witness) {
        const Witness& w = *verdict.witness;
        j["witness"] = {{"a", w.a},
                        {"t", w.t},
                        {"h0_lower_bound", w.h0_lower_bound},
                        {"sheaf_slope", w.sheaf_slope.str()},
                        {"subsheaf_slope", w.subsheaf_slope.str()}};
    } else {
        j["witness"] = nullptr;
    }
    j["residual"] = nlohmann::json::array();
    for (const auto& row : verdict.residual)
        j["residual"].push_back(row_json(row));
    j["note"] = verdict.note;
    return j.dump(indent);
}

std::string verdict_to_text(const LogPair& pair, const Verdict& verdict)
{
    std::ostringstream os;
    os << pair << ": " << to_string(verdict.outcome) << '\n';
    os << "slope mu(Omega(log D)) = " << slope_log(pair, 1) << '\n';
    if (verdict.witness) {
        const Witness& w = *verdict.witness;
        os << "witness: h^0(Omega^" << w.a << "(log D)(" << w.t << ")) >= " << w.h0_lower_bound
           << ", subsheaf slope " << w.subsheaf_slope << " > " << w.sheaf_slope << '\n';
    }
    for (const auto& row : verdict.residual)
        os << "open: " << format_case_row(row) << '\n';
    if (!verdict.note.empty())
        os << "note: " << verdict.note << '\n';
    if (verdict.certificate)
        os << "certificate:\n" << certificate_outline(*verdict.certificate);
    return os.str();
}

std::string certificate_outline(const CertificateNode& node)
{
    std::ostringstream os;
    outline(os, node, 1);
    return os.str();
}

std::string crosscheck_to_text(const DiscrepancyReport& report)
{
    std::ostringstream os;
    os << "n=" << report.n << " statement: " << report.statement << '\n';
    os << "agree: " << pairs(report.agree) << '\n';
    os << "engine resolves, statement excludes: " << pairs(report.engine_only) << '\n';
    os << "statement includes, engine unresolved: " << pairs(report.statement_only) << '\n';
    for (const auto& e : report.entries)
        for (const auto& row : e.open_rows)
            os << "open: " << format_case_row(row) << '\n';
    return os.str();
}

std::string catalog_report_to_text(const CatalogReport& report)
{
    std::ostringstream os;
    for (const auto& r : report.results) {
        os << r.id << ": ";
        if (!r.error.empty())
            os << "error: " << r.error;
        else
            os << to_string(r.verdict.outcome);
        os << '\n';
    }
    os << "semistable=" << report.semistable << " not_semistable=" << report.not_semistable
       << " unknown=" << report.unknown << " errors=" << report.errors << '\n';
    return os.str();
}

} // namespace semistab
