#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "semistab/catalog.hpp"
#include "semistab/certify.hpp"
#include "semistab/covers.hpp"
#include "semistab/errors.hpp"
#include "semistab/report.hpp"

namespace semistab::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<DivisorComponent> parse_divisor(const std::string& text)
{
    std::vector<DivisorComponent> out;
    std::istringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
        std::istringstream parts(item);
        std::string token;
        DivisorComponent c;
        bool first = true;
        while (std::getline(parts, token, ':')) {
            if (first) {
                std::size_t used = 0;
                try {
                    c.degree = std::stoi(token, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || used != token.size())
                    throw UsageError("bad divisor degree '" + token + "'");
                first = false;
            } else if (token == "singular") {
                c.smooth = false;
            } else if (token == "reducible") {
                c.irreducible = false;
            } else {
                throw UsageError("unknown component flag '" + token + "'");
            }
        }
        if (first)
            throw UsageError("empty divisor component in '" + text + "'");
        out.push_back(c);
    }
    if (out.empty())
        throw UsageError("empty divisor");
    return out;
}

LogPair parse_pair(const std::string& ambient, const std::string& divisor, bool non_snc)
{
    try {
        return LogPair(VarietySpec::parse(ambient), parse_divisor(divisor), !non_snc);
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }
}

int exit_for(Outcome o)
{
    switch (o) {
    case Outcome::Semistable:
        return kOk;
    case Outcome::NotSemistable:
        return kNotSemistable;
    case Outcome::Unknown:
        break;
    }
    return kUnknown;
}

nlohmann::json row_json(const CaseRow& row)
{
    return {{"n", row.n},
            {"s", row.s},
            {"k", row.k},
            {"a", row.a},
            {"t", row.t},
            {"status", to_string(row.status)},
            {"rule", row.rule ? nlohmann::json(to_string(*row.rule)) : nlohmann::json(nullptr)},
            {"detail", row.detail}};
}

nlohmann::json pairs_json(const std::vector<std::pair<int, int>>& list)
{
    auto j = nlohmann::json::array();
    for (const auto& [s, k] : list)
        j.push_back({{"s", s}, {"k", k}});
    return j;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string format = "text";
    std::string kb_path;

    // bott
    int n = 0, p = 0, t = 0, q = 0;
    bool oracle = false;

    // certify, cover
    std::string ambient, divisor;
    bool non_snc = false;

    // table, crosscheck
    int table_n = 0;
    std::optional<int> table_s, table_k;

    // catalog, replay
    std::string file = "default";
};

StabilityKb load_kb(const Options& o)
{
    if (o.kb_path.empty())
        return StabilityKb::builtin();
    return StabilityKb::load_file(o.kb_path);
}

int cmd_bott(const Options& o, std::ostream& out)
{
    auto value = bott_dim(o.n, o.p, o.t, o.q);
    if (!o.oracle) {
        out << value << '\n';
        return kOk;
    }
    auto check = euler_oracle_dim(o.n, o.p, o.t, o.q);
    if (!check) {
        out << value << " ambiguous MISMATCH\n";
        return kMismatch;
    }
    bool same = *check == value;
    out << value << ' ' << *check << (same ? " OK" : " MISMATCH") << '\n';
    return same ? kOk : kMismatch;
}

int cmd_certify(const Options& o, std::ostream& out)
{
    LogPair pair = parse_pair(o.ambient, o.divisor, o.non_snc);
    Verdict v = certify(pair, load_kb(o));
    out << (o.format == "json" ? verdict_to_json(pair, v) + "\n" : verdict_to_text(pair, v));
    return exit_for(v.outcome);
}

int cmd_cover(const Options& o, std::ostream& out)
{
    LogPair base = parse_pair(o.ambient, o.divisor, o.non_snc);
    Verdict v = cover_verdict(base, load_kb(o));
    const int twist = cover_canonical_twist(base.index(), base.degrees());
    const Rational slope = cover_log_slope(base.dim(), base.index(), base.degrees());
    if (o.format == "json") {
        auto j = nlohmann::json::parse(verdict_to_json(base, v));
        j["cover"] = {{"canonical_twist", twist}, {"log_slope", slope.str()}};
        out << j.dump(2) << '\n';
    } else {
        out << "cover of " << base << ": K = pi^*O(" << twist << "), mu(Omega(log D')) = " << slope
            << '\n'
            << verdict_to_text(base, v);
    }
    return exit_for(v.outcome);
}

int cmd_table(const Options& o, std::ostream& out)
{
    if (o.table_s.has_value() != o.table_k.has_value())
        throw UsageError("--s and --k go together");
    StabilityKb kb = load_kb(o);
    std::vector<CaseRow> rows;
    if (o.table_s) {
        rows = case_table(o.table_n, *o.table_s, *o.table_k, kb);
    } else {
        if (o.table_n < 2 || o.table_n > 6)
            throw ArgumentError("case tables cover 2 <= n <= 6");
        for (int s = 2; s <= o.table_n + 1; ++s)
            for (int k = 1; k < s; ++k)
                for (auto& row : case_table(o.table_n, s, k, kb))
                    rows.push_back(std::move(row));
    }
    if (o.format == "json") {
        auto j = nlohmann::json::array();
        for (const auto& row : rows)
            j.push_back(row_json(row));
        out << j.dump(2) << '\n';
    } else {
        for (const auto& row : rows)
            out << format_case_row(row) << '\n';
    }
    return kOk;
}

int cmd_crosscheck(const Options& o, std::ostream& out)
{
    auto report = theorem_crosscheck(o.table_n, load_kb(o));
    if (o.format == "json") {
        nlohmann::json j = {{"n", report.n},
                            {"statement", report.statement},
                            {"agree", pairs_json(report.agree)},
                            {"engine_only", pairs_json(report.engine_only)},
                            {"statement_only", pairs_json(report.statement_only)}};
        auto open = nlohmann::json::array();
        for (const auto& e : report.entries)
            for (const auto& row : e.open_rows)
                open.push_back(row_json(row));
        j["open_rows"] = open;
        out << j.dump(2) << '\n';
    } else {
        out << crosscheck_to_text(report);
    }
    return kOk;
}

std::vector<CatalogEntry> catalog_entries(const Options& o)
{
    return o.file == "default" ? default_catalog() : load_catalog_file(o.file);
}

int cmd_catalog_list(const Options& o, std::ostream& out)
{
    write_catalog(out, catalog_entries(o));
    return kOk;
}

int cmd_catalog_run(const Options& o, std::ostream& out)
{
    auto entries = catalog_entries(o);
    auto report = certify_catalog(entries, load_kb(o));
    if (o.format == "json") {
        auto j = nlohmann::json::array();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& r = report.results[i];
            if (!r.error.empty()) {
                j.push_back({{"id", r.id}, {"error", r.error}});
                continue;
            }
            auto v = nlohmann::json::parse(verdict_to_json(entries[i].pair(), r.verdict));
            v["id"] = r.id;
            j.push_back(v);
        }
        out << j.dump(2) << '\n';
    } else {
        out << catalog_report_to_text(report);
    }
    return kOk;
}

int cmd_replay(const Options& o, std::ostream& out)
{
    const std::string text = read_file(o.file);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    // accept a bare certificate or a full verdict
    if (j.is_object() && j.contains("outcome")) {
        if (!j.contains("certificate") || j["certificate"].is_null())
            throw UsageError("verdict carries no certificate");
        j = j["certificate"];
    }
    CertificateNode root = certificate_from_json(j.dump());
    auto result = replay(root, load_kb(o));
    if (result) {
        out << "OK " << to_string(root.rule) << " nodes=" << root.size()
            << " height=" << root.height() << '\n';
        return kOk;
    }
    out << "FAILED " << result.failure << '\n';
    return kMismatch;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Semistability certificates for logarithmic cotangent bundles", "semistab"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--kb", o.kb_path, "stability knowledge base file (default: built in)");

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* bott = app.add_subcommand("bott", "h^q(P^n, Omega^p(t)) by the Bott formula");
    bott->add_option("n", o.n)->required();
    bott->add_option("p", o.p)->required();
    bott->add_option("t", o.t)->required();
    bott->add_option("q", o.q)->required();
    bott->add_flag("--oracle", o.oracle, "also run the Euler-sequence chase and compare");

    auto* cert = app.add_subcommand("certify", "decide semistability of Omega_X(log D)");
    cert->add_option("--ambient", o.ambient, "Pn, Qn or fano:dim,index")->required();
    cert->add_option("--divisor", o.divisor, "k1[:singular|:reducible],k2,...")->required();
    cert->add_flag("--non-snc", o.non_snc, "components do not cross normally");
    add_format(cert);

    auto* cover = app.add_subcommand("cover", "transfer a verdict to a Kawamata cover");
    cover->add_option("--ambient", o.ambient, "Pn, Qn or fano:dim,index")->required();
    cover->add_option("--divisor", o.divisor, "branch degrees k1,k2,...")->required();
    add_format(cover);

    auto* table = app.add_subcommand("table", "candidate obligations and their resolution");
    table->add_option("--n", o.table_n)->required();
    auto* s_opt = table->add_option("--s", o.table_s);
    auto* k_opt = table->add_option("--k", o.table_k);
    s_opt->needs(k_opt);
    k_opt->needs(s_opt);
    add_format(table);

    auto* cross = app.add_subcommand("crosscheck", "engine against the published hypothesis list");
    cross->add_option("--n", o.table_n)->required();
    add_format(cross);

    auto* catalog = app.add_subcommand("catalog", "classification list of log Fano pairs");
    catalog->require_subcommand(1);
    auto* cat_run = catalog->add_subcommand("run", "certify every entry");
    cat_run->add_option("--file", o.file, "catalog file or 'default'");
    add_format(cat_run);
    auto* cat_list = catalog->add_subcommand("list", "print the catalog records");
    cat_list->add_option("--file", o.file, "catalog file or 'default'");

    auto* rep = app.add_subcommand("replay", "re-check a certificate or verdict JSON file");
    rep->add_option("--file", o.file)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*bott)
            return cmd_bott(o, out);
        if (*cert)
            return cmd_certify(o, out);
        if (*cover)
            return cmd_cover(o, out);
        if (*table)
            return cmd_table(o, out);
        if (*cross)
            return cmd_crosscheck(o, out);
        if (*cat_run)
            return cmd_catalog_run(o, out);
        if (*cat_list)
            return cmd_catalog_list(o, out);
        if (*rep)
            return cmd_replay(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error";
        if (e.line() > 0)
            err << " at line " << e.line();
        err << ": " << e.what() << '\n';
        return kUsage;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace semistab::cli
