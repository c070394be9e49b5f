#include "semistab/catalog.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "semistab/errors.hpp"
#include "semistab/kv_records.hpp"

namespace semistab {

// generated from data/default_catalog.txt
extern const char* const kDefaultCatalog;

namespace {

int parse_int(const std::string& text, const char* key, int line)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw ParseError(std::string("bad integer for ") + key + ": '" + text + "'", line);
    return value;
}

bool parse_flag(const std::string& text, const char* yes, const char* no, int line)
{
    if (text == yes)
        return true;
    if (text == no)
        return false;
    throw ParseError("expected '" + std::string(yes) + "' or '" + no + "', got '" + text + "'",
                     line);
}

std::vector<DivisorComponent> parse_components(const std::string& text, int line)
{
    std::vector<DivisorComponent> out;
    std::istringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
        std::istringstream parts(item);
        std::string degree, smooth, irreducible, extra;
        if (!std::getline(parts, degree, ':') || !std::getline(parts, smooth, ':') ||
            !std::getline(parts, irreducible, ':') || std::getline(parts, extra, ':'))
            throw ParseError("component '" + item + "' is not degree:smooth:irreducible", line);
        DivisorComponent c;
        c.degree = parse_int(degree, "component degree", line);
        c.smooth = parse_flag(smooth, "smooth", "singular", line);
        c.irreducible = parse_flag(irreducible, "irreducible", "reducible", line);
        out.push_back(c);
    }
    if (out.empty())
        throw ParseError("empty component list", line);
    return out;
}

VarietySpec parse_ambient(const KvRecord& rec, const std::string& id)
{
    const std::string& kind = rec.require("ambient");
    const int dim = parse_int(rec.require("dim"), "dim", rec.first_line);
    const int index = parse_int(rec.require("index"), "index", rec.first_line);
    try {
        if (kind == "projective") {
            if (index != dim + 1)
                throw ValidationError("entry '" + id + "': P" + std::to_string(dim) +
                                      " has index " + std::to_string(dim + 1));
            return VarietySpec::projective_space(dim);
        }
        if (kind == "quadric") {
            if (index != dim)
                throw ValidationError("entry '" + id + "': Q" + std::to_string(dim) +
                                      " has index " + std::to_string(dim));
            return VarietySpec::quadric(dim);
        }
        if (kind == "fano")
            return VarietySpec::abstract_fano(dim, index);
    } catch (const ArgumentError& e) {
        throw ValidationError("entry '" + id + "': " + e.what());
    }
    throw ParseError("unknown ambient kind '" + kind + "'", rec.first_line);
}

std::string format_components(const std::vector<DivisorComponent>& components)
{
    std::string out;
    for (const auto& c : components) {
        if (!out.empty())
            out += ',';
        out += std::to_string(c.degree);
        out += c.smooth ? ":smooth" : ":singular";
        out += c.irreducible ? ":irreducible" : ":reducible";
    }
    return out;
}

const char* ambient_kind(const VarietySpec& v)
{
    switch (v.kind()) {
    case VarietyKind::ProjectiveSpace:
        return "projective";
    case VarietyKind::Quadric:
        return "quadric";
    case VarietyKind::AbstractFano:
        break;
    }
    return "fano";
}

} // namespace

std::vector<CatalogEntry> load_catalog(std::istream& in)
{
    std::vector<CatalogEntry> entries;
    std::set<std::string> ids;
    for (const auto& rec : parse_kv_records(in)) {
        CatalogEntry e;
        e.id = rec.require("id");
        if (!ids.insert(e.id).second)
            throw ValidationError("duplicate catalog id '" + e.id + "'");
        e.ambient = parse_ambient(rec, e.id);
        e.components = parse_components(rec.require("components"), rec.first_line);
        e.source = rec.require("source");
        if (const auto* note = rec.find("note"))
            e.note = *note;

        LogPair pair(e.ambient, e.components);
        if (!pair.log_fano())
            throw ValidationError("entry '" + e.id + "' is not log Fano: index " +
                                  std::to_string(pair.index()) + " <= total degree " +
                                  std::to_string(pair.total_degree()));
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open catalog '" + path + "'");
    return load_catalog(in);
}

const std::string& default_catalog_text()
{
    static const std::string text(kDefaultCatalog);
    return text;
}

std::vector<CatalogEntry> default_catalog()
{
    std::istringstream in(default_catalog_text());
    return load_catalog(in);
}

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries)
{
    bool first = true;
    for (const auto& e : entries) {
        if (!first)
            out << '\n';
        first = false;
        KvRecord rec;
        rec.fields = {{"id", e.id},
                      {"ambient", ambient_kind(e.ambient)},
                      {"dim", std::to_string(e.ambient.dim())},
                      {"index", std::to_string(e.ambient.index())},
                      {"components", format_components(e.components)},
                      {"source", e.source}};
        if (!e.note.empty())
            rec.fields.emplace_back("note", e.note);
        write_kv_record(out, rec);
    }
}

CatalogReport certify_catalog(const std::vector<CatalogEntry>& entries, const StabilityKb& kb)
{
    CatalogReport report;
    for (const auto& e : entries) {
        CatalogResult r;
        r.id = e.id;
        try {
            r.verdict = certify(e.pair(), kb);
            switch (r.verdict.outcome) {
            case Outcome::Semistable:
                ++report.semistable;
                break;
            case Outcome::NotSemistable:
                ++report.not_semistable;
                break;
            case Outcome::Unknown:
                ++report.unknown;
                break;
            }
        } catch (const std::exception& ex) {
            r.error = ex.what();
            ++report.errors;
        }
        report.results.push_back(std::move(r));
    }
    return report;
}

} // namespace semistab
