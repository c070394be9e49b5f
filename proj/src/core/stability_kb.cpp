#include "semistab/stability_kb.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "semistab/errors.hpp"
#include "semistab/kv_records.hpp"

namespace semistab {

// generated from data/stability_kb.txt
extern const char* const kBuiltinStabilityKb;

const char* to_string(StabilityStrength s)
{
    return s == StabilityStrength::Stable ? "stable" : "semistable";
}

StabilityKb StabilityKb::load(std::istream& in)
{
    StabilityKb kb;
    for (const auto& rec : parse_kv_records(in)) {
        StabilityFact fact;
        const std::string& dim = rec.require("dim");
        try {
            fact.dim = std::stoi(dim);
        } catch (const std::exception&) {
            throw ParseError("bad dim '" + dim + "'", rec.first_line);
        }
        const std::string& strength = rec.require("strength");
        if (strength == "stable")
            fact.strength = StabilityStrength::Stable;
        else if (strength == "semistable")
            fact.strength = StabilityStrength::Semistable;
        else
            throw ValidationError("dim " + dim + ": unknown strength '" + strength + "'");
        fact.citation = rec.require("citation");
        kb.add(std::move(fact));
    }
    return kb;
}

StabilityKb StabilityKb::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open stability knowledge base '" + path + "'");
    return load(in);
}

const StabilityKb& StabilityKb::builtin()
{
    static const StabilityKb kb = [] {
        std::istringstream in(kBuiltinStabilityKb);
        return load(in);
    }();
    return kb;
}

void StabilityKb::add(StabilityFact fact)
{
    if (fact.dim < 1)
        throw ValidationError("stability fact with dim " + std::to_string(fact.dim));
    int dim = fact.dim;
    if (!facts_.emplace(dim, std::move(fact)).second)
        throw ValidationError("duplicate stability fact for dim " + std::to_string(dim));
}

std::optional<StabilityFact> StabilityKb::find(int dim) const
{
    auto it = facts_.find(dim);
    if (it == facts_.end())
        return std::nullopt;
    return it->second;
}

std::vector<StabilityFact> StabilityKb::facts() const
{
    std::vector<StabilityFact> out;
    for (const auto& [dim, f] : facts_)
        out.push_back(f);
    return out;
}

void StabilityKb::write(std::ostream& out) const
{
    bool first = true;
    for (const auto& [dim, f] : facts_) {
        if (!first)
            out << '\n';
        first = false;
        out << "dim = " << f.dim << '\n'
            << "strength = " << to_string(f.strength) << '\n'
            << "citation = " << f.citation << '\n';
    }
}

} // namespace semistab
