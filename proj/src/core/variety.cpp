#include "semistab/variety.hpp"

#include <numeric>
#include <ostream>
#include <regex>
#include <sstream>

#include "semistab/errors.hpp"

namespace semistab {

VarietySpec::VarietySpec(VarietyKind kind, int dim, int index, bool pic_one, int h11)
    : kind_(kind), dim_(dim), index_(index), picard_rank_one_known_(pic_one), h11_(h11)
{
}

VarietySpec VarietySpec::projective_space(int dim)
{
    if (dim < 1)
        throw ArgumentError("projective space needs dim >= 1, got " + std::to_string(dim));
    return VarietySpec(VarietyKind::ProjectiveSpace, dim, dim + 1, true, 1);
}

VarietySpec VarietySpec::quadric(int dim)
{
    if (dim < 2)
        throw ArgumentError("quadric needs dim >= 2, got " + std::to_string(dim));
    // Q_2 = P^1 x P^1
    if (dim == 2)
        return VarietySpec(VarietyKind::Quadric, 2, 2, false, 2);
    return VarietySpec(VarietyKind::Quadric, dim, dim, true, 1);
}

VarietySpec VarietySpec::abstract_fano(int dim, int index, bool picard_rank_one_known)
{
    if (dim < 1)
        throw ArgumentError("variety needs dim >= 1, got " + std::to_string(dim));
    if (index < 1)
        throw ArgumentError("Fano index must be >= 1, got " + std::to_string(index));
    return VarietySpec(VarietyKind::AbstractFano, dim, index, picard_rank_one_known,
                       picard_rank_one_known ? 1 : 0);
}

std::string VarietySpec::str() const
{
    switch (kind_) {
    case VarietyKind::ProjectiveSpace:
        return "P" + std::to_string(dim_);
    case VarietyKind::Quadric:
        return "Q" + std::to_string(dim_);
    case VarietyKind::AbstractFano:
        break;
    }
    std::string s = "F(" + std::to_string(dim_) + "," + std::to_string(index_);
    if (!picard_rank_one_known_)
        s += ";?";
    return s + ")";
}

VarietySpec VarietySpec::parse(const std::string& text)
{
    static const std::regex pn(R"([Pp](\d+))");
    static const std::regex qn(R"([Qq](\d+))");
    static const std::regex fano_cli(R"(fano:(\d+),(\d+))");
    static const std::regex fano_str(R"(F\((\d+),(\d+)(;\?)?\))");
    std::smatch m;
    try {
        if (std::regex_match(text, m, pn))
            return projective_space(std::stoi(m[1]));
        if (std::regex_match(text, m, qn))
            return quadric(std::stoi(m[1]));
        if (std::regex_match(text, m, fano_cli))
            return abstract_fano(std::stoi(m[1]), std::stoi(m[2]));
        if (std::regex_match(text, m, fano_str))
            return abstract_fano(std::stoi(m[1]), std::stoi(m[2]), !m[3].matched);
    } catch (const std::out_of_range&) {
        throw ArgumentError("number out of range in variety '" + text + "'");
    }
    throw ArgumentError("cannot parse variety '" + text + "' (expected Pn, Qn or fano:dim,index)");
}

const char* to_string(VarietyKind kind)
{
    switch (kind) {
    case VarietyKind::ProjectiveSpace:
        return "projective";
    case VarietyKind::Quadric:
        return "quadric";
    case VarietyKind::AbstractFano:
        return "fano";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const VarietySpec& v)
{
    return os << v.str();
}

LogPair::LogPair(VarietySpec ambient, std::vector<DivisorComponent> components, bool snc)
    : ambient_(std::move(ambient)), components_(std::move(components)), snc_(snc)
{
    if (components_.empty())
        throw ArgumentError("divisor needs at least one component");
    for (const auto& c : components_)
        if (c.degree < 1)
            throw ArgumentError("component degree must be >= 1, got " + std::to_string(c.degree));
}

LogPair LogPair::smooth(VarietySpec ambient, const std::vector<int>& degrees)
{
    std::vector<DivisorComponent> comps;
    comps.reserve(degrees.size());
    for (int k : degrees)
        comps.push_back(DivisorComponent{k, true, true});
    return LogPair(std::move(ambient), std::move(comps));
}

int LogPair::total_degree() const noexcept
{
    return std::accumulate(components_.begin(), components_.end(), 0,
                           [](int acc, const DivisorComponent& c) { return acc + c.degree; });
}

std::vector<int> LogPair::degrees() const
{
    std::vector<int> out;
    for (const auto& c : components_)
        out.push_back(c.degree);
    return out;
}

std::string LogPair::str() const
{
    return ambient_.str() + " + [" + join_degrees(degrees()) + "]";
}

std::ostream& operator<<(std::ostream& os, const LogPair& p)
{
    return os << p.str();
}

std::string join_degrees(const std::vector<int>& degrees)
{
    std::string out;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(degrees[i]);
    }
    return out;
}

std::vector<int> split_degrees(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ArgumentError("bad degree '" + item + "'");
        }
        if (used != item.size())
            throw ArgumentError("bad degree '" + item + "'");
        out.push_back(k);
    }
    return out;
}

} // namespace semistab
