#include "semistab/certificate.hpp"

#include <array>
#include <utility>

#include "json.hpp"
#include "semistab/cohomology.hpp"
#include "semistab/errors.hpp"

namespace semistab {

namespace {

constexpr std::array<std::pair<Rule, const char*>, 13> kRuleNames{{
    {Rule::SlopeBound, "SlopeBound"},
    {Rule::KAN, "KAN"},
    {Rule::Norimatsu, "Norimatsu"},
    {Rule::AmpleOrTrivial, "AmpleOrTrivial"},
    {Rule::ResidueSplit, "ResidueSplit"},
    {Rule::BottVanish, "BottVanish"},
    {Rule::SnowVanish, "SnowVanish"},
    {Rule::StabilityVanish, "StabilityVanish"},
    {Rule::FanoHodge, "FanoHodge"},
    {Rule::RestrictionSurjective, "RestrictionSurjective"},
    {Rule::CuppingInjective, "CuppingInjective"},
    {Rule::ReducibleWitness, "ReducibleWitness"},
    {Rule::CoverPullback, "CoverPullback"},
}};

CertificateNode make(Rule rule, std::string citation)
{
    CertificateNode node;
    node.rule = rule;
    node.citation = std::move(citation);
    return node;
}

} // namespace

const char* to_string(Rule rule)
{
    for (const auto& [r, name] : kRuleNames)
        if (r == rule)
            return name;
    return "?";
}

Rule rule_from_string(const std::string& name)
{
    for (const auto& [r, n] : kRuleNames)
        if (name == n)
            return r;
    throw ParseError("unknown rule '" + name + "'", 0);
}

bool is_base_predicate(Rule rule)
{
    switch (rule) {
    case Rule::BottVanish:
    case Rule::SnowVanish:
    case Rule::KAN:
    case Rule::StabilityVanish:
    case Rule::FanoHodge:
    case Rule::CuppingInjective:
        return true;
    default:
        return false;
    }
}

long long CertificateNode::integer(const std::string& key) const
{
    auto it = inputs.find(key);
    if (it == inputs.end() || !std::holds_alternative<long long>(it->second))
        throw ParseError(std::string(to_string(rule)) + " node lacks integer input '" + key + "'",
                         0);
    return std::get<long long>(it->second);
}

const std::string& CertificateNode::text(const std::string& key) const
{
    auto it = inputs.find(key);
    if (it == inputs.end() || !std::holds_alternative<std::string>(it->second))
        throw ParseError(std::string(to_string(rule)) + " node lacks text input '" + key + "'", 0);
    return std::get<std::string>(it->second);
}

int CertificateNode::height() const
{
    int h = 0;
    for (const auto& c : children)
        h = std::max(h, 1 + c.height());
    return h;
}

std::size_t CertificateNode::size() const
{
    std::size_t n = 1;
    for (const auto& c : children)
        n += c.size();
    return n;
}

std::vector<const CertificateNode*> CertificateNode::leaves() const
{
    std::vector<const CertificateNode*> out;
    if (children.empty()) {
        out.push_back(this);
        return out;
    }
    for (const auto& c : children) {
        auto sub = c.leaves();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::vector<CertificateNode*> CertificateNode::leaves()
{
    std::vector<CertificateNode*> out;
    if (children.empty()) {
        out.push_back(this);
        return out;
    }
    for (auto& c : children) {
        auto sub = c.leaves();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

// -- constructors -------------------------------------------------------------

CertificateNode bott_leaf(int n, int p, int t)
{
    auto node = make(Rule::BottVanish, "Bott formula for h^0(P^n, Omega^p(t))");
    node.inputs = {{"n", n}, {"p", p}, {"t", t}};
    return node;
}

CertificateNode snow_leaf(int m, int p, int t)
{
    auto node = make(Rule::SnowVanish, "Snow, Theorem (1) p.174: H^0(Q_m, Omega^p(t)) = 0 for t <= p");
    node.inputs = {{"m", m}, {"p", p}, {"t", t}};
    return node;
}

CertificateNode kan_leaf(int dim, int a, int t)
{
    auto node = make(Rule::KAN,
                     "Kodaira-Akizuki-Nakano (Esnault-Viehweg 1.3 p.4): H^0(Y, Omega^a(t)) = 0 "
                     "for t < 0, a < dim Y");
    node.inputs = {{"dim", dim}, {"a", a}, {"t", t}};
    return node;
}

CertificateNode fano_hodge_leaf(const VarietySpec& space, int a)
{
    auto node = make(Rule::FanoHodge, "Fano varieties are rationally connected: H^0(Omega^a) = 0, a >= 1");
    node.inputs = {{"space", space.str()}, {"a", a}};
    return node;
}

CertificateNode stability_leaf(const VarietySpec& space, int a, int t, bool strict)
{
    auto node = make(Rule::StabilityVanish,
                     "stability of Omega_X from the knowledge base, Maruyama: Omega^a_X semistable; "
                     "H^0(Omega^a_X(t)) = 0 for t < a s / n");
    node.inputs = {{"space", space.str()},
                   {"a", a},
                   {"t", t},
                   {"mode", std::string(strict ? "strict" : "boundary")}};
    return node;
}

CertificateNode cupping_leaf(int components, int h11)
{
    auto node = make(Rule::CuppingInjective,
                     "Peternell-Wisniewski Lemma 2.1: cupping (+) H^0(O_{D_i}) -> H^1(Omega_X) "
                     "injective when r <= h^{1,1}");
    node.inputs = {{"components", components}, {"h11", h11}};
    return node;
}

CertificateNode restriction_node(const VarietySpec& ambient, int k, int q, int c,
                                 CertificateNode ambient_proof)
{
    auto node = make(Rule::RestrictionSurjective,
                     "Peternell-Wisniewski Lemma 2.9 a): H^0(Y, Omega^q(c)) -> H^0(D, Omega^q_D(c)) "
                     "onto for c < k, q < dim Y - 1");
    node.inputs = {{"ambient", ambient.str()}, {"k", k}, {"q", q}, {"c", c}};
    node.children.push_back(std::move(ambient_proof));
    return node;
}

// -- claims -------------------------------------------------------------------

bool VanishingClaim::covers(const VarietySpec& target, int p_, int t_) const
{
    if (p != p_ || t != t_)
        return false;
    if (space)
        return *space == target;
    return dim == target.dim();
}

std::optional<VanishingClaim> claim_of(const CertificateNode& node)
{
    auto with_space = [](VarietySpec v, long long p, long long t) {
        VanishingClaim c;
        c.dim = v.dim();
        c.space = std::move(v);
        c.p = static_cast<int>(p);
        c.t = static_cast<int>(t);
        return c;
    };
    try {
        switch (node.rule) {
        case Rule::BottVanish:
            return with_space(VarietySpec::projective_space(static_cast<int>(node.integer("n"))),
                              node.integer("p"), node.integer("t"));
        case Rule::SnowVanish:
            return with_space(VarietySpec::quadric(static_cast<int>(node.integer("m"))),
                              node.integer("p"), node.integer("t"));
        case Rule::StabilityVanish:
            return with_space(VarietySpec::parse(node.text("space")), node.integer("a"),
                              node.integer("t"));
        case Rule::FanoHodge:
            return with_space(VarietySpec::parse(node.text("space")), node.integer("a"), 0);
        case Rule::RestrictionSurjective: {
            auto ambient = VarietySpec::parse(node.text("ambient"));
            auto d = divisor_intrinsic_type(ambient, static_cast<int>(node.integer("k")));
            return with_space(d, node.integer("q"), node.integer("c"));
        }
        case Rule::KAN: {
            VanishingClaim c;
            c.dim = static_cast<int>(node.integer("dim"));
            c.p = static_cast<int>(node.integer("a"));
            c.t = static_cast<int>(node.integer("t"));
            return c;
        }
        default:
            return std::nullopt;
        }
    } catch (const ArgumentError&) {
        return std::nullopt;
    }
}

// -- JSON ---------------------------------------------------------------------

namespace {

nlohmann::json to_json(const CertificateNode& node)
{
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [key, value] : node.inputs) {
        if (std::holds_alternative<long long>(value))
            inputs[key] = std::get<long long>(value);
        else
            inputs[key] = std::get<std::string>(value);
    }
    nlohmann::json children = nlohmann::json::array();
    for (const auto& c : node.children)
        children.push_back(to_json(c));
    return {{"rule", to_string(node.rule)},
            {"citation", node.citation},
            {"inputs", std::move(inputs)},
            {"children", std::move(children)}};
}

CertificateNode from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ParseError("certificate node must be an object", 0);
    for (const char* key : {"rule", "citation", "inputs", "children"})
        if (!j.contains(key))
            throw ParseError(std::string("certificate node lacks '") + key + "'", 0);
    if (!j["rule"].is_string() || !j["citation"].is_string() || !j["inputs"].is_object() ||
        !j["children"].is_array())
        throw ParseError("certificate node has a field of the wrong type", 0);

    CertificateNode node;
    node.rule = rule_from_string(j["rule"].get<std::string>());
    node.citation = j["citation"].get<std::string>();
    for (const auto& [key, value] : j["inputs"].items()) {
        if (value.is_number_integer())
            node.inputs[key] = value.get<long long>();
        else if (value.is_string())
            node.inputs[key] = value.get<std::string>();
        else
            throw ParseError("input '" + key + "' must be an integer or a string", 0);
    }
    for (const auto& c : j["children"])
        node.children.push_back(from_json(c));
    return node;
}

} // namespace

std::string certificate_to_json(const CertificateNode& node, int indent)
{
    return to_json(node).dump(indent);
}

CertificateNode certificate_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what(), 0);
    }
    return from_json(j);
}

} // namespace semistab
