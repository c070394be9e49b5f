#include "doctest.h"
#include "semistab/catalog.hpp"
#include "semistab/certificate.hpp"
#include "semistab/certify.hpp"
#include "semistab/covers.hpp"
#include "semistab/errors.hpp"

using namespace semistab;

namespace {

std::vector<CertificateNode> sample_certificates()
{
    std::vector<CertificateNode> out;
    for (const auto& e : default_catalog())
        out.push_back(*certify(e.pair()).certificate);
    out.push_back(*certify(LogPair::smooth(VarietySpec::projective_space(5), {2})).certificate);
    out.push_back(*certify(LogPair::smooth(VarietySpec::quadric(6), {2})).certificate);
    out.push_back(*certify(LogPair::smooth(VarietySpec::projective_space(4), {2, 3})).certificate);
    out.push_back(*cover_verdict(LogPair::smooth(VarietySpec::projective_space(2), {2, 2}))
                       .certificate);
    return out;
}

} // namespace

TEST_CASE("rule names")
{
    for (auto r : {Rule::SlopeBound, Rule::KAN, Rule::Norimatsu, Rule::AmpleOrTrivial,
                   Rule::ResidueSplit, Rule::BottVanish, Rule::SnowVanish, Rule::StabilityVanish,
                   Rule::FanoHodge, Rule::RestrictionSurjective, Rule::CuppingInjective,
                   Rule::ReducibleWitness, Rule::CoverPullback})
        CHECK(rule_from_string(to_string(r)) == r);
    CHECK_THROWS_AS(rule_from_string("Magic"), ParseError);
    CHECK(is_base_predicate(Rule::KAN));
    CHECK_FALSE(is_base_predicate(Rule::ResidueSplit));
}

TEST_CASE("node accessors")
{
    auto leaf = bott_leaf(3, 1, 1);
    CHECK(leaf.integer("n") == 3);
    CHECK_THROWS_AS(leaf.integer("m"), ParseError);
    CHECK_THROWS_AS(leaf.text("n"), ParseError);
    CHECK(leaf.height() == 0);
    CHECK(leaf.size() == 1);
    CHECK(leaf.leaves().size() == 1);
}

TEST_CASE("claims")
{
    auto p3 = VarietySpec::projective_space(3);
    CHECK(claim_of(bott_leaf(3, 1, 1))->covers(p3, 1, 1));
    CHECK_FALSE(claim_of(bott_leaf(3, 1, 1))->covers(p3, 1, 2));
    CHECK(claim_of(kan_leaf(3, 1, -1))->covers(VarietySpec::quadric(3), 1, -1));
    auto r = restriction_node(p3, 2, 1, 1, bott_leaf(3, 1, 1));
    CHECK(claim_of(r)->covers(VarietySpec::quadric(2), 1, 1));
    CHECK_FALSE(claim_of(cupping_leaf(1, 1)));
}

TEST_CASE("JSON round trip and replay")
{
    for (const auto& cert : sample_certificates()) {
        CHECK(replay(cert));
        auto text = certificate_to_json(cert);
        auto back = certificate_from_json(text);
        CHECK(back == cert);
        CHECK(certificate_to_json(back) == text);
        CHECK(replay(back));
    }
}

TEST_CASE("malformed JSON is rejected")
{
    CHECK_THROWS_AS(certificate_from_json("{"), ParseError);
    CHECK_THROWS_AS(certificate_from_json("[]"), ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"rule":"KAN","citation":"","inputs":{}})"),
                    ParseError);
    CHECK_THROWS_AS(
        certificate_from_json(R"({"rule":"Nope","citation":"","inputs":{},"children":[]})"),
        ParseError);
    CHECK_THROWS_AS(
        certificate_from_json(R"({"rule":"KAN","citation":"","inputs":{"a":1.5},"children":[]})"),
        ParseError);
}

TEST_CASE("every twist mutation of a leaf is caught")
{
    for (const auto& cert : sample_certificates()) {
        const std::size_t n = cert.leaves().size();
        for (std::size_t i = 0; i < n; ++i) {
            auto mutated = cert;
            auto* leaf = mutated.leaves()[i];
            for (const char* key : {"t", "a", "p"}) {
                auto it = leaf->inputs.find(key);
                if (it == leaf->inputs.end())
                    continue;
                auto& value = std::get<long long>(it->second);
                value += 1;
                CHECK_FALSE(replay(mutated));
                value -= 1;
            }
        }
    }
}

TEST_CASE("replay rejects broken structure")
{
    auto cert = *certify(LogPair::smooth(VarietySpec::projective_space(3), {2})).certificate;
    auto dropped = cert;
    dropped.children.pop_back();
    CHECK_FALSE(replay(dropped));

    auto relabel = cert;
    relabel.inputs["k"] = 3LL;
    CHECK_FALSE(replay(relabel));

    auto swapped = cert;
    std::swap(swapped.children[0], swapped.children[1]);
    CHECK_FALSE(replay(swapped));

    // a stability leaf without knowledge-base support
    auto f = *certify(LogPair::smooth(VarietySpec::abstract_fano(4, 2), {1})).certificate;
    CHECK(replay(f));
    CHECK_FALSE(replay(f, StabilityKb{}));

    CertificateNode bogus;
    bogus.rule = Rule::BottVanish;
    bogus.inputs = {{"n", 2LL}, {"p", 1LL}, {"t", 2LL}};
    auto res = replay(bogus);
    CHECK_FALSE(res);
    CHECK(res.failure.find("BottVanish") != std::string::npos);
}
