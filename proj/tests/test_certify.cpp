#include <set>

#include "doctest.h"
#include "semistab/certify.hpp"
#include "semistab/errors.hpp"

using namespace semistab;

namespace {

LogPair P(int n, std::vector<int> degrees)
{
    return LogPair::smooth(VarietySpec::projective_space(n), degrees);
}

// Integer-only enumeration of 1 <= a < n, 0 <= t with t n < a (s - k).
std::vector<Obligation> scan_candidates(int n, int s, int k)
{
    std::vector<Obligation> out;
    for (int a = 1; a < n; ++a)
        for (int t = 0; t <= s * n; ++t)
            if (t * n < a * (s - k))
                out.push_back({a, t});
    return out;
}

std::set<std::pair<int, int>> unresolved(int n, int s, int k)
{
    std::set<std::pair<int, int>> out;
    for (const auto& row : case_table(n, s, k))
        if (row.status == CaseStatus::Unresolved)
            out.insert({row.a, row.t});
    return out;
}

} // namespace

TEST_CASE("slope of the logarithmic forms")
{
    CHECK(slope_log(P(2, {2}), 1) == rat(-1, 2));
    CHECK(slope_log(P(3, {2, 1}), 2) == rat(-2, 3));
    CHECK(slope_log(P(3, {4}), 3) == 0);
    CHECK_THROWS_AS(slope_log(P(3, {1}), 0), ArgumentError);
    CHECK_THROWS_AS(slope_log(P(3, {1}), 4), ArgumentError);
}

TEST_CASE("destabilizing candidates")
{
    CHECK(destabilizing_candidates(3, 4, 2) == std::vector<Obligation>{{1, 0}, {2, 0}, {2, 1}});
    CHECK(destabilizing_candidates(5, 6, 2) ==
          std::vector<Obligation>{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1},
                                  {4, 2}, {4, 3}});
    CHECK(destabilizing_candidates(3, 2, 1) == std::vector<Obligation>{{1, 0}, {2, 0}});
    CHECK(destabilizing_candidates(1, 2, 1).empty());
    CHECK_THROWS_AS(destabilizing_candidates(3, 4, 4), PreconditionError);

    for (int n = 1; n <= 8; ++n)
        for (int s = 2; s <= n + 1; ++s)
            for (int k = 1; k < s; ++k) {
                auto c = destabilizing_candidates(n, s, k);
                CHECK(c == scan_candidates(n, s, k));
                if (n >= 2)
                    CHECK(c.front() == Obligation{1, 0});
            }
}

TEST_CASE("Norimatsu certificates")
{
    auto cert = norimatsu_certificate(P(3, {1, 1, 1}), 2, -1);
    CHECK(cert.height() == 3);
    for (const auto* leaf : cert.leaves())
        CHECK(leaf->rule == Rule::KAN);
    CHECK(replay(cert));

    auto base = norimatsu_certificate(P(3, {1}), 1, -1);
    CHECK(base.height() == 1);
    CHECK(base.leaves().size() == 2);

    CHECK_THROWS_AS(norimatsu_certificate(P(3, {1}), 1, 0), PreconditionError);
    CHECK_THROWS_AS(norimatsu_certificate(P(3, {1}), 3, -1), PreconditionError);
}

TEST_CASE("ample or trivial verdicts")
{
    auto quartic_p2 = ample_or_trivial_verdict(P(2, {4}));
    REQUIRE(quartic_p2);
    CHECK(quartic_p2->outcome == Outcome::Semistable);
    CHECK(replay(*quartic_p2->certificate));

    auto quartic_p3 = ample_or_trivial_verdict(P(3, {4}));
    REQUIRE(quartic_p3);
    CHECK(replay(*quartic_p3->certificate));
    // largest twist with t < a (s - k) / n = 0
    CHECK(quartic_p3->certificate->children[0].integer("t") == -1);

    auto five = ample_or_trivial_verdict(P(3, {2, 3}));
    REQUIRE(five);
    CHECK(five->certificate->children[1].integer("t") == -1);

    CHECK_FALSE(ample_or_trivial_verdict(P(3, {1})));
    CHECK_FALSE(ample_or_trivial_verdict(
        LogPair::smooth(VarietySpec::abstract_fano(3, 2, false), {3})));
}

TEST_CASE("restriction vanishing")
{
    CHECK(restriction_vanishing(VarietySpec::projective_space(3), 2, 1, 1) == TriBool::Holds);
    CHECK(restriction_vanishing(VarietySpec::projective_space(3), 1, 1, 1) == TriBool::Unknown);
    CHECK(restriction_vanishing(VarietySpec::projective_space(5), 2, 2, 1) == TriBool::Holds);
    CHECK(bott_dim(5, 2, 1, 0) == 0);
    CHECK(restriction_vanishing(VarietySpec::quadric(5), 2, 1, 1) == TriBool::Holds);
    CHECK_THROWS_AS(restriction_vanishing(VarietySpec::projective_space(3), 2, 2, 1),
                    PreconditionError);
    auto cert = restriction_certificate(VarietySpec::projective_space(3), 2, 1, 1);
    REQUIRE(cert);
    CHECK(replay(*cert));
}

TEST_CASE("cupping map")
{
    CHECK(cupping_injective(P(3, {3})) == TriBool::Holds);
    CHECK(cupping_injective(P(2, {1, 1})) == TriBool::Fails);
    CHECK(cupping_injective(P(3, {2, 1})) == TriBool::Fails);
    CHECK_THROWS_AS(cupping_injective(P(3, {3}), 2, 0), PreconditionError);
    CHECK_THROWS_AS(cupping_injective(LogPair::smooth(VarietySpec::quadric(2), {1})),
                    PreconditionError);
}

TEST_CASE("reducible witness")
{
    auto w = reducible_witness(P(2, {1, 1}));
    REQUIRE(w);
    CHECK(w->h0_lower_bound == 1);
    CHECK(w->sheaf_slope == rat(-1, 2));
    CHECK(w->subsheaf_slope > w->sheaf_slope);
    CHECK(reducible_witness(P(3, {1, 1, 1}))->h0_lower_bound == 2);
    CHECK_FALSE(reducible_witness(P(3, {2})));
    CHECK_THROWS_AS(reducible_witness(P(3, {2, 2})), PreconditionError);
}

TEST_CASE("resolving obligations")
{
    auto r = resolve_obligation(P(3, {2}), 2, 1);
    CHECK(r.status == CaseStatus::Resolved);
    CHECK(r.rule == Rule::RestrictionSurjective);
    CHECK(replay(*r.certificate));

    auto snow = resolve_obligation(P(5, {2}), 3, 2);
    CHECK(snow.status == CaseStatus::Resolved);
    CHECK(snow.rule == Rule::SnowVanish);
    CHECK(snow.certificate->children[1].integer("m") == 4);

    auto open = resolve_obligation(LogPair::smooth(VarietySpec::abstract_fano(5, 3), {1}), 3, 1);
    CHECK(open.status == CaseStatus::Unresolved);
    CHECK_FALSE(open.certificate);

    auto plane = resolve_obligation(P(3, {1}), 2, 1);
    CHECK(plane.status == CaseStatus::Resolved);
    CHECK(plane.rule == Rule::BottVanish);

    CHECK_THROWS_AS(resolve_obligation(P(3, {2}), 2, 2), PreconditionError);
    CHECK_THROWS_AS(resolve_obligation(P(3, {1, 1}), 1, 0), PreconditionError);
    CHECK_THROWS_AS(resolve_obligation(P(3, {4}), 1, 0), PreconditionError);
    // discharge does not insist on a candidate
    CHECK(discharge(P(3, {2}), 2, 2).status == CaseStatus::Unresolved);
}

TEST_CASE("certify")
{
    CHECK(certify(P(2, {2})).outcome == Outcome::Semistable);
    CHECK(certify(P(2, {1})).outcome == Outcome::Semistable);
    auto two = certify(P(2, {1, 1}));
    CHECK(two.outcome == Outcome::NotSemistable);
    CHECK(two.witness->h0_lower_bound == 1);
    CHECK(replay(*two.certificate));

    auto f4 = certify(LogPair::smooth(VarietySpec::abstract_fano(4, 2), {1}));
    CHECK(f4.outcome == Outcome::Semistable);
    CHECK(replay(*f4.certificate));

    auto open = certify(LogPair::smooth(VarietySpec::abstract_fano(5, 3), {1}));
    CHECK(open.outcome == Outcome::Unknown);
    REQUIRE(open.residual.size() == 1);
    CHECK(open.residual[0].a == 3);
    CHECK(open.residual[0].t == 1);

    CHECK(certify(LogPair::smooth(VarietySpec::projective_space(1), {1})).outcome ==
          Outcome::Semistable);

    auto pn = VarietySpec::projective_space(3);
    CHECK_THROWS_AS(certify(LogPair(pn, {{1, true, true}, {1, true, true}}, false)),
                    ValidationError);
    CHECK_THROWS_AS(certify(LogPair(pn, {{2, false, true}})), ValidationError);
    CHECK_THROWS_AS(certify(LogPair(pn, {{2, true, false}})), ValidationError);
    CHECK_THROWS_AS(certify(LogPair::smooth(VarietySpec::quadric(2), {1})), ValidationError);
}

TEST_CASE("verdict invariants")
{
    CHECK_THROWS_AS(Verdict::unknown({}), PreconditionError);
    Witness w;
    w.h0_lower_bound = 0;
    CHECK_THROWS_AS(Verdict::not_semistable(w, CertificateNode{}), PreconditionError);
    w.h0_lower_bound = 1;
    w.sheaf_slope = Rational(0);
    w.subsheaf_slope = Rational(0);
    CHECK_THROWS_AS(Verdict::not_semistable(w, CertificateNode{}), PreconditionError);
}

TEST_CASE("generic varieties and case tables")
{
    CHECK(generic_variety(3, 4) == VarietySpec::projective_space(3));
    CHECK(generic_variety(3, 3) == VarietySpec::quadric(3));
    CHECK(generic_variety(2, 2) == VarietySpec::abstract_fano(2, 2));
    CHECK(generic_variety(5, 3) == VarietySpec::abstract_fano(5, 3));
    CHECK_THROWS_AS(generic_variety(3, 5), ArgumentError);

    CHECK(unresolved(5, 3, 1) == std::set<std::pair<int, int>>{{3, 1}});
    CHECK(unresolved(6, 7, 2).empty());
    for (const auto& row : case_table(6, 7, 2))
        if (row.t == row.a - 1 && row.a >= 2)
            CHECK(row.rule == Rule::SnowVanish);
    auto small = case_table(3, 2, 1);
    REQUIRE(small.size() == 2);
    CHECK(small[0].rule == Rule::CuppingInjective);
    CHECK(small[1].rule == Rule::FanoHodge);

    CHECK_THROWS_AS(case_table(7, 3, 1), ArgumentError);
    CHECK_THROWS_AS(case_table(3, 3, 3), ArgumentError);
    CHECK_THROWS_AS(case_table(3, 5, 1), ArgumentError);
}

TEST_CASE("dimensions three and four are fully resolved")
{
    for (int n : {3, 4})
        for (int s = 2; s <= n + 1; ++s)
            for (int k = 1; k < s; ++k)
                CHECK(unresolved(n, s, k).empty());
}

TEST_CASE("published hypothesis and crosscheck")
{
    CHECK(published_hypothesis_includes(2, 3, 1));
    CHECK_FALSE(published_hypothesis_includes(2, 2, 1));
    CHECK(published_hypothesis_includes(5, 3, 2));
    CHECK_FALSE(published_hypothesis_includes(5, 3, 1));
    CHECK(published_hypothesis_includes(6, 5, 3));
    CHECK_FALSE(published_hypothesis_includes(6, 5, 2));
    CHECK_THROWS_AS(published_hypothesis_includes(7, 2, 1), ArgumentError);

    auto three = theorem_crosscheck(3);
    CHECK(three.engine_only.empty());
    CHECK(three.statement_only.empty());
    CHECK(three.agree.size() == 6);

    auto two = theorem_crosscheck(2);
    CHECK(two.statement_only.empty());

    auto six = theorem_crosscheck(6);
    CHECK(std::find(six.engine_only.begin(), six.engine_only.end(), std::pair{5, 2}) !=
          six.engine_only.end());
    CHECK_THROWS_AS(theorem_crosscheck(1), ArgumentError);
}
