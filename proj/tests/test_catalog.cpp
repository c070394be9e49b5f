#include <sstream>

#include "doctest.h"
#include "semistab/catalog.hpp"
#include "semistab/errors.hpp"

using namespace semistab;

namespace {

std::vector<CatalogEntry> load(const std::string& text)
{
    std::istringstream in(text);
    return load_catalog(in);
}

const char* kRecord = "id = x\nambient = projective\ndim = 3\nindex = 4\n"
                      "components = 2:smooth:irreducible\nsource = test\n";

} // namespace

TEST_CASE("default catalog")
{
    auto entries = default_catalog();
    CHECK(entries.size() == 13);
    int surfaces = 0, threefolds = 0;
    for (const auto& e : entries)
        (e.ambient.dim() == 2 ? surfaces : threefolds) += 1;
    CHECK(surfaces == 3);
    CHECK(threefolds == 10);
    CHECK(entries.back().ambient == VarietySpec::abstract_fano(3, 2));
    CHECK_FALSE(entries.back().note.empty());
}

TEST_CASE("round trip")
{
    auto entries = default_catalog();
    std::ostringstream out;
    write_catalog(out, entries);
    CHECK(out.str() == default_catalog_text());
    CHECK(load(out.str()) == entries);
}

TEST_CASE("loader errors")
{
    CHECK(load("").empty());
    CHECK(load(kRecord).size() == 1);

    try {
        load(std::string(kRecord) + "\nid = y\nambient = projective\ndim = three\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 8);
    }
    CHECK_THROWS_AS(load(std::string(kRecord) + "\n" + kRecord), ValidationError);
    CHECK_THROWS_AS(load("id = z\nambient = projective\ndim = 3\nindex = 4\n"
                         "components = 4:smooth:irreducible\nsource = s\n"),
                    ValidationError);
    CHECK_THROWS_AS(load("id = z\nambient = projective\ndim = 3\nindex = 3\n"
                         "components = 1:smooth:irreducible\nsource = s\n"),
                    ValidationError);
    CHECK_THROWS_AS(load("id = z\nambient = torus\ndim = 3\nindex = 3\n"
                         "components = 1:smooth:irreducible\nsource = s\n"),
                    ParseError);
    CHECK_THROWS_AS(load("id = z\nambient = projective\ndim = 3\nindex = 4\n"
                         "components = 1:smooth\nsource = s\n"),
                    ParseError);
    CHECK_THROWS_AS(load("id = z\nambient = projective\ndim = 3\nindex = 4\n"
                         "components = 1:bumpy:irreducible\nsource = s\n"),
                    ParseError);
    CHECK_THROWS_AS(load("id = z\nambient = projective\ndim = 3\nindex = 4\n"
                         "components = 1:smooth:irreducible\n"),
                    ParseError);
    try {
        load("id = bad\nambient = projective\ndim = 3\nindex = 4\n"
             "components = 2:smooth:irreducible,3:smooth:irreducible\nsource = s\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("bad") != std::string::npos);
    }
}

TEST_CASE("certify catalog")
{
    auto report = certify_catalog(default_catalog());
    CHECK(report.results.size() == 13);
    CHECK(report.errors == 0);
    CHECK(report.unknown == 0);
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        const auto& e = default_catalog()[i];
        auto expected = e.components.size() == 1 ? Outcome::Semistable : Outcome::NotSemistable;
        CHECK(report.results[i].verdict.outcome == expected);
    }
    CHECK(report.semistable == 8);
    CHECK(report.not_semistable == 5);

    auto singular = load("id = s\nambient = projective\ndim = 3\nindex = 4\n"
                         "components = 2:singular:irreducible\nsource = t\n");
    auto bad = certify_catalog(singular);
    CHECK(bad.errors == 1);
    CHECK_FALSE(bad.results[0].error.empty());
}
