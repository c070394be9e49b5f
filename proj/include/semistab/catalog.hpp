#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "semistab/certify.hpp"

namespace semistab {

/// One classified pair (X, D).
struct CatalogEntry {
    std::string id;
    VarietySpec ambient = VarietySpec::projective_space(2);
    std::vector<DivisorComponent> components;
    std::string source;
    std::string note;

    LogPair pair() const { return LogPair(ambient, components); }

    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Reads key-value records with keys id, ambient (projective | quadric |
/// fano), dim, index, components ("degree:smooth:irreducible" triples,
/// comma separated), source and an optional note.
/// Throws ParseError (with line) on malformed records and ValidationError
/// naming the entry on duplicate ids or pairs that are not log Fano.
std::vector<CatalogEntry> load_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);
/// The shipped classification list: log del Pezzo surfaces and log Fano
/// threefolds of Picard rank one.
std::vector<CatalogEntry> default_catalog();
const std::string& default_catalog_text();

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries);

struct CatalogResult {
    std::string id;
    Verdict verdict;
    std::string error;  ///< set when certification threw
};

struct CatalogReport {
    std::vector<CatalogResult> results;
    int semistable = 0;
    int not_semistable = 0;
    int unknown = 0;
    int errors = 0;
};

/// Certifies every entry; failures are recorded per entry, never thrown.
CatalogReport certify_catalog(const std::vector<CatalogEntry>& entries,
                              const StabilityKb& kb = StabilityKb::builtin());

} // namespace semistab
