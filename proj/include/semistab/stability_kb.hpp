#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semistab {

enum class StabilityStrength { Stable, Semistable };

/// Literature fact: Omega_X is (semi)stable for every Fano X of this
/// dimension with Picard group Z.
struct StabilityFact {
    int dim = 0;
    StabilityStrength strength = StabilityStrength::Semistable;
    std::string citation;

    friend bool operator==(const StabilityFact&, const StabilityFact&) = default;
};

/// Stability knowledge base, keyed by dimension (at most one fact each).
///
/// File format: key-value records (see kv_records.hpp) with keys
/// `dim`, `strength` (stable | semistable) and `citation`.
class StabilityKb {
public:
    StabilityKb() = default;

    /// Throws ParseError on malformed records and ValidationError on a
    /// duplicate dimension or an unknown strength.
    static StabilityKb load(std::istream& in);
    static StabilityKb load_file(const std::string& path);
    /// The shipped knowledge base (dimensions 3 to 6).
    static const StabilityKb& builtin();

    /// Throws ValidationError if the dimension is already present.
    void add(StabilityFact fact);

    std::optional<StabilityFact> find(int dim) const;
    std::vector<StabilityFact> facts() const;
    std::size_t size() const noexcept { return facts_.size(); }

    void write(std::ostream& out) const;

private:
    std::map<int, StabilityFact> facts_;
};

const char* to_string(StabilityStrength s);

} // namespace semistab
