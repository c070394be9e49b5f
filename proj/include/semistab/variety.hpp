#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "semistab/rational.hpp"

namespace semistab {

enum class VarietyKind { ProjectiveSpace, Quadric, AbstractFano };

/// Intrinsic description of a smooth projective variety with K_X = O_X(-index).
///
/// Only (kind, dim, index) and the Picard data are ever consulted. An
/// AbstractFano has no geometric model behind it.
class VarietySpec {
public:
    /// P^n, index n+1.
    static VarietySpec projective_space(int dim);
    /// Smooth quadric Q_n in P^{n+1}, index n. Q_2 has Picard rank two.
    static VarietySpec quadric(int dim);
    /// Fano of the given dimension and index. When the Picard rank is not
    /// known to be one, h11 is recorded as 0 (undetermined).
    static VarietySpec abstract_fano(int dim, int index, bool picard_rank_one_known = true);

    VarietyKind kind() const noexcept { return kind_; }
    int dim() const noexcept { return dim_; }
    int index() const noexcept { return index_; }
    bool picard_rank_one_known() const noexcept { return picard_rank_one_known_; }
    int h11() const noexcept { return h11_; }

    /// "P3", "Q5", "F(4,2)" and so on; inverse of parse().
    std::string str() const;
    /// Accepts "Pn", "Qn", "fano:dim,index" and the str() form "F(dim,index)".
    static VarietySpec parse(const std::string& text);

    friend bool operator==(const VarietySpec&, const VarietySpec&) = default;

private:
    VarietySpec(VarietyKind kind, int dim, int index, bool pic_one, int h11);

    VarietyKind kind_;
    int dim_;
    int index_;
    bool picard_rank_one_known_;
    int h11_;
};

const char* to_string(VarietyKind kind);
std::ostream& operator<<(std::ostream& os, const VarietySpec& v);

/// A divisor component D_i in |O(k_i)|.
struct DivisorComponent {
    int degree = 1;
    bool smooth = true;
    bool irreducible = true;

    friend bool operator==(const DivisorComponent&, const DivisorComponent&) = default;
};

/// Ambient variety together with a divisor D = sum D_i.
class LogPair {
public:
    /// Throws ArgumentError on an empty component list or a degree < 1.
    LogPair(VarietySpec ambient, std::vector<DivisorComponent> components, bool snc = true);

    /// Smooth irreducible components of the given degrees.
    static LogPair smooth(VarietySpec ambient, const std::vector<int>& degrees);

    const VarietySpec& ambient() const noexcept { return ambient_; }
    const std::vector<DivisorComponent>& components() const noexcept { return components_; }
    bool snc() const noexcept { return snc_; }

    int dim() const noexcept { return ambient_.dim(); }
    int index() const noexcept { return ambient_.index(); }
    int num_components() const noexcept { return static_cast<int>(components_.size()); }
    int total_degree() const noexcept;
    std::vector<int> degrees() const;

    /// -K_X - D ample, i.e. s > k.
    bool log_fano() const noexcept { return index() > total_degree(); }
    /// K_X + D ample or trivial, i.e. s <= k.
    bool kd_ample_or_trivial() const noexcept { return !log_fano(); }

    /// "P3 + [2,1]".
    std::string str() const;

    friend bool operator==(const LogPair&, const LogPair&) = default;

private:
    VarietySpec ambient_;
    std::vector<DivisorComponent> components_;
    bool snc_;
};

std::ostream& operator<<(std::ostream& os, const LogPair& p);

/// "1,1,2" <-> {1,1,2}.
std::string join_degrees(const std::vector<int>& degrees);
std::vector<int> split_degrees(const std::string& text);

} // namespace semistab
