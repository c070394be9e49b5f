#include "semistab/cohomology.hpp"

#include <string>

#include "semistab/errors.hpp"

namespace semistab {

const char* to_string(TriBool b)
{
    switch (b) {
    case TriBool::Holds:
        return "Holds";
    case TriBool::Fails:
        return "Fails";
    case TriBool::Unknown:
        return "Unknown";
    }
    return "?";
}

TriBool kan_h0_vanishes(int dim_y, int a, int t)
{
    if (t < 0 && a >= 0 && a < dim_y)
        return TriBool::Holds;
    return TriBool::Unknown;
}

TriBool fano_hodge_vanishes(const VarietySpec& space, int a)
{
    if (a < 0 || a > space.dim())
        throw ArgumentError("form degree " + std::to_string(a) + " outside [0, " +
                            std::to_string(space.dim()) + "]");
    return a >= 1 ? TriBool::Holds : TriBool::Fails;
}

TriBool stability_vanishing(const VarietySpec& space, int a, int t, const StabilityKb& kb,
                            BoundaryMode mode)
{
    if (a < 1 || a >= space.dim())
        throw ArgumentError("stability vanishing needs 1 <= a < dim, got a=" + std::to_string(a) +
                            " on " + space.str());
    // del Pezzo surfaces need not have semistable Omega
    if (space.dim() == 2 || !space.picard_rank_one_known())
        return TriBool::Unknown;
    auto fact = kb.find(space.dim());
    if (!fact)
        return TriBool::Unknown;

    const Rational bound = rat(static_cast<long long>(a) * space.index(), space.dim());
    const Rational twist(t);
    if (twist < bound)
        return TriBool::Holds;
    // a stable Omega admits no rank-one subsheaf of equal slope
    if (mode == BoundaryMode::AllowStableBoundary && fact->strength == StabilityStrength::Stable &&
        a == 1 && bound.is_integer() && twist == bound)
        return TriBool::Holds;
    return TriBool::Unknown;
}

TriBool quadric_h0_vanishes(int m, int p, int t)
{
    if (m < 3)
        throw ArgumentError("Snow vanishing is encoded for quadrics of dim >= 3, got Q" +
                            std::to_string(m));
    if (p < 1 || p >= m)
        throw ArgumentError("Snow vanishing needs 1 <= p < m, got p=" + std::to_string(p));
    return t <= p ? TriBool::Holds : TriBool::Unknown;
}

VarietySpec divisor_intrinsic_type(const VarietySpec& ambient, int k)
{
    if (k < 1 || k >= ambient.index())
        throw ArgumentError("degree " + std::to_string(k) + " divisor on " + ambient.str() +
                            " is not Fano (need 1 <= k < " + std::to_string(ambient.index()) +
                            ")");
    if (ambient.dim() < 2)
        throw ArgumentError("divisors on curves are points");

    const int m = ambient.dim() - 1;
    const int index = ambient.index() - k;  // adjunction: -K_D = O_D(s - k)
    switch (ambient.kind()) {
    case VarietyKind::ProjectiveSpace:
        if (k == 1)
            return VarietySpec::projective_space(m);
        if (k == 2 && m >= 2)
            return VarietySpec::quadric(m);
        break;
    case VarietyKind::Quadric:
        if (k == 1 && m >= 2)
            return VarietySpec::quadric(m);
        break;
    case VarietyKind::AbstractFano:
        break;
    }
    // Lefschetz: Pic D = Z once dim D >= 3
    return VarietySpec::abstract_fano(m, index, m >= 3 && ambient.picard_rank_one_known());
}

} // namespace semistab
