#include "semistab/cohomology.hpp"

#include <string>

#include "semistab/errors.hpp"

namespace semistab {

void check_form_range(int n, int p, int q)
{
    if (n < 1)
        throw ArgumentError("projective space needs n >= 1, got " + std::to_string(n));
    if (p < 0 || p > n)
        throw ArgumentError("form degree p=" + std::to_string(p) + " outside [0, " +
                            std::to_string(n) + "]");
    if (q < 0 || q > n)
        throw ArgumentError("cohomology degree q=" + std::to_string(q) + " outside [0, " +
                            std::to_string(n) + "]");
}

BigInt bott_dim(int n, int p, int t, int q)
{
    check_form_range(n, p, q);
    const long long T = t;
    if (q == 0 && T > p)
        return binomial(T + n - p, T) * binomial(T - 1, p);
    if (q == n && T < p - n)
        return binomial(-T + p, -T) * binomial(-T - 1, n - p);
    // Hodge diagonal, including h^{0,0} and h^{n,n}
    return (t == 0 && p == q) ? 1 : 0;
}

} // namespace semistab
