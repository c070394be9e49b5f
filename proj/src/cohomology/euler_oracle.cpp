#include "semistab/cohomology.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace semistab {

void check_form_range(int n, int p, int q);

namespace {

using Dims = std::vector<BigInt>;  // h^0 .. h^n

/// Line-bundle cohomology of O(t) on P^n.
Dims line_bundle(int n, long long t)
{
    Dims h(n + 1, 0);
    if (t >= 0)
        h[0] = binomial(n + t, n);
    if (t <= -n - 1)
        h[n] = binomial(-t - 1, n);
    return h;
}

struct Key {
    int n, p, t;
    bool serre;
    friend auto operator<=>(const Key&, const Key&) = default;
};

class OracleCache {
public:
    std::optional<std::optional<Dims>> get(const Key& key) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }

    void put(const Key& key, const std::optional<Dims>& value)
    {
        std::unique_lock lock(mutex_);
        table_.emplace(key, value);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, std::optional<Dims>> table_;
};

OracleCache& cache()
{
    static OracleCache c;
    return c;
}

std::optional<Dims> chase(int n, int p, int t, bool serre_allowed);

/// h^0(Omega^p(t)) when the bottom of the long exact sequence leaves it open.
std::optional<BigInt> settle_h0(int n, int p, int t, bool serre_allowed)
{
    if (t < 0)
        return BigInt(0);  // no sections with negative twist
    if (t == 0)
        return BigInt(p == 0 ? 1 : 0);  // Hodge numbers of P^n
    if (serre_allowed) {
        // h^0(Omega^p(t)) = h^n(Omega^{n-p}(-t))
        if (auto dual = chase(n, n - p, -t, false))
            return (*dual)[n];
    }
    return std::nullopt;
}

std::optional<Dims> compute(int n, int p, int t, bool serre_allowed)
{
    if (p == 0)
        return line_bundle(n, t);

    // 0 -> A = Omega^p(t) -> B = O(t-p)^N -> C = Omega^{p-1}(t) -> 0
    auto c_dims = chase(n, p - 1, t, serre_allowed);
    if (!c_dims)
        return std::nullopt;
    const Dims& C = *c_dims;
    Dims B = line_bundle(n, static_cast<long long>(t) - p);
    const BigInt mult = binomial(n + 1, p);
    for (auto& b : B)
        b *= mult;

    Dims A(n + 1, 0);

    // B^q = 0 for 0 < q < n, so the sequence breaks into
    //   0 -> A^0 -> B^0 -> C^0 -> A^1 -> 0                 (n >= 2)
    //   A^q = C^{q-1}                                      (2 <= q <= n-1)
    //   0 -> C^{n-1} -> A^n -> B^n -> C^n -> 0             (n >= 2)
    // For n = 1 the whole sequence is one segment.
    std::optional<BigInt> a0;
    if (B[0] == 0)
        a0 = BigInt(0);
    else if (C[0] == 0)
        a0 = B[0];
    else
        a0 = settle_h0(n, p, t, serre_allowed);
    if (!a0)
        return std::nullopt;
    A[0] = *a0;

    if (n == 1) {
        // A^0 - B^0 + C^0 - A^1 + B^1 - C^1 = 0
        A[1] = A[0] - B[0] + C[0] + B[1] - C[1];
    } else {
        A[1] = A[0] - B[0] + C[0];
        for (int q = 2; q <= n - 1; ++q)
            A[q] = C[q - 1];
        A[n] = C[n - 1] + B[n] - C[n];
    }
    for (const auto& a : A)
        if (a < 0)
            return std::nullopt;  // inconsistent ranks: refuse rather than report garbage
    return A;
}

std::optional<Dims> chase(int n, int p, int t, bool serre_allowed)
{
    Key key{n, p, t, serre_allowed};
    if (auto hit = cache().get(key))
        return *hit;
    auto result = compute(n, p, t, serre_allowed);
    cache().put(key, result);
    return result;
}

} // namespace

std::optional<BigInt> euler_oracle_dim(int n, int p, int t, int q)
{
    check_form_range(n, p, q);
    auto dims = chase(n, p, t, true);
    if (!dims)
        return std::nullopt;
    return (*dims)[q];
}

} // namespace semistab
