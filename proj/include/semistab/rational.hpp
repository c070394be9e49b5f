#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace semistab {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, r) for 0 <= r <= n, and 0 for every other (n, r), including n < 0.
BigInt binomial(long long n, long long r);

/// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1.
///
/// Slopes are stored as the rational coefficient of deg O(1)^n; the
/// self-intersection itself never enters a computation.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}
    Rational(BigInt value) : num_(std::move(value)) {}

    /// Throws ArgumentError when den == 0.
    Rational(BigInt num, BigInt den);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    /// Largest integer <= *this.
    BigInt floor() const;
    /// Smallest integer >= *this.
    BigInt ceil() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws ArgumentError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;
    /// Inverse of str(); also accepts "p/q" with a negative or unreduced denominator.
    static Rational parse(const std::string& text);

private:
    void normalize();

    BigInt num_{0};
    BigInt den_{1};
};

/// Reduced, positive-denominator fraction num/den.
Rational rat(long long num, long long den);

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace semistab
