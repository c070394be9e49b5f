#include "semistab/rational.hpp"

#include <ostream>

#include <boost/integer/common_factor_rt.hpp>

#include "semistab/errors.hpp"

namespace semistab {

BigInt binomial(long long n, long long r)
{
    if (n < 0 || r < 0 || r > n)
        return 0;
    if (r > n - r)
        r = n - r;
    BigInt result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ == 0)
        throw ArgumentError("rational with zero denominator");
    normalize();
}

void Rational::normalize()
{
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigInt Rational::floor() const
{
    // cpp_int division truncates toward zero
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_)
        --q;
    return q;
}

BigInt Rational::ceil() const
{
    BigInt q = num_ / den_;
    if (num_ > 0 && q * den_ != num_)
        ++q;
    return q;
}

Rational Rational::operator-() const
{
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.num_ == 0)
        throw ArgumentError("rational division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    // denominators are positive, so cross-multiplication preserves order
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const
{
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& text)
{
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const ArgumentError&) {
        throw;
    } catch (const std::exception&) {
        throw ArgumentError("not a rational number: '" + text + "'");
    }
}

Rational rat(long long num, long long den)
{
    return Rational(BigInt(num), BigInt(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.str();
}

} // namespace semistab
