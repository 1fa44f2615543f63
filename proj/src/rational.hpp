#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace growthfn {

using BigInt = mpz_class;

/// Exact rational number. Always stored reduced with a positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d);
    Rational(BigInt n, BigInt d);
    explicit Rational(const mpq_class& v);

    /// Parses "n", "-n" or "n/d" with arbitrary-precision digits.
    static Rational from_string(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "7", "-7" or "3/2".
    std::string to_string() const;

private:
    mpq_class v_;  // canonical: reduced, positive denominator
};

/// gcd of |a| and |b| as a nonnegative rational: gcd of numerators over lcm of
/// denominators. gcd(0, 0) = 0.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace growthfn
