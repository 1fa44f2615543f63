#include "rational.hpp"

#include "errors.hpp"

namespace growthfn {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(BigInt n, BigInt d) : v_(std::move(n), std::move(d)) {
    if (v_.get_den() == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    if (v_.get_den() == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0)
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    if (v.get_den() == 0) throw DomainError("rational with zero denominator");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    return v_.get_str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    BigInt num, den;
    mpz_gcd(num.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(std::move(num), std::move(den));
}

}  // namespace growthfn
