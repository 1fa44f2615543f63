#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"
#include "term_order.hpp"
#include "var_table.hpp"

namespace growthfn {

struct Term {
    Monomial mon;
    Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ambient variable table. Terms are kept sorted descending under the table's
/// block-lexicographic order and never carry a zero coefficient. Values are
/// immutable after construction; all arithmetic returns fresh polynomials.
class Polynomial {
public:
    explicit Polynomial(VarTablePtr table);  // zero polynomial

    static Polynomial constant(VarTablePtr table, Rational value);
    static Polynomial variable(VarTablePtr table, std::size_t index, unsigned exponent = 1);
    static Polynomial from_terms(VarTablePtr table, std::vector<Term> terms);

    const VarTablePtr& table() const { return table_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mon; }
    const Rational& leading_coefficient() const { return leading_term().coeff; }

    Rational coefficient_of(const Monomial& m) const;
    Rational constant_term() const;
    unsigned degree_in(std::size_t var) const;
    unsigned total_degree() const;

    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Term& t) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& o) const;

    /// Divides every term; the monomial must divide each term's monomial.
    Polynomial divided_by_monomial(const Monomial& m) const;

    /// Componentwise minimum of all exponent vectors (the common monomial factor).
    Monomial monomial_content() const;
    /// gcd of numerators over lcm of denominators, as a positive rational; 0 for 0.
    Rational rational_content() const;

    /// Leading coefficient scaled to one.
    Polynomial monic() const;

private:
    void normalize();  // sort descending, merge duplicates, drop zeros

    VarTablePtr table_;
    std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Multivariate division with remainder: f = sum(q[i]*divisors[i]) + remainder,
/// no remainder monomial divisible by any divisor's leading monomial, and
/// lm(q[i]*divisors[i]) never exceeds lm(f). Divisors are tried in list order.
DivisionResult divide_reduce(const Polynomial& f,
                             std::span<const Polynomial> divisors,
                             const TermOrder& order);

/// S(f, g) = (lcm/lt(f))*f - (lcm/lt(g))*g for the leading-term lcm.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Canonical text: terms descending, "coeff*var^exp*..." joined by " + "/" - ".
std::string to_string(const Polynomial& p);

/// Parses the same syntax to_string emits (signs, rational coefficients,
/// "*"-separated variable powers). Used by test fixtures and tools.
Polynomial parse_polynomial(std::string_view text, VarTablePtr table);

}  // namespace growthfn
