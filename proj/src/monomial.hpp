#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace growthfn {

/// Exponent vector indexed by variable table position. The monomial itself
/// does not know its table; operations on mismatched lengths throw.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}

    static Monomial var(std::size_t nvars, std::size_t index, unsigned exponent = 1);

    std::size_t size() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned total_degree() const;
    bool is_one() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    /// True when this monomial divides `other` componentwise.
    bool divides(const Monomial& other) const;
    /// Exact quotient; requires `by.divides(*this)`.
    Monomial divided_by(const Monomial& by) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    /// Plain lexicographic comparison by table position, lower index first.
    static std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

private:
    std::vector<unsigned> e_;
};

}  // namespace growthfn
