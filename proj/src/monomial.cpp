#include "monomial.hpp"

#include <algorithm>

#include "errors.hpp"

namespace growthfn {

namespace {
void require_same_size(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw StructuralError("monomials over different variable tables");
}
}  // namespace

Monomial Monomial::var(std::size_t nvars, std::size_t index, unsigned exponent) {
    if (index >= nvars) throw DomainError("variable index out of range");
    Monomial m(nvars);
    m.e_[index] = exponent;
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : e_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](unsigned e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_size(a, b);
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& by) const {
    require_same_size(*this, by);
    Monomial m(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (by.e_[i] > e_[i]) throw DomainError("monomial quotient is not a monomial");
        m.e_[i] = e_[i] - by.e_[i];
    }
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    require_same_size(a, b);
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.e_[i] = std::max(a.e_[i], b.e_[i]);
    return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    require_same_size(a, b);
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.e_[i] = std::min(a.e_[i], b.e_[i]);
    return m;
}

std::strong_ordering Monomial::lex_compare(const Monomial& a, const Monomial& b) {
    require_same_size(a, b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] != b.e_[i])
            return a.e_[i] < b.e_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace growthfn
