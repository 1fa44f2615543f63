#include "polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace growthfn {

namespace {

void require_same_table(const Polynomial& a, const Polynomial& b) {
    if (!same_table(a.table(), b.table()))
        throw StructuralError("polynomials over different variable tables");
}

void require_order_matches(const Polynomial& p, const TermOrder& order) {
    if (!same_table(p.table(), order.table()))
        throw StructuralError("term order over a different variable table");
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    return Monomial::lex_compare(a, b) == std::strong_ordering::greater;
}

}  // namespace

Polynomial::Polynomial(VarTablePtr table) : table_(std::move(table)) {
    if (!table_) throw DomainError("polynomial without a variable table");
}

Polynomial Polynomial::constant(VarTablePtr table, Rational value) {
    Polynomial p(std::move(table));
    if (!value.is_zero()) p.terms_.push_back({Monomial(p.table_->size()), std::move(value)});
    return p;
}

Polynomial Polynomial::variable(VarTablePtr table, std::size_t index, unsigned exponent) {
    Polynomial p(std::move(table));
    if (exponent == 0) return constant(p.table_, 1);
    p.terms_.push_back({Monomial::var(p.table_->size(), index, exponent), Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(VarTablePtr table, std::vector<Term> terms) {
    Polynomial p(std::move(table));
    for (const auto& t : terms)
        if (t.mon.size() != p.table_->size())
            throw StructuralError("term monomial does not match the variable table");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return lex_greater(a.mon, b.mon); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mon == t.mon)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.front();
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mon == m) return t.coeff;
    return Rational(0);
}

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().mon.is_one()) return terms_.back().coeff;
    return Rational(0);
}

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon[var]);
    return d;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon.total_degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(table_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mon, -t.coeff});
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(table_);
    Polynomial p(table_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mon, t.coeff * c});
    return p;
}

Polynomial Polynomial::times_term(const Term& t) const {
    if (t.coeff.is_zero()) return Polynomial(table_);
    if (t.mon.size() != table_->size())
        throw StructuralError("term monomial does not match the variable table");
    Polynomial p(table_);
    p.terms_.reserve(terms_.size());
    for (const auto& u : terms_) p.terms_.push_back({u.mon * t.mon, u.coeff * t.coeff});
    return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_table(a, b);
    Polynomial r(a.table());
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        auto c = Monomial::lex_compare(a.terms_[i].mon, b.terms_[j].mon);
        if (c == std::strong_ordering::greater) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Rational sum = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!sum.is_zero()) r.terms_.push_back({a.terms_[i].mon, std::move(sum)});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_table(a, b);
    std::map<Monomial, Rational, decltype([](const Monomial& x, const Monomial& y) {
                 return Monomial::lex_compare(x, y) == std::strong_ordering::greater;
             })>
        acc;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m = ta.mon * tb.mon;
            auto [it, fresh] = acc.try_emplace(std::move(m), ta.coeff * tb.coeff);
            if (!fresh) it->second += ta.coeff * tb.coeff;
        }
    }
    Polynomial r(a.table());
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    return p.scaled(c);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_table(table_, o.table_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mon == o.terms_[i].mon) || !(terms_[i].coeff == o.terms_[i].coeff))
            return false;
    return true;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
    Polynomial p(table_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mon.divided_by(m), t.coeff});
    return p;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return Monomial(table_->size());
    Monomial g = terms_.front().mon;
    for (std::size_t i = 1; i < terms_.size(); ++i) g = Monomial::gcd(g, terms_[i].mon);
    return g;
}

Rational Polynomial::rational_content() const {
    Rational g(0);
    for (const auto& t : terms_) g = rational_gcd(g, t.coeff);
    return g;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) throw DomainError("monic form of the zero polynomial");
    return scaled(leading_coefficient().inverse());
}

DivisionResult divide_reduce(const Polynomial& f,
                             std::span<const Polynomial> divisors,
                             const TermOrder& order) {
    require_order_matches(f, order);
    if (divisors.empty()) throw DomainError("division by an empty divisor list");
    for (const auto& d : divisors) {
        require_same_table(f, d);
        if (d.is_zero()) throw DomainError("zero divisor in division");
    }

    DivisionResult result{std::vector<Polynomial>(divisors.size(), Polynomial(f.table())),
                          Polynomial(f.table())};
    Polynomial p = f;
    std::vector<Term> rem_terms;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const Polynomial& d = divisors[i];
            if (d.leading_monomial().divides(lt.mon)) {
                Term q{lt.mon.divided_by(d.leading_monomial()),
                       lt.coeff / d.leading_coefficient()};
                result.quotients[i] =
                    result.quotients[i] + Polynomial::from_terms(f.table(), {q});
                p = p - d.times_term(q);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem_terms.push_back(lt);
            p = p - Polynomial::from_terms(f.table(), {lt});
        }
    }
    result.remainder = Polynomial::from_terms(f.table(), std::move(rem_terms));
    return result;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
    require_order_matches(f, order);
    require_same_table(f, g);
    if (f.is_zero() || g.is_zero()) throw DomainError("s-polynomial of a zero polynomial");
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Term tf{l.divided_by(f.leading_monomial()), f.leading_coefficient().inverse()};
    Term tg{l.divided_by(g.leading_monomial()), g.leading_coefficient().inverse()};
    return f.times_term(tf) - g.times_term(tg);
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const VarTable& table = *p.table();
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational a = t.coeff.abs();
        if (first) {
            if (t.coeff.sign() < 0) out << "-";
            first = false;
        } else {
            out << (t.coeff.sign() < 0 ? " - " : " + ");
        }
        std::string factors;
        for (std::size_t i = 0; i < table.size(); ++i) {
            unsigned e = t.mon[i];
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += table.name(i);
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out << a.to_string();
        } else {
            if (!a.is_one()) out << a.to_string() << "*";
            out << factors;
        }
    }
    return out.str();
}

namespace {

// Single-purpose scanner for the canonical polynomial syntax.
struct PolyScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw DomainError("expected a number in polynomial text");
        return std::string(text.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw DomainError("expected a variable name in polynomial text");
        return std::string(text.substr(start, pos - start));
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, VarTablePtr table) {
    PolyScanner in{text};
    std::vector<Term> terms;
    bool negative = in.accept('-');
    if (!negative) in.accept('+');
    while (true) {
        if (in.eof()) throw DomainError("empty term in polynomial text");
        Rational coeff(negative ? -1 : 1);
        Monomial mon(table->size());
        bool saw_factor = false;
        while (true) {
            if (!in.eof() && std::isdigit(static_cast<unsigned char>(in.peek()))) {
                std::string num = in.number();
                std::string lit = num;
                if (in.accept('/')) lit += "/" + in.number();
                coeff *= Rational::from_string(lit);
            } else {
                std::string name = in.identifier();
                auto idx = table->index_of(name);
                if (!idx) throw DomainError("unknown variable '" + name + "' in polynomial text");
                unsigned exp = 1;
                if (in.accept('^')) exp = static_cast<unsigned>(std::stoul(in.number()));
                mon[*idx] += exp;
            }
            saw_factor = true;
            if (!in.accept('*')) break;
        }
        if (!saw_factor) throw DomainError("empty term in polynomial text");
        terms.push_back({std::move(mon), std::move(coeff)});
        if (in.eof()) break;
        if (in.accept('+'))
            negative = false;
        else if (in.accept('-'))
            negative = true;
        else
            throw DomainError("unexpected character in polynomial text");
    }
    return Polynomial::from_terms(std::move(table), std::move(terms));
}

}  // namespace growthfn
