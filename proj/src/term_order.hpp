#pragma once

#include "monomial.hpp"
#include "var_table.hpp"

namespace growthfn {

enum class Cmp { less, equal, greater };

/// Block-lexicographic term order over a variable table: monomials are
/// compared block by block (elimination, then retained, then weight), each
/// block lexicographically by declaration position. Any monomial containing an
/// elimination variable therefore ranks above every monomial free of them, and
/// likewise for the retained block against the weight block.
class TermOrder {
public:
    explicit TermOrder(VarTablePtr table);

    const VarTablePtr& table() const { return table_; }

    Cmp compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::less; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::greater; }

    bool operator==(const TermOrder& o) const { return same_table(table_, o.table_); }

private:
    VarTablePtr table_;
};

}  // namespace growthfn
