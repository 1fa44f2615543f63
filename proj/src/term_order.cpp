#include "term_order.hpp"

#include "errors.hpp"

namespace growthfn {

TermOrder::TermOrder(VarTablePtr table) : table_(std::move(table)) {
    if (!table_) throw DomainError("term order without a variable table");
}

Cmp TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != table_->size() || b.size() != table_->size())
        throw StructuralError("monomial does not match the order's variable table");
    const std::size_t bounds[4] = {0, table_->retained_begin(), table_->weight_begin(), table_->size()};
    for (int blk = 0; blk < 3; ++blk) {
        for (std::size_t i = bounds[blk]; i < bounds[blk + 1]; ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? Cmp::less : Cmp::greater;
        }
    }
    return Cmp::equal;
}

}  // namespace growthfn
