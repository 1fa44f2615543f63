#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace growthfn {

/// Ordered variable names, partitioned into three contiguous blocks:
/// elimination block (auxiliary unknowns), retained block (the start-symbol
/// unknown) and weight block (weight variables). Block order is also the
/// variable order: elimination variables rank above retained ones, which rank
/// above weight variables.
class VarTable {
public:
    VarTable(std::vector<std::string> elim,
             std::vector<std::string> retained,
             std::vector<std::string> weight);

    static std::shared_ptr<const VarTable> make(std::vector<std::string> elim,
                                                std::vector<std::string> retained,
                                                std::vector<std::string> weight);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const;

    std::size_t elim_count() const { return elim_; }
    std::size_t retained_count() const { return retained_; }
    std::size_t weight_count() const { return names_.size() - elim_ - retained_; }

    /// First index of the retained block.
    std::size_t retained_begin() const { return elim_; }
    /// First index of the weight block.
    std::size_t weight_begin() const { return elim_ + retained_; }

    /// Block starts, usable as "keep trailing variables from here" boundaries.
    bool is_block_boundary(std::size_t i) const {
        return i == 0 || i == elim_ || i == elim_ + retained_ || i == names_.size();
    }

    bool operator==(const VarTable& o) const {
        return elim_ == o.elim_ && retained_ == o.retained_ && names_ == o.names_;
    }

private:
    std::vector<std::string> names_;
    std::size_t elim_;
    std::size_t retained_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Value equality of the tables two objects point to.
inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace growthfn
