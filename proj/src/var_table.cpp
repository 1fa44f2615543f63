#include "var_table.hpp"

#include "errors.hpp"

namespace growthfn {

VarTable::VarTable(std::vector<std::string> elim,
                   std::vector<std::string> retained,
                   std::vector<std::string> weight)
    : elim_(elim.size()), retained_(retained.size()) {
    names_.reserve(elim.size() + retained.size() + weight.size());
    for (auto& v : elim) names_.push_back(std::move(v));
    for (auto& v : retained) names_.push_back(std::move(v));
    for (auto& v : weight) names_.push_back(std::move(v));
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw DomainError("empty variable name");
        if (!index_.emplace(names_[i], i).second)
            throw DomainError("duplicate variable name '" + names_[i] + "'");
    }
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> elim,
                                               std::vector<std::string> retained,
                                               std::vector<std::string> weight) {
    return std::make_shared<const VarTable>(std::move(elim), std::move(retained), std::move(weight));
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace growthfn
