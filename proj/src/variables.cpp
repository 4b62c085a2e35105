#include "symhermite/variables.hpp"

#include "symhermite/errors.hpp"

#include <set>

namespace symhermite {

VariableSet::VariableSet(std::vector<std::string> main_vars,
                         std::vector<std::string> param_vars)
    : main_(std::move(main_vars)), params_(std::move(param_vars)) {
    std::set<std::string> seen;
    for (const auto& list : {main_, params_}) {
        for (const auto& name : list) {
            if (name.empty()) throw PreconditionError("empty variable name");
            if (!seen.insert(name).second)
                throw PreconditionError("duplicate variable name '" + name + "'");
        }
    }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < main_.size(); ++i)
        if (main_[i] == name) return i;
    for (std::size_t i = 0; i < params_.size(); ++i)
        if (params_[i] == name) return main_.size() + i;
    return std::nullopt;
}

const std::string& VariableSet::name(std::size_t index) const {
    if (index < main_.size()) return main_[index];
    index -= main_.size();
    if (index < params_.size()) return params_[index];
    throw PreconditionError("variable index out of range");
}

} // namespace symhermite
