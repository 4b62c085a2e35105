#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symhermite {

// Ordered list of variable names: main variables x_1..x_n first, then
// parameter symbols. Parameters live in the coefficient ring; only main
// variables take part in symmetry, reduction and interpolation.
class VariableSet {
public:
    VariableSet() = default;
    explicit VariableSet(std::vector<std::string> main_vars,
                         std::vector<std::string> param_vars = {});

    const std::vector<std::string>& main() const { return main_; }
    const std::vector<std::string>& params() const { return params_; }

    std::size_t main_count() const { return main_.size(); }
    std::size_t param_count() const { return params_.size(); }
    std::size_t size() const { return main_.size() + params_.size(); }

    // Index into the combined list, mains first.
    std::optional<std::size_t> index_of(std::string_view name) const;
    const std::string& name(std::size_t index) const;
    bool is_main_index(std::size_t index) const { return index < main_.size(); }

    bool operator==(const VariableSet& other) const {
        return main_ == other.main_ && params_ == other.params_;
    }
    bool operator!=(const VariableSet& other) const { return !(*this == other); }

private:
    std::vector<std::string> main_;
    std::vector<std::string> params_;
};

} // namespace symhermite
