#pragma once

#include "symhermite/polynomial.hpp"

#include <string>
#include <variant>
#include <vector>

namespace symhermite {

// A node is either an explicit rational or a parameter symbol standing for an
// indeterminate value.
using NodeValue = std::variant<Scalar, std::string>;

bool is_symbolic(const NodeValue& v);
std::string node_value_to_string(const NodeValue& v);

struct NodeBlock {
    NodeValue value;
    int multiplicity;
};

// Column label a_{i,j}: block i, derivative order j (0 <= j < multiplicity).
struct NodeLabel {
    int block;
    int order;
};

// Multiset of interpolation nodes grouped into blocks of equal value.
// Blocks with equal values are merged on construction.
class NodeMultiset {
public:
    explicit NodeMultiset(std::vector<NodeBlock> blocks);

    const std::vector<NodeBlock>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int d() const; // total multiplicity
    bool merged_on_construction() const { return merged_; }
    bool has_symbolic_values() const;
    bool all_multiplicity_one() const;

    // The d column labels in block-major order: a_{1,0}, a_{1,1}, ..., a_{2,0}, ...
    std::vector<NodeLabel> labels() const;

    // Parameter symbols in first-appearance order.
    std::vector<std::string> symbols() const;

    // The block's value as a polynomial over `vars` (symbols must be declared
    // among the parameters of `vars`).
    Polynomial value_poly(int block, const VariableSet& vars) const;

    std::string describe() const; // round-trips through parse_node_spec

private:
    std::vector<NodeBlock> blocks_;
    bool merged_ = false;
};

// Text form: comma-separated blocks "value['^'multiplicity]" where value is a
// rational ("p" or "p/q", optionally negative) or a single-letter symbol.
// Example: "a^3, b^2" or "1/2^3, 4^2".
NodeMultiset parse_node_spec(const std::string& text);

// Strictly increasing 0-based column indices into the label list.
struct ColumnSubset {
    std::vector<int> picks;

    bool operator==(const ColumnSubset& other) const { return picks == other.picks; }
};

void validate_subset(const ColumnSubset& subset, int d);

// All size-n subsets of {0,...,d-1} in lexicographic order.
std::vector<ColumnSubset> enumerate_subsets(int d, int n);

std::string describe_subset(const NodeMultiset& nodes, const ColumnSubset& subset);

// Triangular generating family of the ideal of symmetric relations of the
// node multiset: either the Groebner family G = (g_1, ..., g_n) with leading
// terms x_i^{d-i+1}, or the power family F = (f(x_1), ..., f(x_n)) with
// leading terms x_i^d.
struct IdealFamily {
    enum class Kind { groebner, power };

    Kind kind;
    VariableSet vars;
    int d;
    std::vector<Polynomial> members;        // member i-1 is g_i resp. f(x_i)
    std::vector<int> lead_exponents;        // exponent of x_i in the leading term
};

// f = prod (x - a_i) over the multiset, univariate over VariableSet
// ({"x"}, symbols).
Polynomial build_f(const NodeMultiset& nodes);

// Coefficients c_0..c_d of f over an arbitrary VariableSet declaring the
// node symbols; c_d = 1 and c_{d-k} = (-1)^k s_k(nodes).
std::vector<Polynomial> f_coefficients(const NodeMultiset& nodes, const VariableSet& vars);

// g_i = sum_{j=0}^{d-i+1} c_{i-1+j} * h_j(x_1..x_i) where h_j is the complete
// homogeneous polynomial of degree j. Requires 1 <= n <= d for n main
// variables of `vars`.
IdealFamily build_G(const NodeMultiset& nodes, const VariableSet& vars);

// Member i is f(x_i).
IdealFamily build_F(const NodeMultiset& nodes, const VariableSet& vars);

} // namespace symhermite
