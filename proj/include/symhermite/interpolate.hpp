#pragma once

#include "symhermite/nodes.hpp"
#include "symhermite/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symhermite {

// Basis element attached to a column subset A' of the confluent Vandermonde
// matrix: det_form = det of V_d(A) with the picked columns replaced by power
// columns in x_1..x_n, and omega = det_form / vandermonde_poly (exact).
// The omegas form a basis of the symmetric polynomials of degree <= d-n per
// variable.
struct BasisElement {
    ColumnSubset subset;
    Polynomial det_form;
    Polynomial omega;
};

BasisElement basis_element(const NodeMultiset& nodes, const ColumnSubset& subset,
                           const VariableSet& vars);

// Scaled-derivative evaluation functional: apply the order-j Hasse derivative
// in x_k for the label picked by position k, then substitute every x_k by its
// node value.
Polynomial derivative_evaluate(const Polynomial& g, const NodeMultiset& nodes,
                               const ColumnSubset& subset);

// derivative_evaluate(det_form, A, A') / vdm_det_formula(A) is +1 or -1.
int epsilon_sign(const NodeMultiset& nodes, const ColumnSubset& subset,
                 const VariableSet& vars);

// Coordinates of the interpolant of h in the omega basis, kept as exact
// fractions over the common denominator det V_d(A):
//   c_{A'} = signs[k] * numerators[k] / denominator
// where numerators[k] = derivative_evaluate(v_n * h, A, A') up to sign.
// For rational nodes every entry is a rational number; for symbolic nodes an
// individual entry is in general a ratio, while the assembled sum
// sum_k signs[k] * numerators[k] * omega_{A'_k} is always divisible by the
// denominator and reproduces the interpolant.
struct CoordinateVector {
    std::vector<ColumnSubset> subsets;
    std::vector<int> signs;
    std::vector<Polynomial> numerators; // without the sign
    Polynomial denominator;

    // signs[k] * numerators[k] / denominator when that division is exact.
    std::optional<Polynomial> entry(std::size_t k) const;
};

CoordinateVector coordinates(const Polynomial& h, const NodeMultiset& nodes);

// Classical symmetric Lagrange formula; requires all multiplicities 1.
// Symbolic nodes are handled through the normal form instead (the closed form
// would divide by symbolic node differences).
Polynomial lagrange_interpolant(const Polynomial& h, const NodeMultiset& nodes);

// Interpolant at the d-fold zero node via the Schur expansion
//   r = sum_{A'} derivative_evaluate(v_n * h, A, A') * s_{A'}.
Polynomial taylor_interpolant(const Polynomial& h, int d);

enum class Method { normal_form, basis, lagrange, taylor, bridge };

std::optional<Method> parse_method(const std::string& name);
std::string method_name(Method m);

// The symmetric Hermite interpolant r_A(h): the unique symmetric polynomial
// of degree <= d-n per variable agreeing with h on the ideal of the node
// multiset. All methods return the same polynomial on their shared domain.
Polynomial hermite_interpolant(const Polynomial& h, const NodeMultiset& nodes,
                               Method method = Method::normal_form);

} // namespace symhermite
