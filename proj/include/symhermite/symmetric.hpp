#pragma once

#include "symhermite/polynomial.hpp"

#include <vector>

namespace symhermite {

// Complete homogeneous symmetric polynomial of degree `degree` in the first
// `var_count` main variables of `vars` (all monomials of that total degree,
// coefficient 1). Degree 0 gives the constant 1.
Polynomial complete_homogeneous(int var_count, int degree, const VariableSet& vars);

// Elementary symmetric polynomial s_k of the given values, 0 <= k <= #values.
// All values must share one VariableSet.
Polynomial elementary_symmetric(int k, const std::vector<Polynomial>& values);
Polynomial elementary_symmetric(int k, const std::vector<Scalar>& values,
                                const VariableSet& vars);

// Product of (x_j - x_i) over main-variable pairs i < j; 1 when n == 1.
Polynomial vandermonde_poly(const VariableSet& vars);

// Monomial symmetric polynomial: the sum of the distinct permutations of the
// given exponent pattern over the main variables. These span the symmetric
// polynomials.
Polynomial symmetrized_monomial(const VariableSet& vars, const std::vector<int>& exponents);

// Strictly increasing column exponents 0 <= i_1 < ... < i_n defining a Schur
// polynomial via the bialternant quotient.
struct SchurIndex {
    std::vector<int> columns;
};

// det(x_k^{i_l}) / vandermonde_poly, an exact division. The index size must
// match the number of main variables.
Polynomial schur_polynomial(const SchurIndex& index, const VariableSet& vars);

} // namespace symhermite
