#pragma once

#include "symhermite/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace symhermite {

// Dense matrix of polynomials over one shared VariableSet.
class PolyMatrix {
public:
    PolyMatrix(VariableSet vars, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const VariableSet& vars() const { return vars_; }

    Polynomial& at(std::size_t r, std::size_t c);
    const Polynomial& at(std::size_t r, std::size_t c) const;

private:
    VariableSet vars_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> entries_;
};

// Exact determinant. Cofactor expansion up to 4x4; fraction-free Bareiss
// elimination above that (every division it performs is exact by
// construction, enforced at runtime). Determinant of a 0x0 matrix is 1.
Polynomial determinant(const PolyMatrix& m);

} // namespace symhermite
