#include "symhermite/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace symhermite {

PolyMatrix::PolyMatrix(VariableSet vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols),
      entries_(rows * cols, Polynomial(vars_)) {}

Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw PreconditionError("matrix index out of range");
    return entries_[r * cols_ + c];
}

const Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw PreconditionError("matrix index out of range");
    return entries_[r * cols_ + c];
}

namespace {

Polynomial cofactor_det(const PolyMatrix& m, std::vector<std::size_t> rows,
                        std::vector<std::size_t> cols) {
    const std::size_t k = rows.size();
    if (k == 0) return Polynomial::constant(m.vars(), 1);
    if (k == 1) return m.at(rows[0], cols[0]);
    Polynomial acc(m.vars());
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < k; ++j) {
        const Polynomial& pivot = m.at(rows[0], cols[j]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(k - 1);
        for (std::size_t t = 0; t < k; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        Polynomial minor = cofactor_det(m, sub_rows, sub_cols);
        if (j % 2 == 0)
            acc += pivot * minor;
        else
            acc -= pivot * minor;
    }
    return acc;
}

Polynomial bareiss_det(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial(m.vars())));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c);

    int sign = 1;
    Polynomial prev = Polynomial::constant(m.vars(), 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial(m.vars());
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = exact_divide(num, prev);
                if (!q) throw std::logic_error("inexact division in Bareiss elimination");
                a[i][j] = std::move(*q);
            }
            a[i][k] = Polynomial(m.vars());
        }
        prev = a[k][k];
    }
    Polynomial det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

} // namespace

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial::constant(m.vars(), 1);
    if (n <= 4) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        return cofactor_det(m, idx, idx);
    }
    return bareiss_det(m);
}

} // namespace symhermite
