#pragma once

// Test-local helpers and independent oracles. The oracles avoid the code
// paths they are used to check: dense Gaussian elimination instead of
// triangular reduction, the Leibniz permutation sum instead of cofactor or
// Bareiss determinants, plain term-wise derivatives instead of the library's
// scaled partials.

#include "symhermite/interpolate.hpp"
#include "symhermite/matrix.hpp"
#include "symhermite/nodes.hpp"
#include "symhermite/parser.hpp"
#include "symhermite/polynomial.hpp"
#include "symhermite/symmetric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

using namespace symhermite;

inline VariableSet make_vars(int n, std::vector<std::string> params = {}) {
    std::vector<std::string> mains;
    for (int i = 1; i <= n; ++i) mains.push_back("x" + std::to_string(i));
    return VariableSet(std::move(mains), std::move(params));
}

inline std::map<std::string, std::string> xyz_aliases(int n) {
    std::map<std::string, std::string> out;
    const char* short_names[] = {"x", "y", "z"};
    for (int i = 0; i < std::min(n, 3); ++i)
        out.emplace(short_names[i], "x" + std::to_string(i + 1));
    return out;
}

inline Polynomial P(const std::string& text, const VariableSet& vars) {
    return parse_polynomial(text, vars, xyz_aliases(static_cast<int>(vars.main_count())));
}

// ---------------------------------------------------------------- oracles

inline std::optional<std::vector<Scalar>> gauss_solve(std::vector<std::vector<Scalar>> m,
                                                      std::vector<Scalar> rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) throw std::logic_error("gauss_solve: shape mismatch");
    for (const auto& row : m)
        if (row.size() != n) throw std::logic_error("gauss_solve: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Scalar factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<Scalar> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / m[i][i];
    return out;
}

// Ordinary partial derivative, term-wise e * x^(e-1).
inline Polynomial plain_partial(const Polynomial& p, std::size_t var_index) {
    std::vector<Polynomial::Term> out;
    for (const auto& t : p.terms()) {
        int e = t.mono.exponents[var_index];
        if (e == 0) continue;
        Monomial m{t.mono.exponents};
        m.exponents[var_index] = e - 1;
        out.push_back({std::move(m), t.coeff * e});
    }
    return Polynomial::from_terms(p.vars(), std::move(out));
}

// Non-increasing exponent patterns of length n with entries <= max_degree;
// index patterns for the monomial symmetric basis of the target space.
inline std::vector<std::vector<int>> box_patterns(int n, int max_degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n));
    auto emit = [&](auto&& self, int pos, int bound) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int e = bound; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, e);
        }
    };
    emit(emit, 0, max_degree);
    return out;
}

// The interpolation functional attached to a column subset, for rational
// nodes: scaled derivatives of g (plain derivatives divided by the factorial)
// followed by evaluation at the block values.
inline Scalar oracle_functional(const Polynomial& g, const NodeMultiset& nodes,
                                const ColumnSubset& subset) {
    const VariableSet& vars = g.vars();
    auto labels = nodes.labels();
    Polynomial cur = g;
    Scalar factorial = 1;
    for (std::size_t k = 0; k < subset.picks.size(); ++k) {
        int order = labels[static_cast<std::size_t>(subset.picks[k])].order;
        for (int t = 1; t <= order; ++t) {
            cur = plain_partial(cur, k);
            factorial *= t;
        }
    }
    std::map<std::string, Scalar> at;
    for (std::size_t k = 0; k < subset.picks.size(); ++k) {
        int block = labels[static_cast<std::size_t>(subset.picks[k])].block;
        at.emplace(vars.main()[k],
                   std::get<Scalar>(nodes.blocks()[static_cast<std::size_t>(block)].value));
    }
    return substitute(cur, at).constant_value() / factorial;
}

// Dense linear-algebra interpolant for rational nodes: solve for the
// coordinates of r in the monomial symmetric basis of the target space from
// the interpolation conditions, bypassing reduction entirely. For distinct
// nodes the conditions are plain evaluations; with multiplicities they are
// scaled derivatives of the Vandermonde multiple.
inline Polynomial oracle_interpolant(const Polynomial& h, const NodeMultiset& nodes) {
    if (nodes.has_symbolic_values())
        throw std::logic_error("oracle_interpolant: rational nodes only");
    const VariableSet& vars = h.vars();
    const int n = static_cast<int>(vars.main_count());
    const int d = nodes.d();
    auto patterns = box_patterns(n, d - n);
    std::vector<Polynomial> basis;
    basis.reserve(patterns.size());
    for (const auto& pat : patterns) basis.push_back(symmetrized_monomial(vars, pat));
    auto subsets = enumerate_subsets(d, n);
    if (subsets.size() != patterns.size())
        throw std::logic_error("oracle_interpolant: basis/conditions size mismatch");

    auto functional = [&](const Polynomial& p, const ColumnSubset& subset) -> Scalar {
        if (nodes.all_multiplicity_one()) {
            auto labels = nodes.labels();
            std::map<std::string, Scalar> at;
            for (std::size_t k = 0; k < subset.picks.size(); ++k) {
                int block = labels[static_cast<std::size_t>(subset.picks[k])].block;
                at.emplace(vars.main()[k],
                           std::get<Scalar>(
                               nodes.blocks()[static_cast<std::size_t>(block)].value));
            }
            return substitute(p, at).constant_value();
        }
        return oracle_functional(vandermonde_poly(vars) * p, nodes, subset);
    };

    const std::size_t size = subsets.size();
    std::vector<std::vector<Scalar>> m(size, std::vector<Scalar>(size));
    std::vector<Scalar> rhs(size);
    for (std::size_t row = 0; row < size; ++row) {
        for (std::size_t col = 0; col < size; ++col)
            m[row][col] = functional(basis[col], subsets[row]);
        rhs[row] = functional(h, subsets[row]);
    }
    auto solution = gauss_solve(std::move(m), std::move(rhs));
    if (!solution) throw std::logic_error("oracle_interpolant: singular condition matrix");
    Polynomial r(vars);
    for (std::size_t j = 0; j < size; ++j) r += (*solution)[j] * basis[j];
    return r;
}

// Leibniz permutation sum.
inline Polynomial permutation_determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::logic_error("permutation_determinant: not square");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial::constant(m.vars(), 1);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Polynomial acc(m.vars());
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Polynomial prod = Polynomial::constant(m.vars(), 1);
        for (std::size_t i = 0; i < n; ++i) prod *= m.at(i, perm[i]);
        if (inversions % 2 == 0)
            acc += prod;
        else
            acc -= prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// Dense univariate long division: remainder of h modulo prod (x - a_i), for
// rational nodes and a single main variable.
inline Polynomial oracle_univariate_remainder(const Polynomial& h, const NodeMultiset& nodes) {
    if (nodes.has_symbolic_values())
        throw std::logic_error("oracle_univariate_remainder: rational nodes only");
    const VariableSet& vars = h.vars();
    if (vars.main_count() != 1 || vars.param_count() != 0)
        throw std::logic_error("oracle_univariate_remainder: univariate input only");
    std::vector<Scalar> hc(static_cast<std::size_t>(std::max(h.degree_in(0), 0)) + 1, Scalar(0));
    for (const auto& t : h.terms()) hc[static_cast<std::size_t>(t.mono.exponents[0])] = t.coeff;
    std::vector<Scalar> fc{1};
    for (const NodeBlock& b : nodes.blocks()) {
        for (int j = 0; j < b.multiplicity; ++j) {
            std::vector<Scalar> next(fc.size() + 1, Scalar(0));
            for (std::size_t i = 0; i < fc.size(); ++i) {
                next[i + 1] += fc[i];
                next[i] -= fc[i] * std::get<Scalar>(b.value);
            }
            fc = std::move(next);
        }
    }
    while (hc.size() >= fc.size()) {
        Scalar lead = hc.back();
        std::size_t shift = hc.size() - fc.size();
        for (std::size_t i = 0; i < fc.size(); ++i) hc[shift + i] -= lead * fc[i];
        hc.pop_back();
    }
    std::vector<Polynomial::Term> out;
    for (std::size_t e = 0; e < hc.size(); ++e)
        if (hc[e] != 0) out.push_back({Monomial{{static_cast<int>(e)}}, hc[e]});
    return Polynomial::from_terms(vars, std::move(out));
}

// ------------------------------------------------------------- generators

inline Scalar random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 4);
    return make_scalar(num, den);
}

inline Polynomial random_polynomial(const VariableSet& vars, int max_degree,
                                    std::mt19937_64& rng) {
    std::vector<Polynomial::Term> terms;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < count; ++t) {
        std::vector<int> exps(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i)
            exps[i] = static_cast<int>(rng() % (static_cast<unsigned long long>(max_degree) + 1));
        terms.push_back({Monomial{std::move(exps)}, random_rational(rng)});
    }
    return Polynomial::from_terms(vars, std::move(terms));
}

// Distinct rational values with multiplicities summing to d.
inline NodeMultiset random_rational_multiset(std::mt19937_64& rng, int d) {
    static const long pool_num[] = {0, 1, -1, 2, -2, 3, -3, 1, -1, 3, 4, 5};
    static const long pool_den[] = {1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 1, 1};
    constexpr int pool_size = 12;
    int block_count = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(d));
    std::vector<int> mult(static_cast<std::size_t>(block_count), 1);
    for (int left = d - block_count; left > 0; --left)
        ++mult[static_cast<std::size_t>(rng() % static_cast<unsigned long long>(block_count))];
    std::vector<int> pool_index(pool_size);
    for (int i = 0; i < pool_size; ++i) pool_index[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < block_count; ++i) {
        int j = i + static_cast<int>(rng() % static_cast<unsigned long long>(pool_size - i));
        std::swap(pool_index[static_cast<std::size_t>(i)], pool_index[static_cast<std::size_t>(j)]);
    }
    std::vector<NodeBlock> blocks;
    for (int i = 0; i < block_count; ++i) {
        int pick = pool_index[static_cast<std::size_t>(i)];
        blocks.push_back({NodeValue{make_scalar(pool_num[pick], pool_den[pick])},
                          mult[static_cast<std::size_t>(i)]});
    }
    return NodeMultiset(std::move(blocks));
}

} // namespace testsupport
