#include "symhermite/symmetric.hpp"

#include "symhermite/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace symhermite {

Polynomial complete_homogeneous(int var_count, int degree, const VariableSet& vars) {
    if (var_count < 1 || static_cast<std::size_t>(var_count) > vars.main_count())
        throw PreconditionError("variable count out of range");
    if (degree < 0) throw PreconditionError("negative degree");
    std::vector<Polynomial::Term> terms;
    std::vector<int> exps(vars.size(), 0);
    auto emit = [&](auto&& self, int var, int remaining) -> void {
        if (var == var_count - 1) {
            exps[var] = remaining;
            terms.push_back({Monomial{exps}, 1});
            exps[var] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    emit(emit, 0, degree);
    return Polynomial::from_terms(vars, std::move(terms));
}

Polynomial elementary_symmetric(int k, const std::vector<Polynomial>& values) {
    if (values.empty()) throw PreconditionError("empty value list");
    if (k < 0 || static_cast<std::size_t>(k) > values.size())
        throw PreconditionError("k out of range");
    const VariableSet& vars = values[0].vars();
    for (const Polynomial& v : values)
        if (v.vars() != vars) throw PreconditionError("variable-set mismatch");
    std::vector<Polynomial> e(static_cast<std::size_t>(k) + 1, Polynomial(vars));
    e[0] = Polynomial::constant(vars, 1);
    std::size_t used = 0;
    for (const Polynomial& v : values) {
        ++used;
        for (std::size_t t = std::min<std::size_t>(k, used); t >= 1; --t)
            e[t] += v * e[t - 1];
    }
    return e[static_cast<std::size_t>(k)];
}

Polynomial elementary_symmetric(int k, const std::vector<Scalar>& values,
                                const VariableSet& vars) {
    std::vector<Polynomial> lifted;
    lifted.reserve(values.size());
    for (const Scalar& v : values) lifted.push_back(Polynomial::constant(vars, v));
    return elementary_symmetric(k, lifted);
}

Polynomial vandermonde_poly(const VariableSet& vars) {
    const std::size_t n = vars.main_count();
    if (n == 0) throw PreconditionError("no main variables");
    Polynomial acc = Polynomial::constant(vars, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            acc *= Polynomial::variable(vars, vars.main()[j]) -
                   Polynomial::variable(vars, vars.main()[i]);
    return acc;
}

Polynomial symmetrized_monomial(const VariableSet& vars, const std::vector<int>& exponents) {
    const std::size_t n = vars.main_count();
    if (exponents.size() != n) throw PreconditionError("exponent pattern length mismatch");
    for (int e : exponents)
        if (e < 0) throw PreconditionError("negative exponent");
    std::vector<int> pattern = exponents;
    std::sort(pattern.begin(), pattern.end());
    std::vector<Polynomial::Term> terms;
    do {
        std::vector<int> exps(vars.size(), 0);
        for (std::size_t i = 0; i < n; ++i) exps[i] = pattern[i];
        terms.push_back({Monomial{std::move(exps)}, 1});
    } while (std::next_permutation(pattern.begin(), pattern.end()));
    return Polynomial::from_terms(vars, std::move(terms));
}

Polynomial schur_polynomial(const SchurIndex& index, const VariableSet& vars) {
    const std::size_t n = vars.main_count();
    if (index.columns.size() != n) throw PreconditionError("index size mismatch");
    for (std::size_t l = 0; l < n; ++l) {
        if (index.columns[l] < 0) throw PreconditionError("negative column index");
        if (l > 0 && index.columns[l] <= index.columns[l - 1])
            throw PreconditionError("column indices must increase strictly");
    }
    PolyMatrix alt(vars, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial xk = Polynomial::variable(vars, vars.main()[k]);
        for (std::size_t l = 0; l < n; ++l)
            alt.at(k, l) = pow(xk, index.columns[l]);
    }
    auto q = exact_divide(determinant(alt), vandermonde_poly(vars));
    if (!q) throw std::logic_error("bialternant quotient not exact");
    return *q;
}

} // namespace symhermite
