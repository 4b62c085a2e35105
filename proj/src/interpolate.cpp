#include "symhermite/interpolate.hpp"

#include "symhermite/normal_form.hpp"
#include "symhermite/symmetric.hpp"
#include "symhermite/vandermonde.hpp"

#include <stdexcept>

namespace symhermite {

BasisElement basis_element(const NodeMultiset& nodes, const ColumnSubset& subset,
                           const VariableSet& vars) {
    const int d = nodes.d();
    const std::size_t n = vars.main_count();
    validate_subset(subset, d);
    if (subset.picks.size() != n)
        throw PreconditionError("subset size must match the number of main variables");
    PolyMatrix trimmed = delete_columns(assemble_vdm(nodes, vars), subset);
    Polynomial det_form = determinant(attach_variable_columns(trimmed, vars));
    auto omega = exact_divide(det_form, vandermonde_poly(vars));
    if (!omega) throw std::logic_error("basis determinant not divisible by the Vandermonde");
    return {subset, std::move(det_form), std::move(*omega)};
}

Polynomial derivative_evaluate(const Polynomial& g, const NodeMultiset& nodes,
                               const ColumnSubset& subset) {
    const VariableSet& vars = g.vars();
    const std::size_t n = vars.main_count();
    validate_subset(subset, nodes.d());
    if (subset.picks.size() != n)
        throw PreconditionError("subset size must match the number of main variables");
    auto labels = nodes.labels();
    Polynomial out = g;
    for (std::size_t k = 0; k < n; ++k) {
        const NodeLabel& label = labels[static_cast<std::size_t>(subset.picks[k])];
        out = scaled_partial(out, vars.main()[k], label.order);
    }
    Bindings at_node;
    for (std::size_t k = 0; k < n; ++k) {
        const NodeLabel& label = labels[static_cast<std::size_t>(subset.picks[k])];
        at_node.emplace(vars.main()[k], nodes.value_poly(label.block, vars));
    }
    return substitute(out, at_node);
}

namespace {

// det_form evaluated under the subset's functional equals eps * det V_d(A).
int sign_from_det_form(const Polynomial& det_form, const NodeMultiset& nodes,
                       const ColumnSubset& subset, const Polynomial& vdm_det) {
    Polynomial value = derivative_evaluate(det_form, nodes, subset);
    auto ratio = exact_divide(value, vdm_det);
    if (!ratio || !ratio->is_constant())
        throw std::logic_error("sign evaluation did not yield a constant");
    Scalar s = ratio->constant_value();
    if (s == 1) return 1;
    if (s == -1) return -1;
    throw std::logic_error("sign evaluation yielded a constant other than +-1");
}

} // namespace

int epsilon_sign(const NodeMultiset& nodes, const ColumnSubset& subset,
                 const VariableSet& vars) {
    BasisElement el = basis_element(nodes, subset, vars);
    return sign_from_det_form(el.det_form, nodes, subset, vdm_det_formula(nodes, vars));
}

std::optional<Polynomial> CoordinateVector::entry(std::size_t k) const {
    if (k >= numerators.size()) throw PreconditionError("coordinate index out of range");
    auto q = exact_divide(numerators[k], denominator);
    if (!q) return std::nullopt;
    if (signs[k] < 0) return -*q;
    return q;
}

CoordinateVector coordinates(const Polynomial& h, const NodeMultiset& nodes) {
    if (!is_symmetric(h)) throw PreconditionError("input must be symmetric");
    const VariableSet& vars = h.vars();
    const int n = static_cast<int>(vars.main_count());
    const int d = nodes.d();
    if (n < 1) throw PreconditionError("no main variables");
    if (n > d) throw PreconditionError("need |A| >= n");
    Polynomial g = vandermonde_poly(vars) * h;
    Polynomial vdm_det = vdm_det_formula(nodes, vars);
    CoordinateVector out;
    out.subsets = enumerate_subsets(d, n);
    out.denominator = vdm_det;
    for (const ColumnSubset& subset : out.subsets) {
        BasisElement el = basis_element(nodes, subset, vars);
        int eps = sign_from_det_form(el.det_form, nodes, subset, vdm_det);
        out.signs.push_back(eps);
        out.numerators.push_back(derivative_evaluate(g, nodes, subset));
    }
    return out;
}

Polynomial lagrange_interpolant(const Polynomial& h, const NodeMultiset& nodes) {
    if (!is_symmetric(h)) throw PreconditionError("input must be symmetric");
    if (!nodes.all_multiplicity_one())
        throw PreconditionError("Lagrange path requires distinct nodes");
    if (nodes.has_symbolic_values()) return hermite_normal_form(h, nodes);
    const VariableSet& vars = h.vars();
    const int n = static_cast<int>(vars.main_count());
    const int d = nodes.d();
    if (n < 1) throw PreconditionError("no main variables");
    if (n > d) throw PreconditionError("need |A| >= n");
    std::vector<Scalar> values;
    values.reserve(static_cast<std::size_t>(d));
    for (const NodeBlock& b : nodes.blocks()) values.push_back(std::get<Scalar>(b.value));
    Polynomial acc(vars);
    for (const ColumnSubset& subset : enumerate_subsets(d, n)) {
        std::vector<bool> picked(static_cast<std::size_t>(d), false);
        for (int c : subset.picks) picked[static_cast<std::size_t>(c)] = true;
        std::map<std::string, Scalar> at_subset;
        for (int k = 0; k < n; ++k)
            at_subset.emplace(vars.main()[static_cast<std::size_t>(k)],
                              values[static_cast<std::size_t>(subset.picks[k])]);
        Scalar h_at = substitute(h, at_subset).constant_value();
        Scalar denom = 1;
        for (int c : subset.picks)
            for (int other = 0; other < d; ++other)
                if (!picked[static_cast<std::size_t>(other)])
                    denom *= values[static_cast<std::size_t>(c)] -
                             values[static_cast<std::size_t>(other)];
        Polynomial numer = Polynomial::constant(vars, 1);
        for (int k = 0; k < n; ++k) {
            Polynomial xk = Polynomial::variable(vars, vars.main()[static_cast<std::size_t>(k)]);
            for (int other = 0; other < d; ++other)
                if (!picked[static_cast<std::size_t>(other)])
                    numer *= xk - Polynomial::constant(
                                      vars, values[static_cast<std::size_t>(other)]);
        }
        acc += (h_at / denom) * numer;
    }
    return acc;
}

Polynomial taylor_interpolant(const Polynomial& h, int d) {
    if (!is_symmetric(h)) throw PreconditionError("input must be symmetric");
    const VariableSet& vars = h.vars();
    const int n = static_cast<int>(vars.main_count());
    if (n < 1) throw PreconditionError("no main variables");
    if (n > d) throw PreconditionError("need |A| >= n");
    NodeMultiset zero({NodeBlock{NodeValue{Scalar(0)}, d}});
    Polynomial g = vandermonde_poly(vars) * h;
    Polynomial acc(vars);
    for (const ColumnSubset& subset : enumerate_subsets(d, n)) {
        Polynomial t = derivative_evaluate(g, zero, subset);
        acc += t * schur_polynomial(SchurIndex{subset.picks}, vars);
    }
    return acc;
}

std::optional<Method> parse_method(const std::string& name) {
    if (name == "normal_form") return Method::normal_form;
    if (name == "basis") return Method::basis;
    if (name == "lagrange") return Method::lagrange;
    if (name == "taylor") return Method::taylor;
    if (name == "bridge") return Method::bridge;
    return std::nullopt;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::normal_form: return "normal_form";
        case Method::basis: return "basis";
        case Method::lagrange: return "lagrange";
        case Method::taylor: return "taylor";
        case Method::bridge: return "bridge";
    }
    throw std::logic_error("unknown method");
}

Polynomial hermite_interpolant(const Polynomial& h, const NodeMultiset& nodes,
                               Method method) {
    switch (method) {
        case Method::normal_form:
            return hermite_normal_form(h, nodes);
        case Method::basis: {
            if (!is_symmetric(h)) throw PreconditionError("input must be symmetric");
            CoordinateVector cv = coordinates(h, nodes);
            Polynomial acc(h.vars());
            for (std::size_t k = 0; k < cv.subsets.size(); ++k) {
                Polynomial term =
                    cv.numerators[k] *
                    basis_element(nodes, cv.subsets[k], h.vars()).omega;
                if (cv.signs[k] < 0) term = -term;
                acc += term;
            }
            auto r = exact_divide(acc, cv.denominator);
            if (!r) throw std::logic_error("coordinate expansion not divisible by det V_d");
            return *r;
        }
        case Method::lagrange:
            return lagrange_interpolant(h, nodes);
        case Method::taylor: {
            if (nodes.block_count() != 1 || is_symbolic(nodes.blocks()[0].value) ||
                std::get<Scalar>(nodes.blocks()[0].value) != 0)
                throw PreconditionError("taylor method requires the d-fold zero node");
            return taylor_interpolant(h, nodes.d());
        }
        case Method::bridge: {
            if (!is_symmetric(h)) throw PreconditionError("input must be symmetric");
            Polynomial vn = vandermonde_poly(h.vars());
            Polynomial rf = f_normal_form(vn * h, nodes);
            auto r = exact_divide(rf, vn);
            if (!r) throw std::logic_error("power normal form not divisible by the Vandermonde");
            return *r;
        }
    }
    throw std::logic_error("unknown method");
}

} // namespace symhermite
