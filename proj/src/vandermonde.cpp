#include "symhermite/vandermonde.hpp"

namespace symhermite {

PolyMatrix vdm_block(const NodeValue& value, int d, int multiplicity,
                     const VariableSet& vars) {
    if (d < 1) throw PreconditionError("d must be positive");
    if (multiplicity < 1 || multiplicity > d)
        throw PreconditionError("multiplicity out of range");
    Polynomial a = is_symbolic(value)
                       ? Polynomial::variable(vars, std::get<std::string>(value))
                       : Polynomial::constant(vars, std::get<Scalar>(value));
    std::vector<Polynomial> powers;
    powers.reserve(static_cast<std::size_t>(d));
    powers.push_back(Polynomial::constant(vars, 1));
    for (int r = 1; r < d; ++r) powers.push_back(powers.back() * a);
    PolyMatrix block(vars, static_cast<std::size_t>(d), static_cast<std::size_t>(multiplicity));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c <= std::min(r, multiplicity - 1); ++c)
            block.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                Scalar(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(c))) *
                powers[static_cast<std::size_t>(r - c)];
    return block;
}

PolyMatrix assemble_vdm(const NodeMultiset& nodes, const VariableSet& vars) {
    const int d = nodes.d();
    PolyMatrix m(vars, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    std::size_t col = 0;
    for (int i = 0; i < nodes.block_count(); ++i) {
        const NodeBlock& b = nodes.blocks()[static_cast<std::size_t>(i)];
        PolyMatrix block = vdm_block(b.value, d, b.multiplicity, vars);
        for (std::size_t c = 0; c < block.cols(); ++c, ++col)
            for (std::size_t r = 0; r < block.rows(); ++r)
                m.at(r, col) = block.at(r, c);
    }
    return m;
}

PolyMatrix delete_columns(const PolyMatrix& m, const ColumnSubset& subset) {
    validate_subset(subset, static_cast<int>(m.cols()));
    PolyMatrix out(m.vars(), m.rows(), m.cols() - subset.picks.size());
    std::size_t to = 0;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (next < subset.picks.size() &&
            static_cast<std::size_t>(subset.picks[next]) == c) {
            ++next;
            continue;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) out.at(r, to) = m.at(r, c);
        ++to;
    }
    return out;
}

PolyMatrix attach_variable_columns(const PolyMatrix& m, const VariableSet& vars) {
    const std::size_t n = vars.main_count();
    if (m.vars() != vars) throw PreconditionError("variable-set mismatch");
    if (m.cols() + n != m.rows()) throw PreconditionError("dimension mismatch");
    PolyMatrix out(vars, m.rows(), m.rows());
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial xk = Polynomial::variable(vars, vars.main()[k]);
        Polynomial p = Polynomial::constant(vars, 1);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            out.at(r, k) = p;
            p *= xk;
        }
    }
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) out.at(r, n + c) = m.at(r, c);
    return out;
}

Polynomial vdm_det_formula(const NodeMultiset& nodes, const VariableSet& vars) {
    Polynomial acc = Polynomial::constant(vars, 1);
    for (int i = 0; i < nodes.block_count(); ++i) {
        for (int j = i + 1; j < nodes.block_count(); ++j) {
            Polynomial diff = nodes.value_poly(j, vars) - nodes.value_poly(i, vars);
            int e = nodes.blocks()[static_cast<std::size_t>(i)].multiplicity *
                    nodes.blocks()[static_cast<std::size_t>(j)].multiplicity;
            acc *= pow(diff, e);
        }
    }
    return acc;
}

} // namespace symhermite
