#include "symhermite/normal_form.hpp"

#include <cassert>

namespace symhermite {

ReductionResult reduce(const Polynomial& h, const IdealFamily& family) {
    if (h.vars() != family.vars) throw PreconditionError("variable-set mismatch");
    const std::size_t n = family.members.size();
    ReductionResult out{h, std::vector<Polynomial>(n, Polynomial(family.vars))};
    for (std::size_t i = n; i-- > 0;) {
        const Polynomial& g = family.members[i];
        const int e = family.lead_exponents[i];
        int deg;
        while ((deg = out.remainder.degree_in(i)) >= e) {
            Polynomial c = coefficient_in_power(out.remainder, i, deg);
            Monomial shift{std::vector<int>(family.vars.size(), 0)};
            shift.exponents[i] = deg - e;
            Polynomial m = c * Polynomial::term(family.vars, std::move(shift), 1);
            out.quotients[i] += m;
            out.remainder -= m * g;
            assert(out.remainder.degree_in(i) < deg);
        }
    }
    return out;
}

Polynomial hermite_normal_form(const Polynomial& h, const NodeMultiset& nodes) {
    if (!is_symmetric(h)) throw PreconditionError("input must be symmetric");
    return reduce(h, build_G(nodes, h.vars())).remainder;
}

Polynomial f_normal_form(const Polynomial& h, const NodeMultiset& nodes) {
    return reduce(h, build_F(nodes, h.vars())).remainder;
}

} // namespace symhermite
