#include "symhermite/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace symhermite {

int Monomial::degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
}

bool Monomial::is_constant() const {
    for (int e : exponents)
        if (e != 0) return false;
    return true;
}

int compare_monomials(const Monomial& a, const Monomial& b, std::size_t main_count) {
    const auto& e = a.exponents;
    const auto& f = b.exponents;
    assert(e.size() == f.size());
    for (std::size_t i = main_count; i-- > 0;)
        if (e[i] != f[i]) return e[i] < f[i] ? -1 : 1;
    for (std::size_t i = e.size(); i-- > main_count;)
        if (e[i] != f[i]) return e[i] < f[i] ? -1 : 1;
    return 0;
}

Polynomial::Polynomial(VariableSet vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(VariableSet vars, Scalar value) {
    Polynomial p(std::move(vars));
    if (value != 0)
        p.terms_.push_back({Monomial{std::vector<int>(p.vars_.size(), 0)}, std::move(value)});
    return p;
}

Polynomial Polynomial::variable(VariableSet vars, const std::string& name) {
    auto idx = vars.index_of(name);
    if (!idx) throw PreconditionError("unknown variable '" + name + "'");
    Monomial m{std::vector<int>(vars.size(), 0)};
    m.exponents[*idx] = 1;
    return term(std::move(vars), std::move(m), 1);
}

Polynomial Polynomial::term(VariableSet vars, Monomial mono, Scalar coeff) {
    Polynomial p(std::move(vars));
    if (mono.exponents.size() != p.vars_.size())
        throw PreconditionError("exponent vector length mismatch");
    for (int e : mono.exponents)
        if (e < 0) throw PreconditionError("negative exponent");
    if (coeff != 0) p.terms_.push_back({std::move(mono), std::move(coeff)});
    return p;
}

Polynomial Polynomial::from_terms(VariableSet vars, std::vector<Term> terms) {
    Polynomial p(std::move(vars));
    for (const Term& t : terms) {
        if (t.mono.exponents.size() != p.vars_.size())
            throw PreconditionError("exponent vector length mismatch");
        for (int e : t.mono.exponents)
            if (e < 0) throw PreconditionError("negative exponent");
    }
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

Scalar Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw PreconditionError("polynomial is not constant");
    return terms_[0].coeff;
}

int Polynomial::degree_in(std::size_t var_index) const {
    if (var_index >= vars_.size()) throw PreconditionError("variable index out of range");
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.exponents[var_index]);
    return d;
}

int Polynomial::degree_in(const std::string& name) const {
    auto idx = vars_.index_of(name);
    if (!idx) throw PreconditionError("unknown variable '" + name + "'");
    return degree_in(*idx);
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

Scalar Polynomial::coefficient(const Monomial& mono) const {
    for (const Term& t : terms_)
        if (t.mono == mono) return t.coeff;
    return 0;
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
    return terms_.back();
}

void Polynomial::normalize() {
    const std::size_t nmain = vars_.main_count();
    std::sort(terms_.begin(), terms_.end(), [nmain](const Term& a, const Term& b) {
        return compare_monomials(a.mono, b.mono, nmain) < 0;
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
        if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
    }
    terms_ = std::move(merged);
}

void Polynomial::check_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) throw PreconditionError("variable-set mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_same_vars(*this, rhs);
    terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_same_vars(*this, rhs);
    terms_.reserve(terms_.size() + rhs.terms_.size());
    for (const Term& t : rhs.terms_) terms_.push_back({t.mono, -t.coeff});
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    check_same_vars(*this, rhs);
    std::vector<Term> out;
    out.reserve(terms_.size() * rhs.terms_.size());
    for (const Term& a : terms_) {
        for (const Term& b : rhs.terms_) {
            Monomial m{a.mono.exponents};
            for (std::size_t i = 0; i < m.exponents.size(); ++i)
                m.exponents[i] += b.mono.exponents[i];
            out.push_back({std::move(m), a.coeff * b.coeff});
        }
    }
    terms_ = std::move(out);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& rhs) {
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.coeff *= rhs;
    return *this;
}

Polynomial pow(const Polynomial& base, int exponent) {
    if (exponent < 0) throw PreconditionError("negative exponent");
    Polynomial r = Polynomial::constant(base.vars(), 1);
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

Polynomial coefficient_in_power(const Polynomial& p, std::size_t var_index, int k) {
    if (var_index >= p.vars().size()) throw PreconditionError("variable index out of range");
    std::vector<Polynomial::Term> out;
    for (const auto& t : p.terms()) {
        if (t.mono.exponents[var_index] != k) continue;
        Monomial m{t.mono.exponents};
        m.exponents[var_index] = 0;
        out.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(p.vars(), std::move(out));
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) return std::nullopt;
    if (p.vars() != q.vars()) throw PreconditionError("variable-set mismatch");
    const std::size_t nmain = p.vars().main_count();
    Polynomial rem = p;
    std::vector<Polynomial::Term> quot;
    while (!rem.is_zero()) {
        const Polynomial::Term lr = rem.leading_term(); // copy: rem mutates below
        const auto& lq = q.leading_term();
        Monomial m{lr.mono.exponents};
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            m.exponents[i] -= lq.mono.exponents[i];
            if (m.exponents[i] < 0) return std::nullopt;
        }
        Scalar c = lr.coeff / lq.coeff;
        Polynomial t = Polynomial::term(p.vars(), m, c);
        quot.push_back({std::move(m), std::move(c)});
        rem -= t * q;
        if (!rem.is_zero() &&
            compare_monomials(rem.leading_term().mono, lr.mono, nmain) >= 0)
            return std::nullopt; // no strict progress: not divisible
    }
    return Polynomial::from_terms(p.vars(), std::move(quot));
}

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
    std::map<std::size_t, const Polynomial*> bound;
    for (const auto& [name, value] : bindings) {
        auto idx = p.vars().index_of(name);
        if (!idx) throw PreconditionError("unknown variable '" + name + "'");
        if (value.vars() != p.vars()) throw PreconditionError("variable-set mismatch");
        bound.emplace(*idx, &value);
    }
    Polynomial acc(p.vars());
    for (const auto& t : p.terms()) {
        Monomial keep{t.mono.exponents};
        Polynomial factor = Polynomial::constant(p.vars(), 1);
        for (const auto& [idx, value] : bound) {
            int e = keep.exponents[idx];
            if (e == 0) continue;
            keep.exponents[idx] = 0;
            factor *= pow(*value, e);
        }
        acc += Polynomial::term(p.vars(), std::move(keep), t.coeff) * factor;
    }
    return acc;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Scalar>& bindings) {
    Bindings b;
    for (const auto& [name, value] : bindings)
        b.emplace(name, Polynomial::constant(p.vars(), value));
    return substitute(p, b);
}

Polynomial scaled_partial(const Polynomial& p, const std::string& var, int order) {
    auto idx = p.vars().index_of(var);
    if (!idx) throw PreconditionError("unknown variable '" + var + "'");
    if (order < 0) throw PreconditionError("negative derivative order");
    if (order == 0) return p;
    std::vector<Polynomial::Term> out;
    for (const auto& t : p.terms()) {
        int e = t.mono.exponents[*idx];
        if (e < order) continue;
        Monomial m{t.mono.exponents};
        m.exponents[*idx] = e - order;
        out.push_back({std::move(m), t.coeff * Scalar(binomial(e, order))});
    }
    return Polynomial::from_terms(p.vars(), std::move(out));
}

bool is_symmetric(const Polynomial& p) {
    const std::size_t n = p.vars().main_count();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::vector<Polynomial::Term> swapped;
        swapped.reserve(p.terms().size());
        for (const auto& t : p.terms()) {
            Monomial m{t.mono.exponents};
            std::swap(m.exponents[k], m.exponents[k + 1]);
            swapped.push_back({std::move(m), t.coeff});
        }
        if (Polynomial::from_terms(p.vars(), std::move(swapped)) != p) return false;
    }
    return true;
}

} // namespace symhermite
