#pragma once

#include "symhermite/errors.hpp"
#include "symhermite/scalar.hpp"
#include "symhermite/variables.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symhermite {

// Exponent vector over a VariableSet, main variables first, then parameters.
struct Monomial {
    std::vector<int> exponents;

    int degree() const;
    bool is_constant() const;
    bool operator==(const Monomial& other) const { return exponents == other.exponents; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }
};

// Pure lex order induced by x_1 < x_2 < ... < x_n: the exponent of x_n is
// compared first, then x_{n-1}, and so on. Parameter variables rank below
// every main variable (last parameter most significant among them).
// Returns <0, 0 or >0.
int compare_monomials(const Monomial& a, const Monomial& b, std::size_t main_count);

// Sparse multivariate polynomial with exact rational coefficients over a fixed
// VariableSet. Terms are kept sorted ascending in the term order, monomials
// unique, no zero coefficients; equal polynomials have identical term lists.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Scalar coeff;

        bool operator==(const Term& other) const {
            return mono == other.mono && coeff == other.coeff;
        }
    };

    Polynomial() = default; // zero over the empty variable set
    explicit Polynomial(VariableSet vars);

    static Polynomial constant(VariableSet vars, Scalar value);
    static Polynomial variable(VariableSet vars, const std::string& name);
    static Polynomial term(VariableSet vars, Monomial mono, Scalar coeff);
    static Polynomial from_terms(VariableSet vars, std::vector<Term> terms);

    const VariableSet& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const; // requires is_constant()

    // Highest exponent of the given variable; -1 for the zero polynomial.
    int degree_in(std::size_t var_index) const;
    int degree_in(const std::string& name) const;
    int total_degree() const; // -1 for the zero polynomial

    Scalar coefficient(const Monomial& mono) const;
    const Term& leading_term() const; // max in the term order; requires nonzero

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Scalar& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { a *= b; return a; }
    friend Polynomial operator*(Polynomial a, const Scalar& b) { a *= b; return a; }
    friend Polynomial operator*(const Scalar& a, Polynomial b) { b *= a; return b; }

    bool operator==(const Polynomial& other) const {
        return vars_ == other.vars_ && terms_ == other.terms_;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

private:
    VariableSet vars_;
    std::vector<Term> terms_;

    void normalize();
    static void check_same_vars(const Polynomial& a, const Polynomial& b);
};

Polynomial pow(const Polynomial& base, int exponent); // exponent >= 0

// Polynomial c with p = ... + c * x_i^k + ... and deg_{x_i}(c) = 0.
Polynomial coefficient_in_power(const Polynomial& p, std::size_t var_index, int k);

// Exact quotient p / q, or nullopt when q does not divide p (or q == 0).
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q);

// Simultaneous substitution. Every key must name a variable of p; values must
// live over the same VariableSet as p. Unbound variables stay themselves.
using Bindings = std::map<std::string, Polynomial>;
Polynomial substitute(const Polynomial& p, const Bindings& bindings);
Polynomial substitute(const Polynomial& p, const std::map<std::string, Scalar>& bindings);

// Hasse derivative: order-j partial in `var`, divided by j!. Term-wise this
// maps c*x^e to c*C(e,j)*x^(e-j). Order 0 is the identity.
Polynomial scaled_partial(const Polynomial& p, const std::string& var, int order);

// Invariance under every transposition of adjacent main variables.
bool is_symmetric(const Polynomial& p);

} // namespace symhermite
