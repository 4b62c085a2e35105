#pragma once

#include "symhermite/nodes.hpp"
#include "symhermite/polynomial.hpp"

#include <vector>

namespace symhermite {

struct ReductionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients; // h = remainder + sum quotients[i] * members[i]
};

// Divide h by a triangular family: member i is monic in x_i with leading term
// x_i^{e_i} and x_i-degree of every other term below e_i, so eliminating
// variables from x_n down to x_1 yields the unique normal form, with
// x_i-degree < e_i for every i.
ReductionResult reduce(const Polynomial& h, const IdealFamily& family);

// Normal form of a symmetric h modulo the Groebner family of the multiset:
// the symmetric Hermite interpolant, of degree <= d - n in each variable.
Polynomial hermite_normal_form(const Polynomial& h, const NodeMultiset& nodes);

// Normal form modulo the power family F = (f(x_1), ..., f(x_n)); defined for
// arbitrary h, no symmetry requirement.
Polynomial f_normal_form(const Polynomial& h, const NodeMultiset& nodes);

} // namespace symhermite
