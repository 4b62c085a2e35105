#pragma once

#include "symhermite/interpolate.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace symhermite {

struct SuiteResult {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

struct VerifyFixture {
    NodeMultiset nodes;
    int n;
};

// Session variables for a fixture: main variables x1..xn plus the node
// symbols as parameters.
VariableSet fixture_vars(const NodeMultiset& nodes, int n);

// Small battery of rational and symbolic multisets, d <= 5, n <= 3.
std::vector<VerifyFixture> default_fixtures();

// A few rational multiples of symmetrized monomial patterns with
// per-variable degree <= max_degree. Deterministic given the generator state.
Polynomial random_symmetric(const VariableSet& vars, int max_degree, std::mt19937_64& rng);

// identities: the recurrence g_i*(x_1 - x_i) = g_{i-1}(x_1..x_{i-1})
//             - g_{i-1}(x_2..x_i) and the telescoping expansion of f(x_k).
// vdm:        det of the assembled confluent Vandermonde matrix against the
//             closed product formula.
// bridge:     v_n * normal form modulo G equals normal form of v_n * h
//             modulo F.
// methods:    cross-method agreement of the interpolant.
// basis:      the omega expansion reproduces members of the target space and
//             arbitrary interpolants.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, const std::vector<VerifyFixture>& fixtures,
                      unsigned long long seed,
                      std::optional<Method> required_method = std::nullopt);

} // namespace symhermite
