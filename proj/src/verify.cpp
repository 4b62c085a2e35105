#include "symhermite/verify.hpp"

#include "symhermite/normal_form.hpp"
#include "symhermite/parser.hpp"
#include "symhermite/symmetric.hpp"
#include "symhermite/vandermonde.hpp"

namespace symhermite {

VariableSet fixture_vars(const NodeMultiset& nodes, int n) {
    std::vector<std::string> mains;
    mains.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) mains.push_back("x" + std::to_string(i));
    return VariableSet(std::move(mains), nodes.symbols());
}

std::vector<VerifyFixture> default_fixtures() {
    auto fix = [](const char* spec, std::initializer_list<int> ns) {
        std::vector<VerifyFixture> out;
        NodeMultiset nodes = parse_node_spec(spec);
        for (int n : ns) out.push_back({nodes, n});
        return out;
    };
    std::vector<VerifyFixture> all;
    for (const auto& group : {
             fix("1, 2", {1, 2}),
             fix("0, 1, 2", {1, 2, 3}),
             fix("1/2^2, 3", {1, 2}),
             fix("0^4", {1, 2, 3}),
             fix("1^2, 2^2", {1, 2, 3}),
             fix("-1, 0, 1, 2", {2}),
             fix("a, b", {1, 2}),
             fix("a^2, b^2", {1, 2, 3}),
             fix("a, b, c", {2}),
             fix("a^3, b^2", {2}),
         })
        all.insert(all.end(), group.begin(), group.end());
    return all;
}

Polynomial random_symmetric(const VariableSet& vars, int max_degree, std::mt19937_64& rng) {
    if (max_degree < 0) throw PreconditionError("negative degree bound");
    const std::size_t n = vars.main_count();
    Polynomial acc(vars);
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> pattern(n);
        for (std::size_t i = 0; i < n; ++i)
            pattern[i] = static_cast<int>(rng() % (static_cast<unsigned long long>(max_degree) + 1));
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 4);
        acc += make_scalar(num, den) * symmetrized_monomial(vars, pattern);
    }
    return acc;
}

namespace {

std::string fixture_tag(const VerifyFixture& fx) {
    return "A = {" + fx.nodes.describe() + "}, n = " + std::to_string(fx.n);
}

void expect(SuiteResult& result, bool ok, const std::string& what) {
    ++result.checks;
    if (!ok) result.failures.push_back(what);
}

SuiteResult verify_identities(const std::vector<VerifyFixture>& fixtures) {
    SuiteResult result{"identities"};
    for (const auto& fx : fixtures) {
        VariableSet vars = fixture_vars(fx.nodes, fx.n);
        IdealFamily G = build_G(fx.nodes, vars);
        std::vector<Polynomial> xs;
        for (int i = 0; i < fx.n; ++i)
            xs.push_back(Polynomial::variable(vars, vars.main()[static_cast<std::size_t>(i)]));

        for (int i = 2; i <= fx.n; ++i) {
            const Polynomial& lower = G.members[static_cast<std::size_t>(i - 2)];
            Bindings shift;
            for (int t = 1; t < i; ++t)
                shift.emplace(vars.main()[static_cast<std::size_t>(t - 1)],
                              xs[static_cast<std::size_t>(t)]);
            Polynomial lhs = G.members[static_cast<std::size_t>(i - 1)] *
                             (xs[0] - xs[static_cast<std::size_t>(i - 1)]);
            Polynomial rhs = lower - substitute(lower, shift);
            expect(result, lhs == rhs,
                   fixture_tag(fx) + ": recurrence fails at i = " + std::to_string(i));
        }

        std::vector<Polynomial> coeffs = f_coefficients(fx.nodes, vars);
        for (int k = 1; k <= fx.n; ++k) {
            Polynomial fxk(vars);
            for (int t = 0; t <= fx.nodes.d(); ++t)
                fxk += coeffs[static_cast<std::size_t>(t)] *
                       pow(xs[static_cast<std::size_t>(k - 1)], t);
            Polynomial rhs(vars);
            Polynomial prefix = Polynomial::constant(vars, 1);
            for (int j = 1; j <= k; ++j) {
                rhs += prefix * G.members[static_cast<std::size_t>(j - 1)];
                prefix *= xs[static_cast<std::size_t>(k - 1)] - xs[static_cast<std::size_t>(j - 1)];
            }
            expect(result, fxk == rhs,
                   fixture_tag(fx) + ": telescoping fails at k = " + std::to_string(k));
        }
    }
    return result;
}

SuiteResult verify_vdm(const std::vector<VerifyFixture>& fixtures) {
    SuiteResult result{"vdm"};
    for (const auto& fx : fixtures) {
        VariableSet vars = fixture_vars(fx.nodes, fx.n);
        Polynomial det = determinant(assemble_vdm(fx.nodes, vars));
        Polynomial formula = vdm_det_formula(fx.nodes, vars);
        expect(result, det == formula, fixture_tag(fx) + ": determinant formula mismatch");
    }
    return result;
}

SuiteResult verify_bridge(const std::vector<VerifyFixture>& fixtures,
                          unsigned long long seed) {
    SuiteResult result{"bridge"};
    std::mt19937_64 rng(seed);
    for (const auto& fx : fixtures) {
        VariableSet vars = fixture_vars(fx.nodes, fx.n);
        Polynomial vn = vandermonde_poly(vars);
        for (int round = 0; round < 2; ++round) {
            Polynomial h = random_symmetric(vars, fx.nodes.d() - fx.n + 2, rng);
            Polynomial lhs = vn * hermite_normal_form(h, fx.nodes);
            Polynomial rhs = f_normal_form(vn * h, fx.nodes);
            expect(result, lhs == rhs,
                   fixture_tag(fx) + ", h = " + render(h) + ": bridge identity fails");
        }
    }
    return result;
}

SuiteResult verify_methods(const std::vector<VerifyFixture>& fixtures,
                           unsigned long long seed,
                           std::optional<Method> required_method) {
    SuiteResult result{"methods"};
    std::mt19937_64 rng(seed);
    for (const auto& fx : fixtures) {
        VariableSet vars = fixture_vars(fx.nodes, fx.n);
        Polynomial h = random_symmetric(vars, fx.nodes.d() - fx.n + 2, rng);
        Polynomial reference = hermite_interpolant(h, fx.nodes, Method::normal_form);
        std::vector<Method> methods{Method::basis, Method::bridge};
        if (fx.nodes.all_multiplicity_one()) methods.push_back(Method::lagrange);
        if (fx.nodes.block_count() == 1 && !is_symbolic(fx.nodes.blocks()[0].value) &&
            std::get<Scalar>(fx.nodes.blocks()[0].value) == 0)
            methods.push_back(Method::taylor);
        if (required_method) methods = {*required_method};
        for (Method m : methods) {
            Polynomial got = hermite_interpolant(h, fx.nodes, m);
            expect(result, got == reference,
                   fixture_tag(fx) + ", h = " + render(h) + ": method " + method_name(m) +
                       " disagrees with normal_form");
        }
    }
    return result;
}

SuiteResult verify_basis(const std::vector<VerifyFixture>& fixtures,
                         unsigned long long seed) {
    SuiteResult result{"basis"};
    std::mt19937_64 rng(seed);
    for (const auto& fx : fixtures) {
        VariableSet vars = fixture_vars(fx.nodes, fx.n);
        Polynomial member = random_symmetric(vars, fx.nodes.d() - fx.n, rng);
        expect(result, hermite_interpolant(member, fx.nodes, Method::basis) == member,
               fixture_tag(fx) + ", r = " + render(member) +
                   ": omega expansion does not reproduce a member of the space");
        Polynomial h = random_symmetric(vars, fx.nodes.d() - fx.n + 2, rng);
        expect(result,
               hermite_interpolant(h, fx.nodes, Method::basis) ==
                   hermite_normal_form(h, fx.nodes),
               fixture_tag(fx) + ", h = " + render(h) +
                   ": omega expansion disagrees with the normal form");
    }
    return result;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"identities", "vdm", "bridge", "methods", "basis"};
}

SuiteResult run_suite(const std::string& name, const std::vector<VerifyFixture>& fixtures,
                      unsigned long long seed, std::optional<Method> required_method) {
    if (name == "identities") return verify_identities(fixtures);
    if (name == "vdm") return verify_vdm(fixtures);
    if (name == "bridge") return verify_bridge(fixtures, seed);
    if (name == "methods") return verify_methods(fixtures, seed, required_method);
    if (name == "basis") return verify_basis(fixtures, seed);
    throw PreconditionError("unknown suite '" + name + "'");
}

} // namespace symhermite
