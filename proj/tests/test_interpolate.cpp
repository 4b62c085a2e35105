#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "symhermite/interpolate.hpp"
#include "symhermite/normal_form.hpp"
#include "symhermite/symmetric.hpp"
#include "symhermite/vandermonde.hpp"
#include "symhermite/verify.hpp"

using namespace symhermite;
using namespace testsupport;

namespace {

// Mains named x, y so displays read naturally; no aliases.
Polynomial PP(const std::string& text, const VariableSet& vars) {
    return parse_polynomial(text, vars);
}

Polynomial eval_at(const Polynomial& p, const Bindings& at) { return substitute(p, at); }

Polynomial at_zero(const Polynomial& p) {
    std::map<std::string, Scalar> at;
    for (const std::string& name : p.vars().main()) at.emplace(name, Scalar(0));
    return substitute(p, at);
}

} // namespace

TEST_CASE("omega basis for a pair of double nodes") {
    NodeMultiset nodes = parse_node_spec("a^2, b^2");
    VariableSet vs({"x", "y"}, nodes.symbols());
    auto subsets = enumerate_subsets(4, 2);
    REQUIRE(subsets.size() == 6);

    const char* displays[6] = {
        "(x - b)^2*(y - b)^2",
        "(b - a)*(2*(x^2 + x*y + y^2) - 3*(a + b)*(x + y) + 6*a*b)",
        "-(x - b)*(y - b)*(x*y + (-2*a + b)*(x + y) + 3*a^2 - 2*a*b)",
        "(x - a)*(y - a)*(x*y + (a - 2*b)*(x + y) + 3*b^2 - 2*a*b)",
        "(b - a)*(x - a)*(x - b)*(y - a)*(y - b)",
        "(x - a)^2*(y - a)^2",
    };
    const int eps[6] = {1, -1, 1, 1, -1, 1};
    Polynomial vn = vandermonde_poly(vs);
    for (std::size_t i = 0; i < 6; ++i) {
        CAPTURE(i);
        BasisElement el = basis_element(nodes, subsets[i], vs);
        CHECK(el.omega == PP(displays[i], vs));
        CHECK(el.det_form == el.omega * vn);
        CHECK(epsilon_sign(nodes, subsets[i], vs) == eps[i]);
    }
}

TEST_CASE("coordinate functionals for a pair of double nodes") {
    NodeMultiset nodes = parse_node_spec("a^2, b^2");
    VariableSet vs({"x", "y"}, nodes.symbols());
    Bindings at_aa{{"x", PP("a", vs)}, {"y", PP("a", vs)}};
    Bindings at_ab{{"x", PP("a", vs)}, {"y", PP("b", vs)}};
    Bindings at_bb{{"x", PP("b", vs)}, {"y", PP("b", vs)}};

    std::mt19937_64 rng(4242);
    std::vector<Polynomial> samples{
        PP("x^2*y^2", vs),
        PP("2*x^2*y^2 - 1/3*(x + y) + x*y + 5", vs),
        random_symmetric(vs, 2, rng),
    };
    for (const Polynomial& r : samples) {
        CAPTURE(render(r));
        Polynomial g = PP("y - x", vs) * r;
        Polynomial gx = plain_partial(g, 0);
        Polynomial gy = plain_partial(g, 1);
        Polynomial gxy = plain_partial(gy, 0);

        CoordinateVector cv = coordinates(r, nodes);
        REQUIRE(cv.subsets.size() == 6);
        CHECK(cv.signs == std::vector<int>{1, -1, 1, 1, -1, 1});
        CHECK(cv.denominator == pow(PP("b - a", vs), 4));
        CHECK(cv.numerators[0] == eval_at(gy, at_aa));
        CHECK(cv.numerators[1] == eval_at(g, at_ab));
        CHECK(cv.numerators[2] == eval_at(gy, at_ab));
        CHECK(cv.numerators[3] == eval_at(gx, at_ab));
        CHECK(cv.numerators[4] == eval_at(gxy, at_ab));
        CHECK(cv.numerators[5] == eval_at(gy, at_bb));

        Polynomial acc(vs);
        for (std::size_t k = 0; k < 6; ++k) {
            Polynomial term = cv.numerators[k] * basis_element(nodes, cv.subsets[k], vs).omega;
            if (cv.signs[k] < 0) term = -term;
            acc += term;
        }
        CHECK(acc == cv.denominator * r);
        CHECK(hermite_interpolant(r, nodes, Method::basis) == r);
    }
}

TEST_CASE("derivative functionals for a triple and a double node") {
    NodeMultiset nodes = parse_node_spec("a^3, b^2");
    VariableSet vs({"x", "y"}, nodes.symbols());
    Polynomial vd = vdm_det_formula(nodes, vs);
    CHECK(vd == pow(PP("b - a", vs), 6));

    ColumnSubset a1{{1, 3}}; // (a_1; b_0)
    ColumnSubset a2{{0, 3}}; // (a_0; b_0)
    Polynomial v1 = basis_element(nodes, a1, vs).det_form;
    Polynomial v2 = basis_element(nodes, a2, vs).det_form;

    Bindings at_ab{{"x", PP("a", vs)}, {"y", PP("b", vs)}};
    CHECK(eval_at(v1, at_ab).is_zero());
    CHECK(eval_at(v2, at_ab) == vd);
    CHECK(derivative_evaluate(v1, nodes, a1) == -vd);
    CHECK(derivative_evaluate(v2, nodes, a1).is_zero());
    CHECK(epsilon_sign(nodes, a1, vs) == -1);
    CHECK(epsilon_sign(nodes, a2, vs) == 1);
}

TEST_CASE("scaled derivative evaluation") {
    NodeMultiset nodes = parse_node_spec("a^3");
    VariableSet vs({"x", "y"}, nodes.symbols());
    // labels a_0, a_1, a_2; picks (0, 2) take order 0 in x, order 2 in y
    Polynomial g = PP("x^2*y^3", vs);
    CHECK(derivative_evaluate(g, nodes, ColumnSubset{{0, 2}}) == PP("3*a^3", vs));
    CHECK(derivative_evaluate(g, nodes, ColumnSubset{{1, 2}}) == PP("6*a^2", vs));
    CHECK_THROWS_AS(derivative_evaluate(g, nodes, ColumnSubset{{0}}), PreconditionError);
    CHECK_THROWS_AS(derivative_evaluate(g, nodes, ColumnSubset{{0, 3}}), PreconditionError);
}

TEST_CASE("coordinates at rational nodes are rational") {
    NodeMultiset nodes = parse_node_spec("0, 1, 2");
    VariableSet vs = make_vars(2);
    Polynomial h = P("x^2 + y^2", vs);
    CoordinateVector cv = coordinates(h, nodes);
    REQUIRE(cv.subsets.size() == 3);
    Polynomial acc(vs);
    for (std::size_t k = 0; k < cv.subsets.size(); ++k) {
        auto value = cv.entry(k);
        REQUIRE(value.has_value());
        acc += *value * basis_element(nodes, cv.subsets[k], vs).omega;
    }
    CHECK(acc == P("-x*y + 3*x + 3*y - 2", vs));
    CHECK(acc == hermite_normal_form(h, nodes));
    CHECK_THROWS_AS(cv.entry(17), PreconditionError);
}

TEST_CASE("symbolic coordinates are ratios but the expansion is polynomial") {
    NodeMultiset nodes = parse_node_spec("a, b");
    VariableSet vs({"x"}, nodes.symbols());
    Polynomial h = PP("x", vs);
    CoordinateVector cv = coordinates(h, nodes);
    REQUIRE(cv.subsets.size() == 2);
    CHECK(cv.denominator == PP("b - a", vs));
    CHECK(cv.numerators[0] == PP("a", vs));
    CHECK(cv.numerators[1] == PP("b", vs));
    CHECK(cv.signs == std::vector<int>{1, -1});
    CHECK_FALSE(cv.entry(0).has_value());
    CHECK_FALSE(cv.entry(1).has_value());
    CHECK(hermite_interpolant(h, nodes, Method::basis) == h);
}

TEST_CASE("lagrange path") {
    std::mt19937_64 rng(99);
    for (const char* spec : {"-1, 0, 1, 2", "2, 3, 5"}) {
        NodeMultiset nodes = parse_node_spec(spec);
        for (int n = 1; n <= 2; ++n) {
            VariableSet vs = make_vars(n);
            for (int round = 0; round < 3; ++round) {
                Polynomial h = random_symmetric(vs, nodes.d() - n + 2, rng);
                INFO(spec, " n=", n, " h=", render(h));
                CHECK(lagrange_interpolant(h, nodes) == hermite_normal_form(h, nodes));
            }
        }
    }
    // symbolic distinct nodes route through the normal form
    NodeMultiset sym = parse_node_spec("a, b, c");
    VariableSet vs = make_vars(2, sym.symbols());
    Polynomial h = P("x^2*y + x*y^2 + x + y", vs);
    CHECK(lagrange_interpolant(h, sym) == hermite_normal_form(h, sym));
    // repeated nodes are rejected
    NodeMultiset merged = parse_node_spec("1^2, 2");
    CHECK_THROWS_AS(lagrange_interpolant(P("x + y", make_vars(2)), merged), PreconditionError);
}

TEST_CASE("taylor interpolant matches the Schur-coefficient displays") {
    // generic symmetric h of degree <= 4 per variable, coefficients u1..u15
    std::vector<std::vector<int>> patterns = box_patterns(2, 4);
    REQUIRE(patterns.size() == 15);
    std::vector<std::string> params;
    for (std::size_t i = 1; i <= patterns.size(); ++i)
        params.push_back("u" + std::to_string(i));
    VariableSet vs({"x", "y"}, params);
    Polynomial h(vs);
    for (std::size_t i = 0; i < patterns.size(); ++i)
        h += Polynomial::variable(vs, params[i]) * symmetrized_monomial(vs, patterns[i]);
    REQUIRE(is_symmetric(h));

    Polynomial r = taylor_interpolant(h, 4);

    auto dx = [](const Polynomial& p) { return plain_partial(p, 0); };
    auto dy = [](const Polynomial& p) { return plain_partial(p, 1); };
    Scalar half = make_scalar(1, 2), sixth = make_scalar(1, 6);

    // in terms of g = (y - x) h, with the factorial scalings spelled out
    Polynomial g = PP("y - x", vs) * h;
    Polynomial in_g = at_zero(dy(g)) +
                      half * at_zero(dy(dy(g))) * PP("x + y", vs) +
                      sixth * at_zero(dy(dy(dy(g)))) * PP("x^2 + x*y + y^2", vs) +
                      half * at_zero(dx(dy(dy(g)))) * PP("x*y", vs) +
                      sixth * at_zero(dx(dy(dy(dy(g))))) * PP("x^2*y + x*y^2", vs) +
                      make_scalar(1, 12) * at_zero(dx(dx(dy(dy(dy(g)))))) * PP("x^2*y^2", vs);
    CHECK(r == in_g);

    // in terms of h itself
    Polynomial in_h =
        at_zero(h) + at_zero(dy(h)) * PP("x + y", vs) +
        half * at_zero(dy(dy(h))) * PP("x^2 + x*y + y^2", vs) +
        (at_zero(dx(dy(h))) - half * at_zero(dy(dy(h)))) * PP("x*y", vs) +
        (half * at_zero(dx(dy(dy(h)))) - sixth * at_zero(dy(dy(dy(h))))) *
            PP("x^2*y + x*y^2", vs) +
        (make_scalar(1, 4) * at_zero(dx(dx(dy(dy(h))))) -
         sixth * at_zero(dx(dy(dy(dy(h)))))) *
            PP("x^2*y^2", vs);
    CHECK(r == in_h);

    CHECK(r == hermite_normal_form(h, parse_node_spec("0^4")));
}

TEST_CASE("taylor method preconditions") {
    Polynomial h = P("x + y", make_vars(2));
    CHECK_THROWS_AS(hermite_interpolant(h, parse_node_spec("1^4"), Method::taylor),
                    PreconditionError);
    CHECK_THROWS_AS(hermite_interpolant(h, parse_node_spec("0^2, 1"), Method::taylor),
                    PreconditionError);
    Polynomial hs = P("x + y", make_vars(2, {"a"}));
    CHECK_THROWS_AS(hermite_interpolant(hs, parse_node_spec("a^4"), Method::taylor),
                    PreconditionError);
    CHECK(hermite_interpolant(h, parse_node_spec("0^4"), Method::taylor) ==
          hermite_normal_form(h, parse_node_spec("0^4")));
}

TEST_CASE("methods agree") {
    std::mt19937_64 rng(7);
    {
        NodeMultiset nodes = parse_node_spec("1/2^2, 3");
        VariableSet vs = make_vars(2);
        for (int round = 0; round < 3; ++round) {
            Polynomial h = random_symmetric(vs, 4, rng);
            CAPTURE(render(h));
            Polynomial r = hermite_normal_form(h, nodes);
            CHECK(hermite_interpolant(h, nodes, Method::basis) == r);
            CHECK(hermite_interpolant(h, nodes, Method::bridge) == r);
            CHECK(r == oracle_interpolant(h, nodes));
        }
    }
    {
        NodeMultiset nodes = parse_node_spec("0^4");
        VariableSet vs = make_vars(3);
        Polynomial h = random_symmetric(vs, 3, rng);
        CAPTURE(render(h));
        Polynomial r = hermite_normal_form(h, nodes);
        CHECK(hermite_interpolant(h, nodes, Method::taylor) == r);
        CHECK(hermite_interpolant(h, nodes, Method::basis) == r);
        CHECK(r == oracle_interpolant(h, nodes));
    }
}

TEST_CASE("interpolation conditions at rational nodes") {
    std::mt19937_64 rng(31);
    NodeMultiset nodes = parse_node_spec("1/2^2, 3");
    VariableSet vs = make_vars(2);
    Polynomial vn = vandermonde_poly(vs);
    for (int round = 0; round < 3; ++round) {
        Polynomial h = random_symmetric(vs, 5, rng);
        CAPTURE(render(h));
        Polynomial r = hermite_interpolant(h, nodes, Method::basis);
        CHECK(is_symmetric(r));
        for (std::size_t i = 0; i < vs.main_count(); ++i)
            CHECK(r.degree_in(i) <= nodes.d() - 2);
        Polynomial diff = vn * (h - r);
        for (const ColumnSubset& subset : enumerate_subsets(nodes.d(), 2))
            CHECK(oracle_functional(diff, nodes, subset) == 0);
    }
}

TEST_CASE("method names") {
    for (Method m : {Method::normal_form, Method::basis, Method::lagrange, Method::taylor,
                     Method::bridge})
        CHECK(parse_method(method_name(m)) == m);
    CHECK_FALSE(parse_method("newton").has_value());
}
