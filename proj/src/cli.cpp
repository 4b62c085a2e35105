#include "symhermite/cli.hpp"

#include "symhermite/interpolate.hpp"
#include "symhermite/normal_form.hpp"
#include "symhermite/parser.hpp"
#include "symhermite/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <ostream>

namespace symhermite {

namespace {

constexpr unsigned long long kDefaultSeed = 12345;

struct Session {
    NodeMultiset nodes;
    VariableSet vars;
    std::map<std::string, std::string> aliases;
};

Session make_session(const std::string& nodes_spec, int n, std::ostream& err) {
    NodeMultiset nodes = parse_node_spec(nodes_spec);
    if (nodes.merged_on_construction())
        err << "note: repeated node values merged, A = {" << nodes.describe() << "}\n";
    if (n < 1) throw PreconditionError("n must be positive");
    if (n > nodes.d()) throw PreconditionError("need |A| >= n");
    std::map<std::string, std::string> aliases;
    if (n <= 3) {
        const char* short_names[] = {"x", "y", "z"};
        for (int i = 0; i < n; ++i)
            aliases.emplace(short_names[i], "x" + std::to_string(i + 1));
    }
    for (const std::string& sym : nodes.symbols())
        if (aliases.count(sym))
            throw PreconditionError("node symbol '" + sym +
                                    "' collides with a variable alias");
    VariableSet vars = fixture_vars(nodes, n);
    return {std::move(nodes), std::move(vars), std::move(aliases)};
}

std::string subset_key(const ColumnSubset& subset) {
    std::string out;
    for (std::size_t i = 0; i < subset.picks.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(subset.picks[i]);
    }
    return out;
}

int cmd_interpolate(const Session& s, const std::string& h_text, Method method,
                    const std::string& output, std::ostream& out) {
    Polynomial h = parse_polynomial(h_text, s.vars, s.aliases);
    Polynomial r = hermite_interpolant(h, s.nodes, method);
    if (output == "json") {
        nlohmann::json j;
        j["nodes"] = s.nodes.describe();
        j["d"] = s.nodes.d();
        j["n"] = s.vars.main_count();
        j["method"] = method_name(method);
        j["interpolant"] = render(r);
        out << j.dump(2) << "\n";
    } else {
        out << render(r) << "\n";
    }
    return 0;
}

int cmd_basis(const Session& s, const std::string& output, std::ostream& out) {
    auto subsets = enumerate_subsets(s.nodes.d(), static_cast<int>(s.vars.main_count()));
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        BasisElement el = basis_element(s.nodes, subsets[k], s.vars);
        int eps = epsilon_sign(s.nodes, subsets[k], s.vars);
        if (output == "json") {
            nlohmann::json row;
            row["index"] = k + 1;
            row["columns"] = subset_key(subsets[k]);
            row["labels"] = describe_subset(s.nodes, subsets[k]);
            row["eps"] = eps;
            row["omega"] = render(el.omega);
            rows.push_back(row);
        } else {
            out << "A'" << (k + 1) << " " << describe_subset(s.nodes, subsets[k])
                << "  eps=" << (eps > 0 ? "+1" : "-1") << "  omega = " << render(el.omega)
                << "\n";
        }
    }
    if (output == "json") {
        nlohmann::json j;
        j["nodes"] = s.nodes.describe();
        j["d"] = s.nodes.d();
        j["n"] = s.vars.main_count();
        j["elements"] = rows;
        out << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_coords(const Session& s, const std::string& h_text, const std::string& output,
               std::ostream& out) {
    Polynomial h = parse_polynomial(h_text, s.vars, s.aliases);
    CoordinateVector cv = coordinates(h, s.nodes);
    Polynomial r = hermite_normal_form(h, s.nodes);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < cv.subsets.size(); ++k) {
        auto value = cv.entry(k);
        if (output == "json") {
            nlohmann::json row;
            row["index"] = k + 1;
            row["labels"] = describe_subset(s.nodes, cv.subsets[k]);
            row["eps"] = cv.signs[k];
            row["numerator"] = render(cv.numerators[k]);
            if (value) row["value"] = render(*value);
            rows.push_back(row);
        } else {
            out << "A'" << (k + 1) << " " << describe_subset(s.nodes, cv.subsets[k])
                << "  eps=" << (cv.signs[k] > 0 ? "+1" : "-1");
            if (value)
                out << "  c = " << render(*value) << "\n";
            else
                out << "  numerator = " << render(cv.numerators[k]) << "\n";
        }
    }
    if (output == "json") {
        nlohmann::json j;
        j["nodes"] = s.nodes.describe();
        j["denominator"] = render(cv.denominator);
        j["rows"] = rows;
        j["interpolant"] = render(r);
        out << j.dump(2) << "\n";
    } else {
        out << "denominator = " << render(cv.denominator) << "\n";
        out << "interpolant = " << render(r) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& nodes_spec, int n, const std::string& suite,
               std::optional<Method> method, unsigned long long seed,
               const std::string& output, std::ostream& out, std::ostream& err) {
    std::vector<VerifyFixture> fixtures;
    if (!nodes_spec.empty()) {
        NodeMultiset nodes = parse_node_spec(nodes_spec);
        if (nodes.merged_on_construction())
            err << "note: repeated node values merged, A = {" << nodes.describe() << "}\n";
        if (n > 0) {
            if (n > nodes.d()) throw PreconditionError("need |A| >= n");
            fixtures.push_back({nodes, n});
        } else {
            for (int k = 1; k <= std::min(3, nodes.d()); ++k) fixtures.push_back({nodes, k});
        }
    } else {
        fixtures = default_fixtures();
    }
    std::vector<std::string> suites =
        suite.empty() ? suite_names() : std::vector<std::string>{suite};
    bool all_passed = true;
    nlohmann::json jsuites = nlohmann::json::array();
    for (const std::string& name : suites) {
        SuiteResult result = run_suite(name, fixtures, seed, method);
        all_passed = all_passed && result.passed();
        if (output == "json") {
            nlohmann::json j;
            j["name"] = result.name;
            j["checks"] = result.checks;
            j["pass"] = result.passed();
            j["failures"] = result.failures;
            jsuites.push_back(j);
        } else {
            out << "suite " << result.name << ": " << (result.passed() ? "PASS" : "FAIL")
                << " (" << result.checks << " checks)\n";
            for (const std::string& f : result.failures) out << "  counterexample: " << f << "\n";
        }
    }
    if (output == "json") {
        nlohmann::json j;
        j["suites"] = jsuites;
        j["pass"] = all_passed;
        out << j.dump(2) << "\n";
    }
    return all_passed ? 0 : 3;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symmetric Hermite interpolation over the rationals"};
    app.name("symhermite");
    app.require_subcommand(1);
    // --h is an option of several subcommands, so help is --help alone.
    app.set_help_flag("--help", "Print help");

    std::string nodes_spec, h_text, method_text, suite, output = "text";
    int n = 0;
    unsigned long long seed = kDefaultSeed;

    auto add_output = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "Print help");
        cmd->add_option("--output", output, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_method = [&](CLI::App* cmd) {
        cmd->add_option("--method", method_text, "Computation method")
            ->check(CLI::IsMember({"normal_form", "basis", "lagrange", "taylor", "bridge"}));
    };

    CLI::App* c_interp = app.add_subcommand(
        "interpolate", "Symmetric Hermite interpolant of h at the node multiset");
    c_interp->add_option("--nodes", nodes_spec, "Node multiset, e.g. \"a^3, b^2\"")->required();
    c_interp->add_option("--n", n, "Number of variables")->required();
    c_interp->add_option("--h", h_text, "Symmetric polynomial to interpolate")->required();
    add_method(c_interp);
    add_output(c_interp);

    CLI::App* c_basis = app.add_subcommand("basis", "Omega basis of the interpolation space");
    c_basis->add_option("--nodes", nodes_spec, "Node multiset")->required();
    c_basis->add_option("--n", n, "Number of variables")->required();
    add_output(c_basis);

    CLI::App* c_coords = app.add_subcommand("coords", "Coordinates of h in the omega basis");
    c_coords->add_option("--nodes", nodes_spec, "Node multiset")->required();
    c_coords->add_option("--n", n, "Number of variables")->required();
    c_coords->add_option("--h", h_text, "Symmetric polynomial")->required();
    add_output(c_coords);

    CLI::App* c_verify = app.add_subcommand("verify", "Run self-check suites");
    c_verify->add_option("--nodes", nodes_spec, "Restrict to one node multiset");
    c_verify->add_option("--n", n, "Restrict to one variable count");
    c_verify->add_option("--suite", suite, "Run a single suite")
        ->check(CLI::IsMember(suite_names()));
    add_method(c_verify);
    c_verify->add_option("--seed", seed, "Random seed");
    add_output(c_verify);

    std::vector<const char*> argv;
    argv.push_back("symhermite");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(c_interp)) {
            Method method = method_text.empty() ? Method::normal_form
                                                : *parse_method(method_text);
            return cmd_interpolate(make_session(nodes_spec, n, err), h_text, method, output,
                                   out);
        }
        if (app.got_subcommand(c_basis))
            return cmd_basis(make_session(nodes_spec, n, err), output, out);
        if (app.got_subcommand(c_coords))
            return cmd_coords(make_session(nodes_spec, n, err), h_text, output, out);
        if (app.got_subcommand(c_verify)) {
            std::optional<Method> method;
            if (!method_text.empty()) method = parse_method(method_text);
            return cmd_verify(nodes_spec, n, suite, method, seed, output, out, err);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 1;
}

} // namespace symhermite
