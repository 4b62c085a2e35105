#include "symhermite/nodes.hpp"

#include "symhermite/symmetric.hpp"

#include <algorithm>
#include <cctype>

namespace symhermite {

bool is_symbolic(const NodeValue& v) {
    return std::holds_alternative<std::string>(v);
}

std::string node_value_to_string(const NodeValue& v) {
    if (is_symbolic(v)) return std::get<std::string>(v);
    return scalar_to_string(std::get<Scalar>(v));
}

NodeMultiset::NodeMultiset(std::vector<NodeBlock> blocks) {
    for (const NodeBlock& b : blocks) {
        if (b.multiplicity <= 0) throw PreconditionError("multiplicity must be positive");
        if (is_symbolic(b.value) && std::get<std::string>(b.value).empty())
            throw PreconditionError("empty node symbol");
        auto same = std::find_if(blocks_.begin(), blocks_.end(), [&](const NodeBlock& have) {
            return have.value == b.value;
        });
        if (same != blocks_.end()) {
            same->multiplicity += b.multiplicity;
            merged_ = true;
        } else {
            blocks_.push_back(b);
        }
    }
    if (blocks_.empty()) throw PreconditionError("empty node multiset");
}

int NodeMultiset::d() const {
    int total = 0;
    for (const NodeBlock& b : blocks_) total += b.multiplicity;
    return total;
}

bool NodeMultiset::has_symbolic_values() const {
    return std::any_of(blocks_.begin(), blocks_.end(),
                       [](const NodeBlock& b) { return is_symbolic(b.value); });
}

bool NodeMultiset::all_multiplicity_one() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const NodeBlock& b) { return b.multiplicity == 1; });
}

std::vector<NodeLabel> NodeMultiset::labels() const {
    std::vector<NodeLabel> out;
    out.reserve(static_cast<std::size_t>(d()));
    for (int i = 0; i < block_count(); ++i)
        for (int j = 0; j < blocks_[static_cast<std::size_t>(i)].multiplicity; ++j)
            out.push_back({i, j});
    return out;
}

std::vector<std::string> NodeMultiset::symbols() const {
    std::vector<std::string> out;
    for (const NodeBlock& b : blocks_) {
        if (!is_symbolic(b.value)) continue;
        const std::string& name = std::get<std::string>(b.value);
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    }
    return out;
}

Polynomial NodeMultiset::value_poly(int block, const VariableSet& vars) const {
    if (block < 0 || block >= block_count())
        throw PreconditionError("block index out of range");
    const NodeValue& v = blocks_[static_cast<std::size_t>(block)].value;
    if (is_symbolic(v)) return Polynomial::variable(vars, std::get<std::string>(v));
    return Polynomial::constant(vars, std::get<Scalar>(v));
}

std::string NodeMultiset::describe() const {
    std::string out;
    for (const NodeBlock& b : blocks_) {
        if (!out.empty()) out += ", ";
        out += node_value_to_string(b.value);
        if (b.multiplicity > 1) out += "^" + std::to_string(b.multiplicity);
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

NodeValue parse_node_value(const std::string& text, std::size_t pos) {
    if (text.empty()) throw ParseError("empty node value", pos);
    char c = text[0];
    if (std::isalpha(static_cast<unsigned char>(c))) {
        if (text.size() != 1)
            throw ParseError("node symbol must be a single letter, got '" + text + "'", pos);
        return NodeValue{text};
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        try {
            return NodeValue{scalar_from_string(text)};
        } catch (const ParseError&) {
            throw ParseError("malformed node value '" + text + "'", pos);
        }
    }
    throw ParseError("malformed node value '" + text + "'", pos);
}

} // namespace

NodeMultiset parse_node_spec(const std::string& text) {
    std::vector<NodeBlock> blocks;
    std::size_t at = 0;
    while (true) {
        std::size_t comma = text.find(',', at);
        std::string item =
            comma == std::string::npos ? text.substr(at) : text.substr(at, comma - at);
        std::string trimmed = trim(item);
        if (trimmed.empty()) throw ParseError("empty node entry", at);
        int mult = 1;
        std::string value_text = trimmed;
        if (auto caret = trimmed.find('^'); caret != std::string::npos) {
            value_text = trim(trimmed.substr(0, caret));
            std::string mult_text = trim(trimmed.substr(caret + 1));
            if (mult_text.empty() ||
                !std::all_of(mult_text.begin(), mult_text.end(), [](char ch) {
                    return std::isdigit(static_cast<unsigned char>(ch));
                }))
                throw ParseError("malformed multiplicity '" + mult_text + "'", at);
            mult = std::stoi(mult_text);
            if (mult <= 0) throw ParseError("multiplicity must be positive", at);
        }
        blocks.push_back({parse_node_value(value_text, at), mult});
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    return NodeMultiset(std::move(blocks));
}

void validate_subset(const ColumnSubset& subset, int d) {
    if (subset.picks.empty()) throw PreconditionError("empty column subset");
    for (std::size_t k = 0; k < subset.picks.size(); ++k) {
        if (subset.picks[k] < 0 || subset.picks[k] >= d)
            throw PreconditionError("column index out of range");
        if (k > 0 && subset.picks[k] <= subset.picks[k - 1])
            throw PreconditionError("column indices must increase strictly");
    }
}

std::vector<ColumnSubset> enumerate_subsets(int d, int n) {
    if (n < 1 || n > d) throw PreconditionError("subset size out of range");
    std::vector<ColumnSubset> out;
    std::vector<int> picks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) picks[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back({picks});
        int i = n - 1;
        while (i >= 0 && picks[static_cast<std::size_t>(i)] == d - n + i) --i;
        if (i < 0) break;
        ++picks[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < n; ++t)
            picks[static_cast<std::size_t>(t)] = picks[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

std::string describe_subset(const NodeMultiset& nodes, const ColumnSubset& subset) {
    auto labels = nodes.labels();
    std::string out = "(";
    for (std::size_t k = 0; k < subset.picks.size(); ++k) {
        if (k > 0) out += ", ";
        const NodeLabel& l = labels[static_cast<std::size_t>(subset.picks[k])];
        out += node_value_to_string(nodes.blocks()[static_cast<std::size_t>(l.block)].value);
        out += "_" + std::to_string(l.order);
    }
    return out + ")";
}

Polynomial build_f(const NodeMultiset& nodes) {
    VariableSet vars({"x"}, nodes.symbols());
    Polynomial x = Polynomial::variable(vars, "x");
    Polynomial f = Polynomial::constant(vars, 1);
    for (int i = 0; i < nodes.block_count(); ++i)
        f *= pow(x - nodes.value_poly(i, vars),
                 nodes.blocks()[static_cast<std::size_t>(i)].multiplicity);
    return f;
}

std::vector<Polynomial> f_coefficients(const NodeMultiset& nodes, const VariableSet& vars) {
    const int d = nodes.d();
    std::vector<Polynomial> values;
    values.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < nodes.block_count(); ++i) {
        Polynomial v = nodes.value_poly(i, vars);
        for (int j = 0; j < nodes.blocks()[static_cast<std::size_t>(i)].multiplicity; ++j)
            values.push_back(v);
    }
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(d) + 1, Polynomial(vars));
    for (int k = 0; k <= d; ++k) {
        Polynomial s = elementary_symmetric(k, values);
        if (k % 2 != 0) s = -s;
        coeffs[static_cast<std::size_t>(d - k)] = std::move(s);
    }
    return coeffs;
}

namespace {

void check_family_vars(const NodeMultiset& nodes, const VariableSet& vars) {
    const std::size_t n = vars.main_count();
    if (n < 1) throw PreconditionError("no main variables");
    if (static_cast<int>(n) > nodes.d()) throw PreconditionError("need |A| >= n");
    for (const std::string& sym : nodes.symbols())
        if (!vars.index_of(sym))
            throw PreconditionError("node symbol '" + sym + "' not declared");
}

} // namespace

IdealFamily build_G(const NodeMultiset& nodes, const VariableSet& vars) {
    check_family_vars(nodes, vars);
    const int n = static_cast<int>(vars.main_count());
    const int d = nodes.d();
    std::vector<Polynomial> coeffs = f_coefficients(nodes, vars);
    IdealFamily fam{IdealFamily::Kind::groebner, vars, d, {}, {}};
    for (int i = 1; i <= n; ++i) {
        Polynomial g(vars);
        for (int j = 0; j <= d - i + 1; ++j)
            g += coeffs[static_cast<std::size_t>(i - 1 + j)] * complete_homogeneous(i, j, vars);
        fam.members.push_back(std::move(g));
        fam.lead_exponents.push_back(d - i + 1);
    }
    return fam;
}

IdealFamily build_F(const NodeMultiset& nodes, const VariableSet& vars) {
    check_family_vars(nodes, vars);
    const int n = static_cast<int>(vars.main_count());
    const int d = nodes.d();
    std::vector<Polynomial> coeffs = f_coefficients(nodes, vars);
    IdealFamily fam{IdealFamily::Kind::power, vars, d, {}, {}};
    for (int i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(vars, vars.main()[static_cast<std::size_t>(i)]);
        Polynomial fx(vars);
        for (int k = 0; k <= d; ++k) fx += coeffs[static_cast<std::size_t>(k)] * pow(xi, k);
        fam.members.push_back(std::move(fx));
        fam.lead_exponents.push_back(d);
    }
    return fam;
}

} // namespace symhermite
