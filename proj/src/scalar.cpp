#include "symhermite/scalar.hpp"

#include "symhermite/errors.hpp"

#include <cctype>

namespace symhermite {

Scalar make_scalar(long num, long den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Scalar scalar_from_string(const std::string& text) {
    std::string num = text;
    std::string den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool neg = !num.empty() && num.front() == '-';
    if (!all_digits(neg ? num.substr(1) : num) || !all_digits(den))
        throw ParseError("malformed rational '" + text + "'", 0);
    mpz_class p(num), q(den);
    if (q == 0) throw ParseError("zero denominator in '" + text + "'", 0);
    Scalar s(p, q);
    s.canonicalize();
    return s;
}

std::string scalar_to_string(const Scalar& s) {
    return s.get_str();
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace symhermite
