#include "cmes/rational.hpp"

#include <cctype>
#include <ostream>

namespace cmes {

Rational Rational::from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty())
        throw std::invalid_argument("Rational: empty string");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, t.c_str(), 10) != 0) {
        mpq_clear(q);
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    }
    mpq_canonicalize(q);
    Rational r{mpq_class(q)};
    mpq_clear(q);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cmes
