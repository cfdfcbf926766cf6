#pragma once

// Coefficient-map evaluation of (bi)moulds on words and the uniform
// symmetril / symmetral / swap checkers. All checks work at coefficient
// level (word products), never via divided differences of generating
// series. Failures report the first offending pair in enumeration order.

#include "cmes/bimould.hpp"
#include "cmes/words.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace cmes {

inline std::string scalar_str(const Rational& c) { return c.str(); }
inline std::string scalar_str(const QSeries& s) {
    int n = s.order_bound() == QSeries::unbounded
                ? (s.is_zero() ? 0 : s.coefficients().rbegin()->first)
                : s.order_bound();
    return s.str(std::min(n, 12));
}

// empty when equal (up to common truncation); else a short description
inline std::optional<std::string> scalar_difference(const Rational& a, const Rational& b) {
    if (a == b) return std::nullopt;
    return "lhs=" + a.str() + " rhs=" + b.str();
}
inline std::optional<std::string> scalar_difference(const QSeries& a, const QSeries& b) {
    if (a == b) return std::nullopt;
    int bound = std::min(a.order_bound(), b.order_bound());
    for (int n = 0; n <= bound; ++n)
        if (a.coeff(n) != b.coeff(n))
            return "q^" + std::to_string(n) + ": lhs=" + a.coeff(n).str() +
                   " rhs=" + b.coeff(n).str();
    return "differ";
}

struct CheckFailure {
    bool ok = true;
    std::string where;
    std::string detail;

    static CheckFailure pass() { return {}; }
    static CheckFailure fail(std::string where, std::string detail) {
        return {false, std::move(where), std::move(detail)};
    }
};

// phi_B on a single word (word must be inside the truncation)
template <class S>
S phi(const Bimould<S>& b, const Word& w) {
    if (w.empty()) return scalar_from_rational<S>(Rational(1), b.trunc());
    return b.coefficient(w.bi_index());
}

template <class S>
S phi(const Bimould<S>& b, const LinComb& c) {
    S acc{};
    for (const auto& [w, v] : c.terms()) acc = acc + phi(b, w) * v;
    return acc;
}

// phi_B(u *_<> v) = phi_B(u) phi_B(v) for every pair of nonempty words with
// weight sum <= weight_cap and depth sum <= depth_cap.
template <class S>
CheckFailure check_diamond_symmetril(const Bimould<S>& b, Diamond diamond, int weight_cap,
                                     int depth_cap) {
    Alphabet alph = diamond_alphabet(diamond);
    std::vector<Word> words = (alph == Alphabet::zbi) ? all_zbi_words(weight_cap - 1, depth_cap - 1)
                                                      : all_z_words(weight_cap - 1, depth_cap - 1);
    for (size_t i = 0; i < words.size(); ++i) {
        for (size_t j = i; j < words.size(); ++j) {
            const Word& u = words[i];
            const Word& v = words[j];
            if (u.weight() + v.weight() > weight_cap) continue;
            if (u.depth() + v.depth() > depth_cap) continue;
            S lhs = phi(b, quasi_shuffle(u, v, diamond));
            S rhs = phi(b, u) * phi(b, v);
            if (auto diff = scalar_difference(lhs, rhs))
                return CheckFailure::fail("(" + u.str() + ") * (" + v.str() + ")", *diff);
        }
    }
    return CheckFailure::pass();
}

// shuffle-homomorphism check on z-words (for Y-free moulds)
template <class S>
CheckFailure check_symmetral(const Bimould<S>& z, int weight_cap, int depth_cap) {
    return check_diamond_symmetril(z, Diamond::zero_z, weight_cap, depth_cap);
}

template <class S>
CheckFailure check_equal(const Bimould<S>& a, const Bimould<S>& b, const std::string& what) {
    int d = std::min(a.depth_max(), b.depth_max());
    for (int r = 0; r <= d; ++r) {
        if (a.part(r) == b.part(r)) continue;
        // locate a differing coefficient for the report
        auto ca = a.part(r).bi_coefficients();
        auto cb = b.part(r).bi_coefficients();
        for (const auto& [idx, va] : ca) {
            auto it = cb.find(idx);
            S vb = (it == cb.end()) ? S{} : it->second;
            if (auto diff = scalar_difference(va, vb))
                return CheckFailure::fail(what + " at " + idx.str(), *diff);
        }
        for (const auto& [idx, vb] : cb) {
            if (ca.find(idx) != ca.end()) continue;
            if (auto diff = scalar_difference(S{}, vb))
                return CheckFailure::fail(what + " at " + idx.str(), *diff);
        }
        return CheckFailure::fail(what + " at depth " + std::to_string(r), "tables differ");
    }
    return CheckFailure::pass();
}

template <class S>
CheckFailure check_swap_invariant(const Bimould<S>& b, const std::string& what) {
    return check_equal(swap_bimould(b), b, what);
}

}  // namespace cmes
