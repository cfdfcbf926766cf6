#pragma once

// The generating tables of the construction, built once per (beta, trunc)
// context and cached: the depth-one series L_m, the partition bimould g and
// its brute-force oracle, the bimoulds b and b-tilde attached to the double
// shuffle solution, the multitangent-style family frak-L_m, the ordered
// product g*, the full table G = g* x b, and its interpolating pieces G_j.

#include "cmes/beta_solution.hpp"
#include "cmes/bimould.hpp"
#include "cmes/mould_checks.hpp"
#include "cmes/qseries.hpp"
#include "cmes/words.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace cmes {

// n^a m^b / a! as exact rationals
Rational rational_pow(long base, int exp);

class EisContext {
public:
    EisContext(BetaSolution beta, TruncationParams trunc);

    const TruncationParams& trunc() const { return trunc_; }
    const BetaSolution& beta() const { return beta_; }

    // exact-rational tables
    const Bimould<Rational>& beta_mould();
    const Bimould<Rational>& b();        // B^beta = Y^{beta_gamma} x X^beta
    const Bimould<Rational>& b_tilde();  // expanded-sum construction
    Bimould<Rational> b_tilde_product_form();  // Y^{beta_gamma^-} x exp(-T/2) x X^beta

    // q-series tables
    const Bimould<QSeries>& b_q();
    const Bimould<QSeries>& b_tilde_q();
    PolyXY<QSeries> lm_depth1(int m) const;  // L_m as a depth-one table
    const Bimould<QSeries>& lm(int m);       // frak-L_m, 1 <= m <= q_order
    const Bimould<QSeries>& g();
    const Bimould<QSeries>& g_star();
    const Bimould<QSeries>& G();
    const Bimould<QSeries>& G_j(int j);  // 0 <= j <= depth_max

    QSeries g_coeff(const BiIndex& idx) { return g().coefficient(idx); }
    QSeries g_star_coeff(const BiIndex& idx) { return g_star().coefficient(idx); }
    QSeries G_coeff(const BiIndex& idx) { return G().coefficient(idx); }
    Rational b_coeff(const BiIndex& idx) { return b().coefficient(idx); }

    // G as a linear map on z-words (all d = 0)
    QSeries G_of(const Word& zword);
    QSeries G_of(const LinComb& zwords);

    // q d/dq G[k;d] = sum_i k_i G[..k_i+1..; ..d_i+1..]; throws when the
    // raised indices leave the truncation
    CheckFailure q_derivative_check(const BiIndex& idx);

    // direct enumeration over partitions with r distinct parts; the
    // independent oracle for the g tables
    static QSeries g_bruteforce(const BiIndex& idx, int q_order);

private:
    BetaSolution beta_;
    TruncationParams trunc_;

    std::optional<Bimould<Rational>> beta_mould_, b_, b_tilde_;
    std::optional<Bimould<QSeries>> b_q_, b_tilde_q_, g_, g_star_, G_;
    std::vector<Bimould<QSeries>> lm_;    // index m-1
    std::vector<Bimould<QSeries>> g_j_;   // index j
    // rational factor pairs b x b-tilde of the frak-L assembly, per (r, j)
    std::vector<std::vector<PolyXY<Rational>>> lm_rational_factors_;
};

}  // namespace cmes
