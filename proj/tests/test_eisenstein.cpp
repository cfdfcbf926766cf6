#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmes/bernoulli.hpp"
#include "cmes/eds.hpp"
#include "cmes/eisenstein.hpp"
#include "cmes/mould_checks.hpp"

#include <map>

using namespace cmes;

namespace {

EisContext small_ctx(int W = 6, int D = 3, int N = 12) {
    static std::map<std::pair<int, int>, BetaSolution> cache;
    auto key = std::pair(W, D);
    if (!cache.count(key)) cache.emplace(key, solve_eds(W, D));
    return EisContext(cache.at(key), TruncationParams(W, D, N));
}

long divisor_sum(int n) {
    long s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s;
}

}  // namespace

TEST_CASE("brute-force partition oracle") {
    // (1;1) at q^n is sigma_1(n)
    QSeries s = EisContext::g_bruteforce(BiIndex({1}, {1}), 20);
    for (int n = 1; n <= 20; ++n) CHECK(s.coeff(n) == Rational(divisor_sum(n)));
    // (2,1;0,0): first partition with two distinct parts is 2*1 + 1*1 at q^3
    QSeries t = EisContext::g_bruteforce(BiIndex({2, 1}, {0, 0}), 6);
    CHECK(t.coeff(0) == Rational(0));
    CHECK(t.coeff(1) == Rational(0));
    CHECK(t.coeff(2) == Rational(0));
    CHECK(t.coeff(3) == Rational(1));
    // swap partner law g(k;d) = d!/(k-1)! g(d+1;k-1), conjugating partitions
    for (int k = 1; k <= 4; ++k)
        for (int d = 0; k + d <= 5; ++d) {
            QSeries lhs = EisContext::g_bruteforce(BiIndex({k}, {d}), 15);
            QSeries rhs = EisContext::g_bruteforce(BiIndex({d + 1}, {k - 1}), 15) *
                          (factorial(d) * inv_factorial(k - 1));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("the depth-one series L_m") {
    EisContext ctx = small_ctx();
    PolyXY<QSeries> l1 = ctx.lm_depth1(1);
    // coefficient of X^1 Y^0 is sum n q^n
    QSeries c = l1.terms().at({1, 0});
    CHECK(c.coeff(1) == Rational(1));
    CHECK(c.coeff(2) == Rational(2));
    CHECK(c.coeff(12) == Rational(12));
    // m = 2: everything has q-valuation >= 2
    PolyXY<QSeries> l2 = ctx.lm_depth1(2);
    for (const auto& [e, s] : l2.terms()) CHECK(s.valuation() >= 2);
    CHECK(l2.terms().at({0, 0}).coeff(2) == Rational(1));
    // m beyond the q-order: empty table
    EisContext tiny = small_ctx(6, 3, 4);
    CHECK(tiny.lm_depth1(5).is_zero());
}

TEST_CASE("partition bimould matches the brute-force oracle") {
    EisContext ctx = small_ctx(6, 3, 12);
    for (const Word& w : all_zbi_words(5, 3)) {
        BiIndex idx = w.bi_index();
        QSeries built = ctx.g_coeff(idx);
        QSeries oracle = EisContext::g_bruteforce(idx, 12);
        INFO(idx.str());
        CHECK(built == oracle);
    }
}

TEST_CASE("divisor-sum series in depth one") {
    EisContext ctx = small_ctx();
    QSeries g1 = ctx.g_coeff(BiIndex({1}, {0}));
    CHECK(g1.coeff(1) == Rational(1));
    CHECK(g1.coeff(2) == Rational(2));
    CHECK(g1.coeff(3) == Rational(2));
    CHECK(g1.coeff(4) == Rational(3));
    QSeries g2 = ctx.g_coeff(BiIndex({2}, {0}));
    CHECK(g2.coeff(1) == Rational(1));
    CHECK(g2.coeff(2) == Rational(3));
    CHECK(g2.coeff(3) == Rational(4));
    CHECK(g2.coeff(4) == Rational(7));
}

TEST_CASE("b-tilde: expanded sum agrees with the product form") {
    EisContext ctx = small_ctx();
    CHECK(ctx.b_tilde() == ctx.b_tilde_product_form());
}

TEST_CASE("b-tilde depth one is beta(X) + beta(-Y) - 1/2") {
    EisContext ctx = small_ctx();
    const PolyXY<Rational>& p = ctx.b_tilde().part(1);
    CHECK(p.coefficient(BiIndex({1}, {0})) == Rational(-1, 2));
    for (int k = 2; k <= 6; ++k) CHECK(p.coefficient(BiIndex({k}, {0})) == beta_depth1(k));
    for (int d = 1; d <= 5; ++d) {
        Rational expect = beta_depth1(d + 1) * factorial(d) * Rational(d % 2 == 0 ? 1 : -1);
        CHECK(p.coefficient(BiIndex({1}, {d})) == expect);
    }
}

TEST_CASE("frak-L_m: depth one is L_m and valuation grows with m") {
    EisContext ctx = small_ctx();
    for (int m = 1; m <= 3; ++m) {
        CHECK(ctx.lm(m).part(1) == ctx.lm_depth1(m));
        for (int r = 1; r <= 3; ++r)
            for (const auto& [e, s] : ctx.lm(m).part(r).terms()) CHECK(s.valuation() >= m);
    }
}

TEST_CASE("g* equals g in depth one") {
    EisContext ctx = small_ctx();
    CHECK(ctx.g_star().part(1) == ctx.g().part(1));
}

TEST_CASE("g* depth two matches the explicit correction formula") {
    EisContext ctx = small_ctx(6, 3, 10);
    int bound = ctx.trunc().degree_bound(2);
    int ycap = ctx.trunc().y_degree_max;
    // g[X1,X2;Y1,Y2] + b[X1-X2;Y1] g[X2;Y1+Y2] + g[X1;Y1+Y2] btilde[X2-X1;Y2]
    LinearSubstitution sb(1, 2), sbt(1, 2), sgA(1, 2), sgB(1, 2);
    sb.set(0, {{0, Rational(1)}, {1, Rational(-1)}});
    sb.set(1, {{2, Rational(1)}});
    sbt.set(0, {{1, Rational(1)}, {0, Rational(-1)}});
    sbt.set(1, {{3, Rational(1)}});
    sgA.set(0, {{1, Rational(1)}});
    sgA.set(1, {{2, Rational(1)}, {3, Rational(1)}});
    sgB.set(0, {{0, Rational(1)}});
    sgB.set(1, {{2, Rational(1)}, {3, Rational(1)}});
    PolyXY<QSeries> expect =
        ctx.g().part(2) +
        ctx.g().part(1).substituted(sgA, bound, ycap).mul(
            ctx.b().part(1).substituted(sb, bound, ycap)) +
        ctx.g().part(1).substituted(sgB, bound, ycap).mul(
            ctx.b_tilde().part(1).substituted(sbt, bound, ycap));
    CHECK(ctx.g_star().part(2) == expect);
}

TEST_CASE("G in depth one: Eisenstein series") {
    EisContext ctx = small_ctx();
    QSeries G2 = ctx.G_coeff(BiIndex({2}, {0}));
    CHECK(G2.coeff(0) == Rational(-1, 24));
    CHECK(G2.coeff(1) == Rational(1));
    CHECK(G2.coeff(2) == Rational(3));
    CHECK(G2.coeff(3) == Rational(4));
    CHECK(G2.coeff(4) == Rational(7));
    // G(k) = beta(k) + g(k)
    for (int k = 1; k <= 6; ++k) {
        QSeries expect = QSeries::constant(beta_depth1(k), 12) + ctx.g_coeff(BiIndex({k}, {0}));
        CHECK(ctx.G_coeff(BiIndex({k}, {0})) == expect);
    }
    // G(3,2) has constant beta(3,2) = 0 and q^1 coefficient -1/24
    QSeries G32 = ctx.G_coeff(BiIndex({3, 2}, {0, 0}));
    CHECK(G32.coeff(0) == ctx.beta().value({3, 2}));
    CHECK(G32.coeff(1) == Rational(-1, 24));
}

TEST_CASE("constant terms of G are the solver values") {
    EisContext ctx = small_ctx();
    for (const Word& w : all_z_words(6, 3))
        CHECK(ctx.G_of(w).coeff(0) == ctx.beta().value(w.z_index()));
}

TEST_CASE("interpolating pieces G_j") {
    EisContext ctx = small_ctx(6, 3, 10);
    CHECK(ctx.G_j(0) == ctx.b_q());
    // the all-blocks piece has the partition bimould's depth-r part
    for (int r = 1; r <= 3; ++r) CHECK(ctx.G_j(r).part(r) == ctx.g().part(r));
    // the pieces sum to G
    Bimould<QSeries> acc = ctx.G_j(0);
    for (int j = 1; j <= 3; ++j) acc = acc + ctx.G_j(j);
    CHECK(acc == ctx.G());
}

TEST_CASE("depth-one swap of coefficients") {
    EisContext ctx = small_ctx();
    for (int k = 1; k <= 5; ++k)
        for (int d = 0; k + d <= 6; ++d) {
            QSeries lhs = ctx.G_coeff(BiIndex({k}, {d}));
            QSeries rhs = ctx.G_coeff(BiIndex({d + 1}, {k - 1})) *
                          (factorial(d) * inv_factorial(k - 1));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("derivative formula in depth one and two") {
    EisContext ctx = small_ctx();
    for (int k = 1; k <= 3; ++k)
        for (int d = 0; k + d <= 4; ++d) {
            QSeries lhs = ctx.G_coeff(BiIndex({k}, {d})).q_derivative();
            QSeries rhs = ctx.G_coeff(BiIndex({k + 1}, {d + 1})) * Rational(k);
            CHECK(lhs == rhs);
        }
    QSeries lhs = ctx.G_coeff(BiIndex({2, 1}, {0, 0})).q_derivative();
    QSeries rhs = ctx.G_coeff(BiIndex({3, 1}, {1, 0})) * Rational(2) +
                  ctx.G_coeff(BiIndex({2, 2}, {0, 1}));
    CHECK(lhs == rhs);
    // q d/dq G(1) = G(3) - G(2,1)
    CHECK(ctx.G_of(Word::z({1})).q_derivative() ==
          ctx.G_of(Word::z({3})) - ctx.G_of(Word::z({2, 1})));
}

TEST_CASE("context validation") {
    BetaSolution sol = solve_eds(4, 2);
    CHECK_THROWS_AS(EisContext(sol, TruncationParams(6, 3, 10)), std::invalid_argument);
    EisContext ok(sol, TruncationParams(4, 2, 10));
    CHECK_THROWS_AS(ok.G_coeff(BiIndex({5}, {0})), std::invalid_argument);
    CHECK_THROWS_AS(ok.lm(0), std::invalid_argument);
}
