#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmes/polyxy.hpp"

#include <random>

using namespace cmes;

namespace {

PolyXY<Rational> rnd_poly(std::mt19937& rng, int depth, int deg_bound) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
    std::uniform_int_distribution<int> e(0, deg_bound);
    PolyXY<Rational> p(depth, deg_bound, deg_bound);
    for (int t = 0; t < 8; ++t) {
        Exponents ex(2 * depth, 0);
        int budget = deg_bound;
        for (int v = 0; v < 2 * depth && budget > 0; ++v) {
            int val = e(rng) % (budget + 1);
            ex[v] = val;
            budget -= val;
        }
        p.add_term(ex, Rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("product basics") {
    PolyXY<Rational> one = PolyXY<Rational>::constant(Rational(1), 1, 4, 4);
    PolyXY<Rational> p(1, 4, 4);
    p.add_term({2, 1}, Rational(3));
    CHECK(p.mul(one) == p);

    // X1 * Y1 = X1 Y1
    PolyXY<Rational> x(1, 4, 4), y(1, 4, 4);
    x.add_term({1, 0}, Rational(1));
    y.add_term({0, 1}, Rational(1));
    PolyXY<Rational> xy(1, 4, 4);
    xy.add_term({1, 1}, Rational(1));
    CHECK(x.mul(y) == xy);

    // (X1+X2)^2 = X1^2 + 2 X1 X2 + X2^2
    PolyXY<Rational> s(2, 4, 4);
    s.add_term({1, 0, 0, 0}, Rational(1));
    s.add_term({0, 1, 0, 0}, Rational(1));
    PolyXY<Rational> sq = s.mul(s);
    PolyXY<Rational> expect(2, 4, 4);
    expect.add_term({2, 0, 0, 0}, Rational(1));
    expect.add_term({1, 1, 0, 0}, Rational(2));
    expect.add_term({0, 2, 0, 0}, Rational(1));
    CHECK(sq == expect);
}

TEST_CASE("substitution examples") {
    // X1 under X1 -> Y1+Y2
    PolyXY<Rational> p(1, 3, 3);
    p.add_term({1, 0}, Rational(1));
    LinearSubstitution s(1, 2);
    s.set(0, {{2, Rational(1)}, {3, Rational(1)}});
    s.set(1, {{2, Rational(1)}});
    PolyXY<Rational> q = p.substituted(s, 3, 3);
    PolyXY<Rational> expect(2, 3, 3);
    expect.add_term({0, 0, 1, 0}, Rational(1));
    expect.add_term({0, 0, 0, 1}, Rational(1));
    CHECK(q == expect);

    // X1^2 under X1 -> X1 - X2
    PolyXY<Rational> p2(1, 2, 2);
    p2.add_term({2, 0}, Rational(1));
    LinearSubstitution s2(1, 2);
    s2.set(0, {{0, Rational(1)}, {1, Rational(-1)}});
    s2.set(1, {{2, Rational(1)}});
    PolyXY<Rational> q2 = p2.substituted(s2, 2, 2);
    PolyXY<Rational> expect2(2, 2, 2);
    expect2.add_term({2, 0, 0, 0}, Rational(1));
    expect2.add_term({1, 1, 0, 0}, Rational(-2));
    expect2.add_term({0, 2, 0, 0}, Rational(1));
    CHECK(q2 == expect2);

    // depth-1 swap is the exchange of X1 and Y1
    PolyXY<Rational> p3(1, 2, 2);
    p3.add_term({1, 1}, Rational(1));
    CHECK(p3.substituted(LinearSubstitution::swap(1), 2, 2) == p3);
    PolyXY<Rational> xonly(1, 2, 2);
    xonly.add_term({1, 0}, Rational(1));
    PolyXY<Rational> yonly(1, 2, 2);
    yonly.add_term({0, 1}, Rational(1));
    CHECK(xonly.substituted(LinearSubstitution::swap(1), 2, 2) == yonly);
}

TEST_CASE("identity substitution and swap involution") {
    std::mt19937 rng(99);
    for (int depth = 1; depth <= 3; ++depth) {
        int bound = 6 - depth;
        for (int trial = 0; trial < 10; ++trial) {
            PolyXY<Rational> p = rnd_poly(rng, depth, bound);
            CHECK(p.substituted(LinearSubstitution::identity(depth), bound, bound) == p);
            PolyXY<Rational> sw =
                p.substituted(LinearSubstitution::swap(depth), bound, bound);
            CHECK(sw.substituted(LinearSubstitution::swap(depth), bound, bound) == p);
        }
    }
}

TEST_CASE("coefficient packaging against the Y^d/d! basis") {
    // p = 1 at depth 1 -> {(1;0) -> 1}
    PolyXY<Rational> one = PolyXY<Rational>::constant(Rational(1), 1, 3, 3);
    auto coeffs = one.bi_coefficients();
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs.at(BiIndex({1}, {0})) == Rational(1));

    // p = Y1^2 -> {(1;2) -> 2}
    PolyXY<Rational> y2(1, 3, 3);
    y2.add_term({0, 2}, Rational(1));
    CHECK(y2.bi_coefficients().at(BiIndex({1}, {2})) == Rational(2));
    CHECK(y2.coefficient(BiIndex({1}, {2})) == Rational(2));

    // extract then rebuild is the identity
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        PolyXY<Rational> p = rnd_poly(rng, 2, 4);
        auto back = PolyXY<Rational>::from_bi_coefficients(p.bi_coefficients(), 2, 4, 4);
        CHECK(back == p);
    }
}

TEST_CASE("degree truncation drops exactly the overflow") {
    // multiply with a generous bound, then compare against the tight bound
    std::mt19937 rng(31);
    PolyXY<Rational> a = rnd_poly(rng, 2, 5), b = rnd_poly(rng, 2, 5);
    PolyXY<Rational> full = a.mul(b);  // bound 5
    PolyXY<Rational> tight(2, 3, 3);
    for (const auto& [e, c] : full.terms()) tight.add_term(e, c);
    // rebuild the same product inside the tight space
    PolyXY<Rational> a3(2, 3, 3), b3(2, 3, 3);
    for (const auto& [e, c] : a.terms()) a3.add_term(e, c);
    for (const auto& [e, c] : b.terms()) b3.add_term(e, c);
    PolyXY<Rational> prod3 = a3.mul(b3);
    // products only add degrees, so the tight product of tight inputs agrees
    // with the truncation of the full product
    CHECK(prod3 == tight);
}

TEST_CASE("y-degree cap keeps the d = 0 slice exact") {
    std::mt19937 rng(55);
    PolyXY<Rational> a = rnd_poly(rng, 2, 4), b = rnd_poly(rng, 2, 4);
    PolyXY<Rational> full = a.mul(b);
    PolyXY<Rational> a0(2, 4, 0), b0(2, 4, 0);
    for (const auto& [e, c] : a.terms()) a0.add_term(e, c);
    for (const auto& [e, c] : b.terms()) b0.add_term(e, c);
    PolyXY<Rational> capped = a0.mul(b0);
    for (const auto& [e, c] : full.terms()) {
        if (e[2] == 0 && e[3] == 0) {
            auto it = capped.terms().find(e);
            REQUIRE(it != capped.terms().end());
            CHECK(it->second == c);
        }
    }
    for (const auto& [e, c] : capped.terms()) CHECK((e[2] == 0 && e[3] == 0));
}
