#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmes/bernoulli.hpp"
#include "cmes/power_series.hpp"
#include "cmes/qseries.hpp"
#include "cmes/rational.hpp"

#include <random>

using namespace cmes;

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    CHECK(Rational::from_string("-1/24") == Rational(-1, 24));
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK(Rational::from_string("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);

    // denominators stay positive and reduced through arithmetic
    Rational a(3, 7), b(-5, 21);
    CHECK((a + b).str() == "4/21");
    CHECK((a * b).str() == "-5/49");
    CHECK((a / b).str() == "-9/5");
}

TEST_CASE("rational arithmetic is exact on large operands") {
    Rational big = Rational(1);
    for (int i = 1; i <= 40; ++i) big *= Rational(1000000007L, i);
    Rational back = big;
    for (int i = 1; i <= 40; ++i) back /= Rational(1000000007L, i);
    CHECK(back == Rational(1));
}

TEST_CASE("ring axioms on sampled rationals") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    auto rnd = [&]() { return Rational(num(rng), den(rng)); };
    for (int i = 0; i < 200; ++i) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("bernoulli numbers under the X/(e^X-1) convention") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(8) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    for (int n = 3; n <= 19; n += 2) CHECK(bernoulli(n) == Rational(0));
}

TEST_CASE("bernoulli generating function oracle") {
    // expand X/(e^X - 1) by exact series division and compare
    const int N = 14;
    PowerSeries denom(N);  // (e^X - 1)/X = sum X^k/(k+1)!
    for (int k = 0; k <= N; ++k) denom.set_coeff(k, inv_factorial(k + 1));
    PowerSeries inv = PowerSeries::constant(Rational(1), N);
    // Newton-free direct inversion: c_n from c_0 d_0 = 1, sum c_i d_{n-i} = 0
    std::vector<Rational> c(N + 1);
    c[0] = Rational(1);
    for (int n = 1; n <= N; ++n) {
        Rational acc;
        for (int i = 0; i < n; ++i) acc += c[i] * denom.coeff(n - i);
        c[n] = -acc;
    }
    for (int n = 0; n <= N; ++n) CHECK(c[n] == bernoulli(n) * inv_factorial(n));
}

TEST_CASE("series exp examples") {
    const int N = 6;
    PowerSeries zero(N);
    CHECK(series_exp(zero) == PowerSeries::constant(Rational(1), N));

    PowerSeries t = PowerSeries::variable(3);
    PowerSeries e = series_exp(t);
    CHECK(e.coeff(0) == Rational(1));
    CHECK(e.coeff(1) == Rational(1));
    CHECK(e.coeff(2) == Rational(1, 2));
    CHECK(e.coeff(3) == Rational(1, 6));

    PowerSeries f(4);
    f.set_coeff(2, Rational(-1, 48));
    PowerSeries g = series_exp(f);
    CHECK(g.coeff(0) == Rational(1));
    CHECK(g.coeff(2) == Rational(-1, 48));
    CHECK(g.coeff(4) == Rational(1, 4608));

    PowerSeries bad = PowerSeries::constant(Rational(1), 3);
    CHECK_THROWS_AS(series_exp(bad), std::invalid_argument);
}

TEST_CASE("series exp/log round trip") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 8);
    for (int trial = 0; trial < 25; ++trial) {
        PowerSeries f(9);
        for (int i = 1; i <= 9; ++i) f.set_coeff(i, Rational(num(rng), den(rng)));
        PowerSeries onef = PowerSeries::constant(Rational(1), 9) + f;
        CHECK(series_exp(series_log(onef)) == onef);
        CHECK(series_log(series_exp(f)) == f);
    }
}

TEST_CASE("qseries arithmetic and derivative") {
    QSeries f(10);
    f.set_coeff(1, Rational(1));
    f.set_coeff(2, Rational(3));
    QSeries df = f.q_derivative();
    CHECK(df.coeff(1) == Rational(1));
    CHECK(df.coeff(2) == Rational(6));

    QSeries c = QSeries::constant(Rational(5), 10);
    CHECK(c.q_derivative().is_zero());

    // f*1 = f, q*q = q^2
    CHECK(f * QSeries::constant(Rational(1), 10) == f);
    QSeries q(10);
    q.set_coeff(1, Rational(1));
    QSeries q2 = q * q;
    CHECK(q2.coeff(2) == Rational(1));
    CHECK(q2.coeff(1) == Rational(0));
}

TEST_CASE("qseries truncation propagation") {
    QSeries a(5), b(9);
    a.set_coeff(1, Rational(1));
    b.set_coeff(1, Rational(1));
    CHECK((a * b).order_bound() == 5);
    CHECK((a + b).order_bound() == 5);
    // comparison only up to the common bound
    QSeries c(3);
    c.set_coeff(1, Rational(1));
    QSeries d(30);
    d.set_coeff(1, Rational(1));
    d.set_coeff(4, Rational(9));
    CHECK(c == d);
    d.set_coeff(2, Rational(9));
    CHECK(c != d);
}

TEST_CASE("qseries ring axioms sampled") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 6);
    std::uniform_int_distribution<int> ex(0, 8);
    auto rnd = [&]() {
        QSeries s(8);
        for (int t = 0; t < 5; ++t) s.add_coeff(ex(rng), Rational(num(rng), den(rng)));
        return s;
    };
    for (int i = 0; i < 60; ++i) {
        QSeries a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}
