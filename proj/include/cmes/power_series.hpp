#pragma once

// Truncated univariate power series with exact rational coefficients,
// the scalar-level series toolbox (exp, log, products). Used for the
// constant moulds Gamma^Z and gamma-tilde and for closed-form series
// like sinh and sin in the identity checks.

#include "cmes/rational.hpp"

#include <vector>

namespace cmes {

class PowerSeries {
public:
    // Zero series truncated after T^order.
    explicit PowerSeries(int order);
    PowerSeries(int order, std::vector<Rational> coeffs);

    static PowerSeries constant(const Rational& c, int order);
    static PowerSeries variable(int order);  // T

    int order() const { return order_; }
    const Rational& coeff(int i) const;  // zero beyond the truncation
    void set_coeff(int i, const Rational& c);

    int valuation() const;  // order_+1 for the zero series

    bool is_zero() const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    PowerSeries scale(const Rational& c) const;
    PowerSeries truncate(int order) const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

private:
    int order_;
    std::vector<Rational> c_;  // size order_+1
};

// exp(f) = sum f^k/k!; requires f to have zero constant term.
PowerSeries series_exp(const PowerSeries& f);

// log of a series with constant term 1; inverse of series_exp.
PowerSeries series_log(const PowerSeries& f);

}  // namespace cmes
