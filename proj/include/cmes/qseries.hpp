#pragma once

// q-power series truncated at q^order_bound with exact rational coefficients,
// stored sparsely (deep objects have high q-valuation, so most low exponents
// are empty). Binary operations propagate the weaker truncation bound and
// comparisons only look at exponents up to the common bound.

#include "cmes/rational.hpp"

#include <limits>
#include <map>
#include <string>

namespace cmes {

class QSeries {
public:
    static constexpr int unbounded = std::numeric_limits<int>::max();

    QSeries() : order_bound_(unbounded) {}
    explicit QSeries(int order_bound) : order_bound_(order_bound) {}

    static QSeries constant(const Rational& c, int order_bound);

    int order_bound() const { return order_bound_; }
    const std::map<int, Rational>& coefficients() const { return c_; }

    Rational coeff(int n) const;
    void set_coeff(int n, const Rational& c);
    void add_coeff(int n, const Rational& c);

    bool is_zero() const { return c_.empty(); }
    int valuation() const;  // order_bound_+1 when zero

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries operator*(const Rational& c) const;

    // Equal up to the common truncation bound.
    friend bool operator==(const QSeries& a, const QSeries& b);
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    QSeries truncate(int order_bound) const;

    // Coefficient of q^n multiplied by n; the bound is preserved.
    QSeries q_derivative() const;

    // "c0, c1, ..., cN" exact rationals
    std::string str(int up_to) const;

private:
    int order_bound_;
    std::map<int, Rational> c_;  // exponent -> nonzero coefficient
};

}  // namespace cmes
