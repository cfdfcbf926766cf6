#include "cmes/power_series.hpp"

#include "cmes/bernoulli.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmes {

PowerSeries::PowerSeries(int order) : order_(order) {
    if (order < 0)
        throw std::invalid_argument("PowerSeries: negative order");
    c_.assign(order_ + 1, Rational());
}

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs) : PowerSeries(order) {
    for (size_t i = 0; i < coeffs.size() && i <= static_cast<size_t>(order_); ++i)
        c_[i] = coeffs[i];
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s(order);
    s.c_[0] = c;
    return s;
}

PowerSeries PowerSeries::variable(int order) {
    PowerSeries s(order);
    if (order >= 1) s.c_[1] = Rational(1);
    return s;
}

const Rational& PowerSeries::coeff(int i) const {
    static const Rational zero;
    if (i < 0 || i > order_) return zero;
    return c_[i];
}

void PowerSeries::set_coeff(int i, const Rational& c) {
    if (i < 0 || i > order_)
        throw std::invalid_argument("PowerSeries: coefficient index out of range");
    c_[i] = c;
}

int PowerSeries::valuation() const {
    for (int i = 0; i <= order_; ++i)
        if (!c_[i].is_zero()) return i;
    return order_ + 1;
}

bool PowerSeries::is_zero() const { return valuation() > order_; }

PowerSeries PowerSeries::operator-() const {
    PowerSeries r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = -c_[i];
    return r;
}

// Truncation propagation: binary operations keep the weaker of the two bounds.
PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= std::min(a.order_, r.order_); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order_ && j <= b.order_; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

PowerSeries PowerSeries::scale(const Rational& c) const {
    PowerSeries r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] * c;
    return r;
}

PowerSeries PowerSeries::truncate(int order) const {
    PowerSeries r(order);
    for (int i = 0; i <= std::min(order, order_); ++i) r.c_[i] = c_[i];
    return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order_, b.order_);
    for (int i = 0; i <= n; ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

PowerSeries series_exp(const PowerSeries& f) {
    if (!f.coeff(0).is_zero())
        throw std::invalid_argument("series_exp: nonzero constant term");
    int n = f.order();
    PowerSeries r = PowerSeries::constant(Rational(1), n);
    PowerSeries pw = PowerSeries::constant(Rational(1), n);
    // f^k has valuation >= k, so k > n contributes nothing
    for (int k = 1; k <= n; ++k) {
        pw = pw * f;
        if (pw.is_zero()) break;
        r = r + pw.scale(inv_factorial(k));
    }
    return r;
}

PowerSeries series_log(const PowerSeries& f) {
    if (f.coeff(0) != Rational(1))
        throw std::invalid_argument("series_log: constant term must be 1");
    int n = f.order();
    PowerSeries g = f - PowerSeries::constant(Rational(1), n);
    PowerSeries r(n);
    PowerSeries pw = PowerSeries::constant(Rational(1), n);
    for (int k = 1; k <= n; ++k) {
        pw = pw * g;
        if (pw.is_zero()) break;
        Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
        r = r + pw.scale(c);
    }
    return r;
}

}  // namespace cmes
