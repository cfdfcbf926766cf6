#include "cmes/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace cmes {

QSeries QSeries::constant(const Rational& c, int order_bound) {
    QSeries s(order_bound);
    s.set_coeff(0, c);
    return s;
}

Rational QSeries::coeff(int n) const {
    auto it = c_.find(n);
    return it == c_.end() ? Rational() : it->second;
}

void QSeries::set_coeff(int n, const Rational& c) {
    if (n < 0 || n > order_bound_) return;
    if (c.is_zero())
        c_.erase(n);
    else
        c_[n] = c;
}

void QSeries::add_coeff(int n, const Rational& c) {
    if (n < 0 || n > order_bound_ || c.is_zero()) return;
    auto [it, inserted] = c_.emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

int QSeries::valuation() const {
    if (c_.empty()) return order_bound_ == unbounded ? unbounded : order_bound_ + 1;
    return c_.begin()->first;
}

QSeries QSeries::operator-() const {
    QSeries r(order_bound_);
    for (const auto& [n, c] : c_) r.c_[n] = -c;
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_bound_, b.order_bound_));
    for (const auto& [n, c] : a.c_) r.add_coeff(n, c);
    for (const auto& [n, c] : b.c_) r.add_coeff(n, c);
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_bound_, b.order_bound_));
    for (const auto& [n, c] : a.c_) r.add_coeff(n, c);
    for (const auto& [n, c] : b.c_) r.add_coeff(n, -c);
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_bound_, b.order_bound_));
    if (r.order_bound_ == QSeries::unbounded && !a.c_.empty() && !b.c_.empty()) {
        // products of genuinely unbounded series only arise for constants
        for (const auto& [n, c] : a.c_)
            for (const auto& [m, d] : b.c_) r.add_coeff(n + m, c * d);
        return r;
    }
    for (const auto& [n, c] : a.c_) {
        if (n > r.order_bound_) break;
        for (const auto& [m, d] : b.c_) {
            if (n + m > r.order_bound_) break;
            r.add_coeff(n + m, c * d);
        }
    }
    return r;
}

QSeries QSeries::operator*(const Rational& c) const {
    QSeries r(order_bound_);
    if (c.is_zero()) return r;
    for (const auto& [n, v] : c_) r.c_[n] = v * c;
    return r;
}

bool operator==(const QSeries& a, const QSeries& b) {
    int bound = std::min(a.order_bound_, b.order_bound_);
    for (const auto& [n, c] : a.c_)
        if (n <= bound && b.coeff(n) != c) return false;
    for (const auto& [n, c] : b.c_)
        if (n <= bound && a.coeff(n) != c) return false;
    return true;
}

QSeries QSeries::truncate(int order_bound) const {
    QSeries r(std::min(order_bound, order_bound_));
    for (const auto& [n, c] : c_)
        if (n <= r.order_bound_) r.c_[n] = c;
    return r;
}

QSeries QSeries::q_derivative() const {
    QSeries r(order_bound_);
    for (const auto& [n, c] : c_)
        if (n > 0) r.c_[n] = c * Rational(n);
    return r;
}

std::string QSeries::str(int up_to) const {
    std::ostringstream os;
    for (int n = 0; n <= up_to; ++n) {
        if (n) os << ", ";
        os << coeff(n).str();
    }
    return os.str();
}

}  // namespace cmes
