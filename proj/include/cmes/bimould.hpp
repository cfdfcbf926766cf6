#pragma once

// Bimoulds: one truncated polynomial per depth 0..D (depth-r part in
// X_1..X_r, Y_1..Y_r with degree bound W - r), together with the mould
// product, the sharp change of variables, the constant moulds Gamma^Z and
// their inverses, the X/Y lifts, the B^Z construction and the swap.

#include "cmes/linform.hpp"
#include "cmes/polyxy.hpp"
#include "cmes/power_series.hpp"
#include "cmes/qseries.hpp"
#include "cmes/rational.hpp"
#include "cmes/truncation.hpp"

#include <stdexcept>
#include <vector>

namespace cmes {

template <class S>
S scalar_from_rational(const Rational& c, const TruncationParams& trunc);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& c, const TruncationParams&) {
    return c;
}
template <>
inline QSeries scalar_from_rational<QSeries>(const Rational& c, const TruncationParams& t) {
    return QSeries::constant(c, t.q_order);
}
template <>
inline LinForm scalar_from_rational<LinForm>(const Rational& c, const TruncationParams&) {
    return LinForm(c);
}

template <class S>
class Bimould {
public:
    Bimould() = default;
    explicit Bimould(const TruncationParams& trunc) : trunc_(trunc) {
        for (int r = 0; r <= trunc.depth_max; ++r)
            parts_.emplace_back(r, trunc.degree_bound(r), trunc.y_degree_max);
    }

    // depth-0 part 1, all higher parts 0: the unit of the mould product
    static Bimould unit(const TruncationParams& trunc) {
        Bimould b(trunc);
        b.parts_[0].add_term({}, scalar_from_rational<S>(Rational(1), trunc));
        return b;
    }

    const TruncationParams& trunc() const { return trunc_; }
    int depth_max() const { return trunc_.depth_max; }

    PolyXY<S>& part(int r) { return parts_.at(r); }
    const PolyXY<S>& part(int r) const { return parts_.at(r); }

    bool y_free() const {
        for (const auto& p : parts_)
            if (!p.y_free()) return false;
        return true;
    }

    S coefficient(const BiIndex& idx) const {
        if (idx.depth() > trunc_.depth_max || idx.weight() > trunc_.weight_max)
            throw std::invalid_argument("Bimould: index outside truncation " + idx.str());
        if (idx.depth() == 0)
            return parts_[0].terms().empty() ? S() : parts_[0].terms().begin()->second;
        return parts_[idx.depth()].coefficient(idx);
    }

    friend bool operator==(const Bimould& a, const Bimould& b) {
        int d = std::min(a.depth_max(), b.depth_max());
        for (int r = 0; r <= d; ++r)
            if (!(a.parts_[r] == b.parts_[r])) return false;
        return true;
    }

private:
    TruncationParams trunc_;
    std::vector<PolyXY<S>> parts_;
};

template <class To, class From, class F>
Bimould<To> map_bimould(const Bimould<From>& b, const TruncationParams& trunc, F&& f) {
    Bimould<To> r(trunc);
    for (int d = 0; d <= std::min(b.depth_max(), trunc.depth_max); ++d)
        for (const auto& [e, c] : b.part(d).terms()) r.part(d).add_term(e, f(c));
    return r;
}

inline Bimould<QSeries> to_qseries(const Bimould<Rational>& b, const TruncationParams& trunc) {
    return map_bimould<QSeries>(b, trunc,
                                [&](const Rational& c) { return QSeries::constant(c, trunc.q_order); });
}

template <class S>
Bimould<S> operator+(const Bimould<S>& a, const Bimould<S>& b) {
    if (!(a.trunc() == b.trunc()))
        throw std::invalid_argument("Bimould: truncation mismatch in +");
    Bimould<S> r(a.trunc());
    for (int d = 0; d <= a.depth_max(); ++d) r.part(d) = a.part(d) + b.part(d);
    return r;
}

// (A x B)^(r) = sum_j A^(j)(X_1..;Y_1..) B^(r-j)(X_{j+1}..;Y_{j+1}..)
template <class S>
Bimould<S> mould_product(const Bimould<S>& a, const Bimould<S>& b) {
    if (!(a.trunc() == b.trunc()))
        throw std::invalid_argument("mould_product: truncation mismatch");
    const TruncationParams& t = a.trunc();
    Bimould<S> out(t);
    for (int r = 0; r <= t.depth_max; ++r) {
        for (int j = 0; j <= r; ++j) {
            if (a.part(j).is_zero() || b.part(r - j).is_zero()) continue;
            auto left = a.part(j).substituted(LinearSubstitution::shift(j, r, 0),
                                              t.degree_bound(r), t.y_degree_max);
            auto right = b.part(r - j).substituted(LinearSubstitution::shift(r - j, r, j),
                                                   t.degree_bound(r), t.y_degree_max);
            out.part(r) = out.part(r) + left.mul(right);
        }
    }
    return out;
}

// Z#(X_1..X_r) = Z(X_1+..+X_r, ..., X_1+X_2, X_1); only for Y-free moulds.
template <class S>
Bimould<S> sharp(const Bimould<S>& z) {
    if (!z.y_free())
        throw std::invalid_argument("sharp: mould has Y-dependence");
    const TruncationParams& t = z.trunc();
    Bimould<S> out(t);
    out.part(0) = z.part(0);
    for (int r = 1; r <= t.depth_max; ++r)
        out.part(r) = z.part(r).substituted(LinearSubstitution::sharp(r),
                                            t.degree_bound(r), t.y_degree_max);
    return out;
}

// depth-one coefficients z(n) of a rational mould, n = 1..weight_max
inline std::vector<Rational> depth_one_coefficients(const Bimould<Rational>& z) {
    std::vector<Rational> out(z.trunc().weight_max + 1);
    for (int n = 1; n <= z.trunc().weight_max; ++n)
        out[n] = z.part(1).coefficient(BiIndex({n}, {0}));
    return out;
}

// Gamma^Z = exp( sum_{n>=2} (-1)^n/n z(n) T^n ), truncated after T^order
inline PowerSeries gamma_series(const Bimould<Rational>& z, int order) {
    PowerSeries arg(order);
    auto z1 = depth_one_coefficients(z);
    for (int n = 2; n <= std::min<int>(order, z.trunc().weight_max); ++n)
        arg.set_coeff(n, z1[n] * Rational(n % 2 == 0 ? 1 : -1) / Rational(n));
    return series_exp(arg);
}

// gamma-tilde: exp( sum_{n>=2} (-1)^{n+1}/n z(n) T^n ); T^k coefficient equals
// the all-ones coefficient z(1,...,1) of depth k.
inline PowerSeries gamma_tilde_series(const Bimould<Rational>& z, int order) {
    PowerSeries arg(order);
    auto z1 = depth_one_coefficients(z);
    for (int n = 2; n <= std::min<int>(order, z.trunc().weight_max); ++n)
        arg.set_coeff(n, z1[n] * Rational(n % 2 == 0 ? -1 : 1) / Rational(n));
    return series_exp(arg);
}

// constant mould: depth-r part is the coefficient of T^r
template <class S>
Bimould<S> constant_mould(const PowerSeries& f, const TruncationParams& trunc) {
    Bimould<S> out(trunc);
    for (int r = 0; r <= trunc.depth_max; ++r) {
        Rational c = f.coeff(r);
        if (!c.is_zero())
            out.part(r).add_term(Exponents(2 * r, 0), scalar_from_rational<S>(c, trunc));
    }
    return out;
}

// Z_gamma = Z# x Gamma^Z (the Gamma data must come from the same mould)
template <class S>
Bimould<S> z_gamma(const Bimould<S>& z, const PowerSeries& gamma) {
    return mould_product(sharp(z), constant_mould<S>(gamma, z.trunc()));
}

inline Bimould<Rational> z_gamma(const Bimould<Rational>& z) {
    return z_gamma(z, gamma_series(z, z.trunc().depth_max));
}

// X^Z keeps the mould on the X side; Y^Z moves it to the Y side.
template <class S>
Bimould<S> lift_x(const Bimould<S>& z) {
    if (!z.y_free())
        throw std::invalid_argument("lift_x: mould has Y-dependence");
    return z;
}

template <class S>
Bimould<S> lift_y(const Bimould<S>& z) {
    if (!z.y_free())
        throw std::invalid_argument("lift_y: mould has Y-dependence");
    const TruncationParams& t = z.trunc();
    Bimould<S> out(t);
    out.part(0) = z.part(0);
    for (int r = 1; r <= t.depth_max; ++r)
        out.part(r) = z.part(r).substituted(LinearSubstitution::x_to_y(r),
                                            t.degree_bound(r), t.y_degree_max);
    return out;
}

// B^Z = Y^{Z_gamma} x X^Z
template <class S>
Bimould<S> bz_construct(const Bimould<S>& z, const PowerSeries& gamma) {
    return mould_product(lift_y(z_gamma(z, gamma)), lift_x(z));
}

inline Bimould<Rational> bz_construct(const Bimould<Rational>& z) {
    return bz_construct(z, gamma_series(z, z.trunc().depth_max));
}

// the swap involution; undefined on Y-capped tables
template <class S>
Bimould<S> swap_bimould(const Bimould<S>& b) {
    const TruncationParams& t = b.trunc();
    if (t.y_degree_max < t.weight_max)
        throw std::logic_error("swap_bimould: table was built with a Y-degree cap");
    Bimould<S> out(t);
    out.part(0) = b.part(0);
    for (int r = 1; r <= t.depth_max; ++r)
        out.part(r) = b.part(r).substituted(LinearSubstitution::swap(r),
                                            t.degree_bound(r), t.y_degree_max);
    return out;
}

// Z^- : all variables negated
template <class S>
Bimould<S> negate_vars(const Bimould<S>& b) {
    const TruncationParams& t = b.trunc();
    Bimould<S> out(t);
    out.part(0) = b.part(0);
    for (int r = 1; r <= t.depth_max; ++r)
        out.part(r) = b.part(r).substituted(LinearSubstitution::negate(r),
                                            t.degree_bound(r), t.y_degree_max);
    return out;
}

}  // namespace cmes
