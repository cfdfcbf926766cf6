#pragma once

// Sparse polynomials in the 2r variables X_1..X_r, Y_1..Y_r, truncated by
// total degree (and optionally by Y-degree), with scalars that can be
// Rational, QSeries or an affine form. A bi-index (k;d) of weight w at depth
// r corresponds to the monomial X^{k-1} Y^d of total degree w - r, packaged
// against the basis X_1^{k_1-1}...X_r^{k_r-1} Y_1^{d_1}/d_1!...Y_r^{d_r}/d_r!.
//
// Variable numbering: X_i is index i-1, Y_i is index depth + i - 1.

#include "cmes/bernoulli.hpp"
#include "cmes/rational.hpp"
#include "cmes/truncation.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace cmes {

using Exponents = std::vector<int>;

// Rational-linear change of variables into a (possibly different-depth)
// variable space. forms[v] lists (target variable, coefficient) pairs.
struct LinearSubstitution {
    int src_depth = 0;
    int dst_depth = 0;
    std::vector<std::vector<std::pair<int, Rational>>> forms;

    LinearSubstitution(int src, int dst)
        : src_depth(src), dst_depth(dst), forms(2 * src) {}

    void set(int src_var, std::vector<std::pair<int, Rational>> form) {
        forms.at(src_var) = std::move(form);
    }

    static LinearSubstitution identity(int depth);
    // X_i -> Y_1+...+Y_{r-i+1}, Y_i -> X_{r-i+1} - X_{r-i+2} (X_{r+1} = 0)
    static LinearSubstitution swap(int depth);
    // X_i -> X_1+...+X_{r-i+1} (Y untouched; for Y-free moulds)
    static LinearSubstitution sharp(int depth);
    // X_i -> -X_i, Y_i -> -Y_i
    static LinearSubstitution negate(int depth);
    // X_i -> Y_i (lift of a Y-free mould onto the Y side)
    static LinearSubstitution x_to_y(int depth);
    // X_i -> X_{i+offset}, Y_i -> Y_{i+offset} into depth dst
    static LinearSubstitution shift(int src_depth, int dst_depth, int offset);
};

template <class S>
class PolyXY {
public:
    PolyXY() : depth_(0), deg_bound_(0), ydeg_bound_(0) {}
    PolyXY(int depth, int deg_bound, int ydeg_bound)
        : depth_(depth), deg_bound_(deg_bound), ydeg_bound_(ydeg_bound) {
        if (depth < 0 || deg_bound < 0)
            throw std::invalid_argument("PolyXY: bad shape");
    }

    static PolyXY constant(const S& c, int depth, int deg_bound, int ydeg_bound) {
        PolyXY p(depth, deg_bound, ydeg_bound);
        p.add_term(Exponents(2 * depth, 0), c);
        return p;
    }

    int depth() const { return depth_; }
    int degree_bound() const { return deg_bound_; }
    int y_degree_bound() const { return ydeg_bound_; }
    const std::map<Exponents, S>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    bool y_free() const {
        for (const auto& [e, c] : t_)
            for (int i = depth_; i < 2 * depth_; ++i)
                if (e[i] != 0) return false;
        return true;
    }

    void add_term(const Exponents& e, const S& c) {
        if (static_cast<int>(e.size()) != 2 * depth_)
            throw std::invalid_argument("PolyXY: exponent arity mismatch");
        if (c.is_zero()) return;
        int deg = 0, ydeg = 0;
        for (int i = 0; i < 2 * depth_; ++i) deg += e[i];
        for (int i = depth_; i < 2 * depth_; ++i) ydeg += e[i];
        if (deg > deg_bound_ || ydeg > ydeg_bound_) return;
        auto [it, inserted] = t_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    PolyXY operator-() const {
        PolyXY r(depth_, deg_bound_, ydeg_bound_);
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }

    friend PolyXY operator+(const PolyXY& a, const PolyXY& b) {
        PolyXY r = a.like(std::min(a.deg_bound_, b.deg_bound_),
                          std::min(a.ydeg_bound_, b.ydeg_bound_));
        if (a.depth_ != b.depth_)
            throw std::invalid_argument("PolyXY: depth mismatch in +");
        for (const auto& [e, c] : a.t_) r.add_term(e, c);
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }

    friend PolyXY operator-(const PolyXY& a, const PolyXY& b) { return a + (-b); }

    PolyXY scale(const Rational& c) const {
        PolyXY r(depth_, deg_bound_, ydeg_bound_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : t_) r.add_term(e, v * c);
        return r;
    }

    // Product; the right factor may live over a coarser scalar (e.g. Rational
    // factors against QSeries tables). Truncation keeps the tighter bounds.
    template <class T>
    PolyXY mul(const PolyXY<T>& o) const {
        if (depth_ != o.depth())
            throw std::invalid_argument("PolyXY: depth mismatch in mul");
        PolyXY r = like(std::min(deg_bound_, o.degree_bound()),
                        std::min(ydeg_bound_, o.y_degree_bound()));
        for (const auto& [ea, ca] : t_) {
            int da = 0;
            for (int v : ea) da += v;
            for (const auto& [eb, cb] : o.terms()) {
                int db = 0;
                for (int v : eb) db += v;
                if (da + db > r.deg_bound_) continue;
                Exponents e(2 * depth_);
                for (int i = 0; i < 2 * depth_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    // Expand through the substitution, truncating against the given bounds.
    // Partial products are dropped as soon as they exceed the bounds (linear
    // forms are homogeneous of degree one, so dropping early loses nothing).
    PolyXY substituted(const LinearSubstitution& s, int deg_bound, int ydeg_bound) const {
        if (s.src_depth != depth_)
            throw std::invalid_argument("PolyXY: substitution depth mismatch");
        PolyXY r(s.dst_depth, deg_bound, ydeg_bound);
        std::map<std::pair<int, int>, PolyXY<Rational>> powers;
        auto var_power = [&](int v, int n) -> const PolyXY<Rational>& {
            if (v >= static_cast<int>(s.forms.size()))
                throw std::invalid_argument("PolyXY: variable not covered by substitution");
            for (int m = 1; m <= n; ++m) {
                auto key = std::make_pair(v, m);
                if (powers.count(key)) continue;
                if (m == 1) {
                    PolyXY<Rational> base(s.dst_depth, deg_bound, ydeg_bound);
                    for (const auto& [tv, c] : s.forms[v]) {
                        Exponents e(2 * s.dst_depth, 0);
                        e.at(tv) = 1;
                        base.add_term(e, c);
                    }
                    powers.emplace(key, std::move(base));
                } else {
                    powers.emplace(key, powers.at({v, m - 1}).mul(powers.at({v, 1})));
                }
            }
            return powers.at({v, n});
        };
        for (const auto& [e, c] : t_) {
            PolyXY<Rational> acc =
                PolyXY<Rational>::constant(Rational(1), s.dst_depth, deg_bound, ydeg_bound);
            bool dead = false;
            for (int v = 0; v < 2 * depth_ && !dead; ++v) {
                if (e[v] == 0) continue;
                acc = acc.mul(var_power(v, e[v]));
                dead = acc.is_zero();
            }
            if (dead) continue;
            for (const auto& [ee, cc] : acc.terms()) r.add_term(ee, c * cc);
        }
        return r;
    }

    // Coefficient map: monomial X^{k-1} Y^d carries the value scaled by
    // prod d_i! (inverse of the /d! packaging of the generating series).
    std::map<BiIndex, S> bi_coefficients() const {
        std::map<BiIndex, S> out;
        for (const auto& [e, c] : t_) {
            Rational dfac(1);
            std::vector<int> k(depth_), d(depth_);
            for (int i = 0; i < depth_; ++i) {
                k[i] = e[i] + 1;
                d[i] = e[depth_ + i];
                dfac *= factorial(d[i]);
            }
            out.emplace(BiIndex(std::move(k), std::move(d)), c * dfac);
        }
        return out;
    }

    S coefficient(const BiIndex& idx) const {
        if (idx.depth() != depth_)
            throw std::invalid_argument("PolyXY: coefficient depth mismatch");
        Exponents e(2 * depth_);
        Rational dfac(1);
        for (int i = 0; i < depth_; ++i) {
            e[i] = idx.k[i] - 1;
            e[depth_ + i] = idx.d[i];
            dfac *= factorial(idx.d[i]);
        }
        auto it = t_.find(e);
        return it == t_.end() ? S() : S(it->second * dfac);
    }

    // Rebuild from a coefficient map (inverse of bi_coefficients).
    static PolyXY from_bi_coefficients(const std::map<BiIndex, S>& coeffs, int depth,
                                       int deg_bound, int ydeg_bound) {
        PolyXY p(depth, deg_bound, ydeg_bound);
        for (const auto& [idx, v] : coeffs) {
            if (idx.depth() != depth)
                throw std::invalid_argument("PolyXY: coefficient depth mismatch");
            Exponents e(2 * depth);
            Rational inv(1);
            for (int i = 0; i < depth; ++i) {
                e[i] = idx.k[i] - 1;
                e[depth + i] = idx.d[i];
                inv *= inv_factorial(idx.d[i]);
            }
            p.add_term(e, v * inv);
        }
        return p;
    }

    friend bool operator==(const PolyXY& a, const PolyXY& b) {
        if (a.depth_ != b.depth_) return false;
        for (const auto& [e, c] : a.t_) {
            auto it = b.t_.find(e);
            if (it == b.t_.end() || !(it->second == c)) return false;
        }
        for (const auto& [e, c] : b.t_)
            if (a.t_.find(e) == a.t_.end()) return false;
        return true;
    }

private:
    PolyXY like(int deg_bound, int ydeg_bound) const {
        return PolyXY(depth_, deg_bound, ydeg_bound);
    }

    int depth_;
    int deg_bound_;
    int ydeg_bound_;
    std::map<Exponents, S> t_;
};

// Scalar conversion (e.g. exact-rational tables into q-series tables).
template <class To, class From, class F>
PolyXY<To> map_scalars(const PolyXY<From>& p, F&& f) {
    PolyXY<To> r(p.depth(), p.degree_bound(), p.y_degree_bound());
    for (const auto& [e, c] : p.terms()) r.add_term(e, f(c));
    return r;
}

inline LinearSubstitution LinearSubstitution::identity(int depth) {
    LinearSubstitution s(depth, depth);
    for (int v = 0; v < 2 * depth; ++v) s.set(v, {{v, Rational(1)}});
    return s;
}

inline LinearSubstitution LinearSubstitution::swap(int depth) {
    int r = depth;
    LinearSubstitution s(r, r);
    for (int a = 0; a < r; ++a) {
        std::vector<std::pair<int, Rational>> form;
        for (int t = 0; t < r - a; ++t) form.emplace_back(r + t, Rational(1));
        s.set(a, std::move(form));
    }
    for (int a = 0; a < r; ++a) {
        std::vector<std::pair<int, Rational>> form;
        form.emplace_back(r - a - 1, Rational(1));
        if (a >= 1) form.emplace_back(r - a, Rational(-1));
        s.set(r + a, std::move(form));
    }
    return s;
}

inline LinearSubstitution LinearSubstitution::sharp(int depth) {
    int r = depth;
    LinearSubstitution s(r, r);
    for (int a = 0; a < r; ++a) {
        std::vector<std::pair<int, Rational>> form;
        for (int t = 0; t < r - a; ++t) form.emplace_back(t, Rational(1));
        s.set(a, std::move(form));
    }
    for (int a = 0; a < r; ++a) s.set(r + a, {{r + a, Rational(1)}});
    return s;
}

inline LinearSubstitution LinearSubstitution::negate(int depth) {
    LinearSubstitution s(depth, depth);
    for (int v = 0; v < 2 * depth; ++v) s.set(v, {{v, Rational(-1)}});
    return s;
}

inline LinearSubstitution LinearSubstitution::x_to_y(int depth) {
    LinearSubstitution s(depth, depth);
    for (int a = 0; a < depth; ++a) {
        s.set(a, {{depth + a, Rational(1)}});
        s.set(depth + a, {{a, Rational(1)}});  // unused on Y-free input
    }
    return s;
}

inline LinearSubstitution LinearSubstitution::shift(int src_depth, int dst_depth, int offset) {
    if (src_depth + offset > dst_depth)
        throw std::invalid_argument("LinearSubstitution::shift: does not fit");
    LinearSubstitution s(src_depth, dst_depth);
    for (int a = 0; a < src_depth; ++a) {
        s.set(a, {{a + offset, Rational(1)}});
        s.set(src_depth + a, {{dst_depth + a + offset, Rational(1)}});
    }
    return s;
}

}  // namespace cmes
