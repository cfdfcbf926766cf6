#include "cmes/eisenstein.hpp"

#include "cmes/bernoulli.hpp"

#include <stdexcept>

namespace cmes {

Rational rational_pow(long base, int exp) {
    if (exp < 0)
        throw std::invalid_argument("rational_pow: negative exponent");
    mpz_class b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(r);
}

EisContext::EisContext(BetaSolution beta, TruncationParams trunc)
    : beta_(std::move(beta)), trunc_(trunc) {
    if (beta_.weight_max() < trunc_.weight_max || beta_.depth_max() < trunc_.depth_max)
        throw std::invalid_argument("EisContext: beta solution does not cover the truncation");
}

const Bimould<Rational>& EisContext::beta_mould() {
    if (!beta_mould_) beta_mould_ = beta_.to_mould(trunc_);
    return *beta_mould_;
}

const Bimould<Rational>& EisContext::b() {
    if (!b_) b_ = bz_construct(beta_mould());
    return *b_;
}

const Bimould<Rational>& EisContext::b_tilde() {
    if (b_tilde_) return *b_tilde_;
    // depth-r part: sum_{i=0}^{r} (-1)^i/(2^i i!) b[X_{i+1}..X_r; -Y_1..-Y_{r-i}]
    Bimould<Rational> out(trunc_);
    const Bimould<Rational>& bb = b();
    out.part(0) = bb.part(0);
    for (int r = 1; r <= trunc_.depth_max; ++r) {
        for (int i = 0; i <= r; ++i) {
            int src = r - i;
            Rational c = Rational(i % 2 == 0 ? 1 : -1) * inv_factorial(i) *
                         rational_pow(2, i).inv();
            LinearSubstitution s(src, r);
            for (int a = 0; a < src; ++a) {
                s.set(a, {{i + a, Rational(1)}});
                s.set(src + a, {{r + a, Rational(-1)}});
            }
            out.part(r) = out.part(r) +
                          bb.part(src)
                              .substituted(s, trunc_.degree_bound(r), trunc_.y_degree_max)
                              .scale(c);
        }
    }
    b_tilde_ = std::move(out);
    return *b_tilde_;
}

Bimould<Rational> EisContext::b_tilde_product_form() {
    PowerSeries exp_half(trunc_.depth_max);
    for (int i = 0; i <= trunc_.depth_max; ++i)
        exp_half.set_coeff(i, Rational(i % 2 == 0 ? 1 : -1) * inv_factorial(i) *
                                  rational_pow(2, i).inv());
    Bimould<Rational> left = lift_y(negate_vars(z_gamma(beta_mould())));
    return mould_product(mould_product(left, constant_mould<Rational>(exp_half, trunc_)),
                         lift_x(beta_mould()));
}

const Bimould<QSeries>& EisContext::b_q() {
    if (!b_q_) b_q_ = to_qseries(b(), trunc_);
    return *b_q_;
}

const Bimould<QSeries>& EisContext::b_tilde_q() {
    if (!b_tilde_q_) b_tilde_q_ = to_qseries(b_tilde(), trunc_);
    return *b_tilde_q_;
}

PolyXY<QSeries> EisContext::lm_depth1(int m) const {
    if (m < 1)
        throw std::invalid_argument("lm_depth1: m must be >= 1");
    int N = trunc_.q_order;
    PolyXY<QSeries> p(1, trunc_.degree_bound(1), trunc_.y_degree_max);
    for (int a = 0; a <= trunc_.degree_bound(1); ++a) {
        for (int bdeg = 0; a + bdeg <= trunc_.degree_bound(1); ++bdeg) {
            if (bdeg > trunc_.y_degree_max) break;
            QSeries s(N);
            for (int n = 1; n * m <= N; ++n)
                s.add_coeff(n * m, rational_pow(n, a) * rational_pow(m, bdeg) *
                                       inv_factorial(a) * inv_factorial(bdeg));
            if (!s.is_zero()) p.add_term({a, bdeg}, s);
        }
    }
    return p;
}

const Bimould<QSeries>& EisContext::lm(int m) {
    int N = trunc_.q_order;
    if (m < 1 || m > N)
        throw std::invalid_argument("lm: m out of range");
    if (lm_.empty()) {
        // rational two-sided factors of the assembly, shared by all m
        lm_rational_factors_.assign(trunc_.depth_max + 1, {});
        for (int r = 1; r <= trunc_.depth_max; ++r) {
            lm_rational_factors_[r].resize(r + 1,
                                           PolyXY<Rational>(r, trunc_.degree_bound(r),
                                                            trunc_.y_degree_max));
            for (int j = 1; j <= r; ++j) {
                // b[X_1-X_j, ..., X_{j-1}-X_j; Y_1, ..., Y_{j-1}]
                LinearSubstitution s1(j - 1, r);
                for (int a = 0; a < j - 1; ++a) {
                    s1.set(a, {{a, Rational(1)}, {j - 1, Rational(-1)}});
                    s1.set((j - 1) + a, {{r + a, Rational(1)}});
                }
                PolyXY<Rational> f1 = b().part(j - 1).substituted(s1, trunc_.degree_bound(r),
                                                                  trunc_.y_degree_max);
                // b-tilde[X_r-X_j, ..., X_{j+1}-X_j; Y_r, ..., Y_{j+1}]
                LinearSubstitution s3(r - j, r);
                for (int a = 0; a < r - j; ++a) {
                    s3.set(a, {{r - a - 1, Rational(1)}, {j - 1, Rational(-1)}});
                    s3.set((r - j) + a, {{r + (r - a - 1), Rational(1)}});
                }
                PolyXY<Rational> f3 = b_tilde().part(r - j).substituted(
                    s3, trunc_.degree_bound(r), trunc_.y_degree_max);
                lm_rational_factors_[r][j] = f1.mul(f3);
            }
        }
        lm_.reserve(N);
        for (int mm = 1; mm <= N; ++mm) {
            Bimould<QSeries> out(trunc_);
            out.part(0).add_term({}, QSeries::constant(Rational(1), N));
            PolyXY<QSeries> base = lm_depth1(mm);
            for (int r = 1; r <= trunc_.depth_max; ++r) {
                for (int j = 1; j <= r; ++j) {
                    // L_m[X_j; Y_1+...+Y_r]
                    LinearSubstitution s2(1, r);
                    std::vector<std::pair<int, Rational>> ys;
                    for (int t = 0; t < r; ++t) ys.emplace_back(r + t, Rational(1));
                    s2.set(0, {{j - 1, Rational(1)}});
                    s2.set(1, std::move(ys));
                    PolyXY<QSeries> f2 =
                        base.substituted(s2, trunc_.degree_bound(r), trunc_.y_degree_max);
                    out.part(r) = out.part(r) + f2.mul(lm_rational_factors_[r][j]);
                }
            }
            lm_.push_back(std::move(out));
        }
    }
    return lm_[m - 1];
}

const Bimould<QSeries>& EisContext::g() {
    if (!g_) {
        int N = trunc_.q_order;
        Bimould<QSeries> acc = Bimould<QSeries>::unit(trunc_);
        for (int m = 1; m <= N; ++m) {
            // chain recursion: prepend the depth-one block with the largest m
            Bimould<QSeries> lam = Bimould<QSeries>::unit(trunc_);
            if (trunc_.depth_max >= 1) lam.part(1) = lm_depth1(m);
            acc = mould_product(lam, acc);
        }
        g_ = std::move(acc);
    }
    return *g_;
}

const Bimould<QSeries>& EisContext::g_star() {
    if (!g_star_) {
        int N = trunc_.q_order;
        Bimould<QSeries> acc = Bimould<QSeries>::unit(trunc_);
        for (int m = 1; m <= N; ++m) acc = mould_product(lm(m), acc);
        g_star_ = std::move(acc);
    }
    return *g_star_;
}

const Bimould<QSeries>& EisContext::G() {
    if (!G_) G_ = mould_product(g_star(), b_q());
    return *G_;
}

const Bimould<QSeries>& EisContext::G_j(int j) {
    if (j < 0 || j > trunc_.depth_max)
        throw std::invalid_argument("G_j: j out of range");
    if (g_j_.empty()) {
        int N = trunc_.q_order;
        int D = trunc_.depth_max;
        std::vector<Bimould<QSeries>> u(D + 1, Bimould<QSeries>(trunc_));
        u[0] = b_q();
        for (int m = 1; m <= N; ++m) {
            Bimould<QSeries> block = lm(m);
            block.part(0) = PolyXY<QSeries>(0, trunc_.weight_max, trunc_.y_degree_max);
            for (int jj = D; jj >= 1; --jj) {
                if (jj > m) continue;  // needs m > m_2 > ... > m_jj > 0
                u[jj] = u[jj] + mould_product(block, u[jj - 1]);
            }
        }
        g_j_ = std::move(u);
    }
    return g_j_[j];
}

QSeries EisContext::G_of(const Word& zword) {
    if (zword.empty()) return QSeries::constant(Rational(1), trunc_.q_order);
    if (zword.alphabet() != Alphabet::z)
        throw std::invalid_argument("G_of: expected a z-word");
    return G_coeff(zword.bi_index());
}

QSeries EisContext::G_of(const LinComb& zwords) {
    QSeries acc(trunc_.q_order);
    for (const auto& [w, c] : zwords.terms()) acc = acc + G_of(w) * c;
    return acc;
}

CheckFailure EisContext::q_derivative_check(const BiIndex& idx) {
    if (idx.weight() + 2 > trunc_.weight_max)
        throw std::invalid_argument("q_derivative_check: truncation too small for " + idx.str());
    QSeries lhs = G_coeff(idx).q_derivative();
    QSeries rhs(trunc_.q_order);
    for (int i = 0; i < idx.depth(); ++i) {
        BiIndex up = idx;
        up.k[i] += 1;
        up.d[i] += 1;
        rhs = rhs + G_coeff(up) * Rational(idx.k[i]);
    }
    if (auto diff = scalar_difference(lhs, rhs)) return CheckFailure::fail(idx.str(), *diff);
    return CheckFailure::pass();
}

namespace {

void brute_rec(const BiIndex& idx, int pos, int m_upper_exclusive, int cost, const Rational& acc,
               int q_order, QSeries& out) {
    int r = idx.depth();
    if (pos == r) {
        out.add_coeff(cost, acc);
        return;
    }
    int remaining = r - pos - 1;  // positions after this one
    // cheapest admissible tail chain is remaining, remaining-1, ..., 1
    int min_rest = (remaining * (remaining + 1)) / 2;
    for (int m = remaining + 1; m < m_upper_exclusive; ++m) {
        for (int n = 1; cost + m * n + min_rest <= q_order; ++n) {
            Rational term = acc * rational_pow(n, idx.k[pos] - 1) * rational_pow(m, idx.d[pos]) *
                            inv_factorial(idx.k[pos] - 1);
            brute_rec(idx, pos + 1, m, cost + m * n, term, q_order, out);
        }
    }
}

}  // namespace

QSeries EisContext::g_bruteforce(const BiIndex& idx, int q_order) {
    QSeries out(q_order);
    if (idx.depth() == 0) {
        out.set_coeff(0, Rational(1));
        return out;
    }
    brute_rec(idx, 0, q_order + 1, 0, Rational(1), q_order, out);
    return out;
}

}  // namespace cmes
