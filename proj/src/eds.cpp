#include "cmes/eds.hpp"

#include "cmes/bernoulli.hpp"
#include "cmes/linform.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cmes {

namespace {

void compositions_rec(int weight, int depth, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (depth == 0) {
        if (weight == 0) out.push_back(cur);
        return;
    }
    for (int k = 1; k + (depth - 1) <= weight; ++k) {
        cur.push_back(k);
        compositions_rec(weight - k, depth - 1, cur, out);
        cur.pop_back();
    }
}

// z-indices of exactly this weight, depths dmin..dmax, depth asc then lex
std::vector<std::vector<int>> indices_of_weight(int w, int dmin, int dmax) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int depth = dmin; depth <= std::min(w, dmax); ++depth)
        compositions_rec(w, depth, cur, out);
    return out;
}

std::string index_str(const std::vector<int>& idx) {
    std::string s = "(";
    for (size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
}

// Gamma^Z from the fixed depth-one data, to T^order
PowerSeries gamma_from_depth1(int order) {
    PowerSeries arg(order);
    for (int n = 2; n <= order; ++n)
        arg.set_coeff(n, beta_depth1(n) * Rational(n % 2 == 0 ? 1 : -1) / Rational(n));
    return series_exp(arg);
}

// Exact Gauss-Jordan over growing row sets. Rows are (a_0..a_{K-1} | b)
// meaning sum a_i x_i = b.
class Echelon {
public:
    explicit Echelon(int ncols) : ncols_(ncols) {}

    // returns the tag of a contradicting row, if any
    std::optional<std::string> add_row(std::vector<Rational> row, const std::string& tag) {
        for (auto& [col, prow] : pivots_) {
            if (row[col].is_zero()) continue;
            Rational f = row[col];
            for (int c = col; c <= ncols_; ++c) row[c] -= f * prow[c];
        }
        int lead = -1;
        for (int c = 0; c < ncols_; ++c)
            if (!row[c].is_zero()) {
                lead = c;
                break;
            }
        if (lead < 0) {
            if (!row[ncols_].is_zero()) return tag;
            return std::nullopt;
        }
        Rational inv = row[lead].inv();
        for (int c = lead; c <= ncols_; ++c) row[c] *= inv;
        for (auto& [col, prow] : pivots_) {
            if (prow[lead].is_zero()) continue;
            Rational f = prow[lead];
            for (int c = 0; c <= ncols_; ++c) prow[c] -= f * row[c];
        }
        pivots_[lead] = std::move(row);
        return std::nullopt;
    }

    bool is_pivot(int col) const { return pivots_.count(col) > 0; }

    // x values given assignments for the free columns
    std::vector<Rational> solve(const std::vector<Rational>& free_values) const {
        std::vector<Rational> x = free_values;
        for (const auto& [col, prow] : pivots_) {
            Rational v = prow[ncols_];
            for (int c = 0; c < ncols_; ++c) {
                if (c == col || prow[c].is_zero()) continue;
                v -= prow[c] * x[c];  // only free columns survive in RREF
            }
            x[col] = v;
        }
        return x;
    }

private:
    int ncols_;
    std::map<int, std::vector<Rational>> pivots_;
};

std::vector<Rational> row_from_linform(const LinForm& lin, int ncols) {
    std::vector<Rational> row(ncols + 1);
    for (const auto& [id, c] : lin.coeffs()) row[id] = c;
    row[ncols] = -lin.constant();
    return row;
}

}  // namespace

BetaSolution solve_eds(int weight_max, int depth_max, const EdsOptions& opts) {
    if (weight_max < 2 || depth_max < 1 || weight_max < depth_max)
        throw std::invalid_argument("solve_eds: need W >= 2, D >= 1, W >= D");

    BetaSolution sol(weight_max, depth_max);
    for (int k = 1; k <= weight_max; ++k) sol.set({k}, beta_depth1(k));

    TruncationParams trunc(weight_max, depth_max, 0);
    PowerSeries gamma = gamma_from_depth1(depth_max);

    std::vector<Word> words = all_z_words(weight_max - 1, depth_max);

    for (int w = 2; w <= weight_max; ++w) {
        auto unknowns = indices_of_weight(w, 2, depth_max);
        if (unknowns.empty()) continue;
        std::map<std::vector<int>, int> ids;
        for (const auto& idx : unknowns) ids.emplace(idx, static_cast<int>(ids.size()));
        int ncols = static_cast<int>(ids.size());

        // the mould with knowns as constants and weight-w unknowns symbolic
        Bimould<LinForm> z = Bimould<LinForm>::unit(trunc);
        for (int ww = 1; ww <= w; ++ww) {
            for (const auto& idx : indices_of_weight(ww, 1, depth_max)) {
                LinForm val;
                auto it = ids.find(idx);
                if (it != ids.end())
                    val = LinForm::unknown(it->second);
                else if (sol.has(idx))
                    val = LinForm(sol.value(idx));
                else
                    continue;
                if (val.is_zero()) continue;
                int depth = static_cast<int>(idx.size());
                Exponents e(2 * depth, 0);
                for (int i = 0; i < depth; ++i) e[i] = idx[i] - 1;
                z.part(depth).add_term(e, val);
            }
        }
        Bimould<LinForm> zg = z_gamma(z, gamma);

        Echelon system(ncols);
        auto feed = [&](const LinForm& lin, const std::string& tag) {
            if (auto bad = system.add_row(row_from_linform(lin, ncols), tag))
                throw std::runtime_error("solve_eds: inconsistent system at weight " +
                                         std::to_string(w) + ", constraint " + *bad);
        };

        for (size_t i = 0; i < words.size(); ++i) {
            const Word& u = words[i];
            for (size_t j = i; j < words.size(); ++j) {
                const Word& v = words[j];
                if (u.weight() + v.weight() != w) continue;
                if (u.depth() + v.depth() > depth_max) continue;
                LinForm st = phi(z, quasi_shuffle(u, v, Diamond::stuffle_z)) - phi(z, u) * phi(z, v);
                feed(st, "stuffle " + u.str() + " | " + v.str());
                LinForm sh =
                    phi(zg, quasi_shuffle(u, v, Diamond::zero_z)) - phi(zg, u) * phi(zg, v);
                feed(sh, "shuffle " + u.str() + " | " + v.str());
            }
        }

        std::vector<Rational> free_values(ncols);
        for (const auto& [idx, id] : ids) {
            if (system.is_pivot(id)) continue;
            FreeParam fp;
            fp.weight = w;
            fp.index = idx;
            auto it = opts.free_assignments.find(idx);
            if (it != opts.free_assignments.end()) fp.assigned = it->second;
            free_values[id] = fp.assigned;
            sol.free_params().push_back(std::move(fp));
        }
        std::vector<Rational> x = system.solve(free_values);
        for (const auto& [idx, id] : ids) sol.set(idx, x[id]);
    }
    return sol;
}

CheckFailure verify_eds(const BetaSolution& beta, int weight_max, int depth_max) {
    TruncationParams trunc(weight_max, depth_max, 0);
    Bimould<Rational> z = beta.to_mould(trunc);
    PowerSeries gamma = gamma_from_depth1(depth_max);
    Bimould<Rational> zg = z_gamma(z, gamma);

    CheckFailure f = check_diamond_symmetril(z, Diamond::stuffle_z, weight_max, depth_max);
    if (!f.ok) return CheckFailure::fail("stuffle " + f.where, f.detail);
    f = check_diamond_symmetril(zg, Diamond::zero_z, weight_max, depth_max);
    if (!f.ok) return CheckFailure::fail("Z_gamma shuffle " + f.where, f.detail);

    if (depth_max >= 2) {
        // depth-two displays, coefficientwise on generating series
        int bound = trunc.degree_bound(2);
        auto embed = [&](const PolyXY<Rational>& p, int offset) {
            return p.substituted(LinearSubstitution::shift(1, 2, offset), bound,
                                 trunc.y_degree_max);
        };
        PolyXY<Rational> z1a = embed(z.part(1), 0), z1b = embed(z.part(1), 1);
        PolyXY<Rational> zg1a = embed(zg.part(1), 0), zg1b = embed(zg.part(1), 1);

        LinearSubstitution exch(2, 2);
        exch.set(0, {{1, Rational(1)}});
        exch.set(1, {{0, Rational(1)}});
        exch.set(2, {{3, Rational(1)}});
        exch.set(3, {{2, Rational(1)}});

        // divided difference (Z(X1) - Z(X2)) / (X1 - X2) built coefficientwise
        PolyXY<Rational> dd(2, bound, trunc.y_degree_max);
        for (int k = 2; k <= weight_max; ++k) {
            Rational c = z.part(1).coefficient(BiIndex({k}, {0}));
            if (c.is_zero()) continue;
            for (int i = 0; i <= k - 2; ++i) {
                Exponents e = {i, k - 2 - i, 0, 0};
                dd.add_term(e, c);
            }
        }

        PolyXY<Rational> lhs = z1a.mul(z1b);
        PolyXY<Rational> rhs =
            z.part(2) + z.part(2).substituted(exch, bound, trunc.y_degree_max) + dd;
        if (!(lhs == rhs))
            return CheckFailure::fail("depth-2 stuffle display", "tables differ");

        // Z_gamma(X1) Z_gamma(X2) = Z_gamma(X1,X2) + Z_gamma(X2,X1)
        PolyXY<Rational> glhs = zg1a.mul(zg1b);
        PolyXY<Rational> grhs = zg.part(2) + zg.part(2).substituted(exch, bound, trunc.y_degree_max);
        if (!(glhs == grhs))
            return CheckFailure::fail("depth-2 shuffle display", "tables differ");

        // ... = Z(X1+X2, X1) + Z(X1+X2, X2) + 2 gamma_2 (+ gamma_1 terms,
        // zero here); each of the two depth-2 Z_gamma summands carries one
        // gamma_2
        LinearSubstitution s1(2, 2), s2(2, 2);
        s1.set(0, {{0, Rational(1)}, {1, Rational(1)}});
        s1.set(1, {{0, Rational(1)}});
        s1.set(2, {{2, Rational(1)}});
        s1.set(3, {{3, Rational(1)}});
        s2.set(0, {{0, Rational(1)}, {1, Rational(1)}});
        s2.set(1, {{1, Rational(1)}});
        s2.set(2, {{2, Rational(1)}});
        s2.set(3, {{3, Rational(1)}});
        PolyXY<Rational> grhs2 =
            z.part(2).substituted(s1, bound, trunc.y_degree_max) +
            z.part(2).substituted(s2, bound, trunc.y_degree_max) +
            z.part(1)
                .substituted(LinearSubstitution::shift(1, 2, 0), bound, trunc.y_degree_max)
                .scale(gamma.coeff(1)) +
            z.part(1)
                .substituted(LinearSubstitution::shift(1, 2, 1), bound, trunc.y_degree_max)
                .scale(gamma.coeff(1)) +
            PolyXY<Rational>::constant(gamma.coeff(2) * Rational(2), 2, bound,
                                       trunc.y_degree_max);
        if (!(glhs == grhs2))
            return CheckFailure::fail("depth-2 shuffle display (sharp form)", "tables differ");
    }
    return CheckFailure::pass();
}

}  // namespace cmes
