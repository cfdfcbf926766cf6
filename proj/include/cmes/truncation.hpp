#pragma once

// Truncation of the infinite objects: weight cap W, depth cap D, q-order N.
// A bi-index of depth r and weight w corresponds to a monomial of total
// degree w - r, so a depth-r table carries the degree bound W - r; callers
// converting between weights and degrees must go through these helpers
// (an off-by-r here is the likeliest bug in the whole build).

#include <stdexcept>
#include <string>
#include <vector>

namespace cmes {

struct TruncationParams {
    int weight_max = 6;
    int depth_max = 3;
    int q_order = 30;
    // Cap on the total Y-degree of every table. The default (= weight_max)
    // is a no-op; 0 restricts to the d = 0 slice, which is sound for any
    // construction that never moves X-data into Y (swap is the exception
    // and refuses capped inputs).
    int y_degree_max = -1;

    TruncationParams() = default;
    TruncationParams(int W, int D, int N, int ycap = -1)
        : weight_max(W), depth_max(D), q_order(N), y_degree_max(ycap < 0 ? W : ycap) {
        if (W < 1 || D < 1 || N < 0 || W < D)
            throw std::invalid_argument("TruncationParams: need W >= D >= 1, N >= 0");
    }

    int degree_bound(int depth) const { return weight_max - depth; }

    bool operator==(const TruncationParams&) const = default;
};

// (k_1..k_r; d_1..d_r) with k_i >= 1, d_i >= 0; weight = sum k + sum d.
struct BiIndex {
    std::vector<int> k;
    std::vector<int> d;

    BiIndex() = default;
    BiIndex(std::vector<int> ks, std::vector<int> ds) : k(std::move(ks)), d(std::move(ds)) {
        if (k.size() != d.size())
            throw std::invalid_argument("BiIndex: k/d length mismatch");
        for (int v : k)
            if (v < 1) throw std::invalid_argument("BiIndex: k entries must be >= 1");
        for (int v : d)
            if (v < 0) throw std::invalid_argument("BiIndex: d entries must be >= 0");
    }
    // z-index shorthand (all d = 0)
    static BiIndex z(std::vector<int> ks) {
        std::vector<int> ds(ks.size(), 0);
        return BiIndex(std::move(ks), std::move(ds));
    }

    int depth() const { return static_cast<int>(k.size()); }
    int weight() const {
        int w = 0;
        for (int v : k) w += v;
        for (int v : d) w += v;
        return w;
    }

    bool operator==(const BiIndex&) const = default;
    bool operator<(const BiIndex& o) const {
        if (k.size() != o.k.size()) return k.size() < o.k.size();
        if (k != o.k) return k < o.k;
        return d < o.d;
    }

    // "[3,1;0,2]"
    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
        s += ";";
        for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
        return s + "]";
    }
};

}  // namespace cmes
