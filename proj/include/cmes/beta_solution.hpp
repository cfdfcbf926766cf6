#pragma once

// A weight-graded rational solution of the truncated extended double shuffle
// system: values for all z-indices of weight <= weight_max and depth <=
// depth_max, the depth-one part being the fixed Bernoulli data, plus the log
// of free parameters that were pinned while solving.

#include "cmes/bimould.hpp"
#include "cmes/rational.hpp"
#include "cmes/truncation.hpp"

#include <map>
#include <string>
#include <vector>

namespace cmes {

// -B_k/(2 k!) for even k >= 2, zero for odd k (and for k = 1)
Rational beta_depth1(int k);

struct FreeParam {
    int weight = 0;
    std::vector<int> index;
    Rational assigned;  // 0 unless overridden

    bool operator==(const FreeParam&) const = default;
};

class BetaSolution {
public:
    BetaSolution() = default;
    BetaSolution(int weight_max, int depth_max) : weight_max_(weight_max), depth_max_(depth_max) {}

    int weight_max() const { return weight_max_; }
    int depth_max() const { return depth_max_; }

    bool has(const std::vector<int>& idx) const { return values_.count(idx) > 0; }
    const Rational& value(const std::vector<int>& idx) const;
    void set(const std::vector<int>& idx, const Rational& v) { values_[idx] = v; }
    const std::map<std::vector<int>, Rational>& values() const { return values_; }

    std::vector<FreeParam>& free_params() { return free_params_; }
    const std::vector<FreeParam>& free_params() const { return free_params_; }

    // the Y-free mould with these coefficients, restricted to trunc
    Bimould<Rational> to_mould(const TruncationParams& trunc) const;

    std::string to_json() const;
    static BetaSolution from_json(const std::string& text);
    void save(const std::string& path) const;
    static BetaSolution load(const std::string& path);

    bool operator==(const BetaSolution&) const = default;

private:
    int weight_max_ = 0;
    int depth_max_ = 0;
    std::map<std::vector<int>, Rational> values_;
    std::vector<FreeParam> free_params_;
};

}  // namespace cmes
