#include "cmes/beta_solution.hpp"

#include "cmes/bernoulli.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace cmes {

Rational beta_depth1(int k) {
    if (k < 1)
        throw std::invalid_argument("beta_depth1: k must be >= 1");
    if (k % 2 == 1) return Rational();
    return -(bernoulli(k) * Rational(1, 2) * inv_factorial(k));
}

const Rational& BetaSolution::value(const std::vector<int>& idx) const {
    auto it = values_.find(idx);
    if (it == values_.end()) {
        std::string s = "(";
        for (size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
        throw std::invalid_argument("BetaSolution: no value for " + s + ")");
    }
    return it->second;
}

Bimould<Rational> BetaSolution::to_mould(const TruncationParams& trunc) const {
    if (trunc.weight_max > weight_max_ || trunc.depth_max > depth_max_)
        throw std::invalid_argument("BetaSolution: solution does not cover the truncation");
    Bimould<Rational> z(trunc);
    z.part(0).add_term({}, Rational(1));
    for (const auto& [idx, v] : values_) {
        int depth = static_cast<int>(idx.size());
        int weight = 0;
        for (int k : idx) weight += k;
        if (depth > trunc.depth_max || weight > trunc.weight_max || v.is_zero()) continue;
        Exponents e(2 * depth, 0);
        for (int i = 0; i < depth; ++i) e[i] = idx[i] - 1;
        z.part(depth).add_term(e, v);
    }
    return z;
}

std::string BetaSolution::to_json() const {
    nlohmann::json j;
    j["weight_max"] = weight_max_;
    j["depth_max"] = depth_max_;
    j["free_params"] = nlohmann::json::array();
    for (const auto& fp : free_params_)
        j["free_params"].push_back(
            {{"weight", fp.weight}, {"index", fp.index}, {"value", fp.assigned.str()}});
    j["values"] = nlohmann::json::array();
    for (const auto& [idx, v] : values_)
        j["values"].push_back({{"index", idx}, {"value", v.str()}});
    return j.dump(2);
}

BetaSolution BetaSolution::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BetaSolution s(j.at("weight_max").get<int>(), j.at("depth_max").get<int>());
    for (const auto& e : j.at("values"))
        s.set(e.at("index").get<std::vector<int>>(),
              Rational::from_string(e.at("value").get<std::string>()));
    for (const auto& e : j.at("free_params")) {
        FreeParam fp;
        fp.weight = e.at("weight").get<int>();
        fp.index = e.at("index").get<std::vector<int>>();
        fp.assigned = Rational::from_string(e.value("value", "0"));
        s.free_params_.push_back(std::move(fp));
    }
    return s;
}

void BetaSolution::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("BetaSolution: cannot write " + path);
    out << to_json() << "\n";
}

BetaSolution BetaSolution::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("BetaSolution: cannot read " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json(text);
}

}  // namespace cmes
