#include "cmes/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace cmes {

namespace {
std::mutex cache_mutex;
std::vector<Rational> bernoulli_cache;  // filled up to the largest n requested
}  // namespace

Rational bernoulli(int n) {
    if (n < 0)
        throw std::invalid_argument("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (bernoulli_cache.empty())
        bernoulli_cache.push_back(Rational(1));
    // sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1
    while (static_cast<int>(bernoulli_cache.size()) <= n) {
        int m = static_cast<int>(bernoulli_cache.size());
        Rational acc;
        for (int j = 0; j < m; ++j)
            acc += binomial(m + 1, j) * bernoulli_cache[j];
        bernoulli_cache.push_back(-acc / Rational(m + 1));
    }
    return bernoulli_cache[n];
}

Rational factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative index");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational inv_factorial(int n) { return factorial(n).inv(); }

Rational binomial(int n, int k) {
    if (n < 0)
        throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return Rational();
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace cmes
