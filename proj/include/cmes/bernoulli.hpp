#pragma once

// Bernoulli numbers under the convention sum_{n>=0} B_n X^n/n! = X/(e^X - 1),
// so B_1 = -1/2, plus exact factorials and binomials. All results are cached;
// the caches behave as if filled once (guarded for concurrent use).

#include "cmes/rational.hpp"

namespace cmes {

// B_n; B_1 = -1/2, B_n = 0 for odd n >= 3.
Rational bernoulli(int n);

// n! as an exact rational (n >= 0).
Rational factorial(int n);

// 1/n!
Rational inv_factorial(int n);

// binom(n, k); zero when k < 0 or k > n (n >= 0).
Rational binomial(int n, int k);

}  // namespace cmes
