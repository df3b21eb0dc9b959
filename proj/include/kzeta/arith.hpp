// Arithmetic counting functions on Z[i]: the divisor power sum
// sigma_alpha(n) = 4^-1 sum_{d|n} |d|^(2 alpha)  (sum over all divisors,
// associates included; equivalently sum over canonical d of N(d)^alpha),
// and the square-root count
// rho_q(n) = #{ x mod 2q : x^2 = n mod 4q }.

#pragma once

#include <complex>
#include <unordered_map>
#include <cstdint>
#include <vector>

#include "kzeta/gaussian_int.hpp"

namespace kzeta {

using cplx = std::complex<double>;

// 4^-1 sum over all divisors d of n of |d|^(2 alpha); errors on n = 0
cplx sigma_alpha(const GaussianInt& n, cplx alpha);

// exhaustive count of x mod 2q with x^2 = n mod 4q; errors on q = 0,
// refuses norm(q) > 1e8
int64_t rho_q(const GaussianInt& q, const GaussianInt& n);

// Norm-indexed sieve over canonical first-quadrant Gaussian integers.
// Rational-prime smallest-factor table up to `limit` plus the list of
// canonical elements with norm <= limit, sorted by (norm, re).
struct NormSieve {
    int64_t limit;
    std::vector<int32_t> spf;  // smallest prime factor of each norm value
    mutable std::unordered_map<int64_t, GaussianInt> split_cache;  // p = a^2+b^2

    explicit NormSieve(int64_t limit);

    // canonical elements q (re > 0, im >= 0) with norm(q) <= limit,
    // sorted by (norm, re)
    std::vector<GaussianInt> canonical_up_to(int64_t bound) const;

    // canonical Gaussian prime factorization using the spf table
    // (n must have norm <= limit)
    Factorization factor(const GaussianInt& n) const;

    // Moebius function of the ideal (n): 0 if squarefull factor, else
    // (-1)^(number of distinct Gaussian prime divisors)
    int moebius(const GaussianInt& n) const;
};

} // namespace kzeta
