#include "kzeta/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kzeta {

cplx sigma_alpha(const GaussianInt& n, cplx alpha) {
    if (n.is_zero()) throw std::domain_error("sigma_alpha(0)");
    // multiplicative over canonical prime powers:
    // sum_{j<=e} N(p^j)^alpha, times nothing else (unit classes collapse
    // against the 4^-1 prefactor)
    Factorization f = factorize(n);
    cplx prod = 1.0;
    for (const auto& [p, e] : f.factors) {
        double logNp = std::log(static_cast<double>(p.norm()));
        cplx local = 0.0;
        for (int j = 0; j <= e; ++j)
            local += std::exp(alpha * (static_cast<double>(j) * logNp));
        prod *= local;
    }
    return prod;
}

int64_t rho_q(const GaussianInt& q, const GaussianInt& n) {
    if (q.is_zero()) throw std::domain_error("rho_q: q = 0");
    if (q.norm() > 100'000'000LL)
        throw std::domain_error("rho_q: norm(q) > 1e8 refused");
    GaussianInt two_q = q + q;
    GaussianInt four_q = two_q + two_q;
    RectModulus rm2(two_q), rm4(four_q);
    GaussianInt target = rm4.reduce(n);
    int64_t count = 0;
    // walk x over the rectangle of 2q without materializing it
    for (int64_t y = 0; y < rm2.g; ++y) {
        for (int64_t x = 0; x < rm2.width; ++x) {
            GaussianInt xx{x, y};
            if (rm4.reduce(xx * xx) == target) ++count;
        }
    }
    return count;
}

NormSieve::NormSieve(int64_t lim) : limit(lim), spf(static_cast<size_t>(lim) + 1, 0) {
    for (int64_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (int64_t j = i; j <= limit; j += i)
                if (spf[j] == 0) spf[j] = static_cast<int32_t>(i);
        }
    }
}

std::vector<GaussianInt> NormSieve::canonical_up_to(int64_t bound) const {
    if (bound > limit) throw std::domain_error("NormSieve: bound exceeds sieve limit");
    std::vector<GaussianInt> out;
    out.reserve(static_cast<size_t>(0.79 * bound) + 16);
    int64_t rmax = static_cast<int64_t>(std::sqrt(static_cast<double>(bound))) + 1;
    for (int64_t re = 1; re <= rmax; ++re) {
        if (re * re > bound) break;
        for (int64_t im = 0;; ++im) {
            int64_t nv = re * re + im * im;
            if (nv > bound) break;
            out.push_back({re, im});
        }
    }
    std::sort(out.begin(), out.end(), norm_lex_less);
    return out;
}

Factorization NormSieve::factor(const GaussianInt& n) const {
    if (n.is_zero()) throw std::domain_error("factor(0)");
    int64_t N = n.norm();
    if (N > limit) throw std::domain_error("NormSieve: norm exceeds sieve limit");
    Factorization f;
    GaussianInt rest = n;
    int64_t m = N;
    while (m > 1) {
        int64_t p = spf[m];
        int e_norm = 0;
        while (m % p == 0) { m /= p; ++e_norm; }
        if (p == 2) {
            GaussianInt pi{1, 1};
            int cnt = 0;
            while (gi_divides(pi, rest)) { rest = gi_div_exact(rest, pi); ++cnt; }
            if (cnt) f.factors.push_back({pi, cnt});
        } else if (p % 4 == 3) {
            GaussianInt pi{p, 0};
            int cnt = 0;
            while (gi_divides(pi, rest)) { rest = gi_div_exact(rest, pi); ++cnt; }
            if (cnt) f.factors.push_back({pi, cnt});
        } else {
            // split prime: find x+yi with x^2+y^2 = p (cached per p)
            GaussianInt pi;
            auto it = split_cache.find(p);
            if (it != split_cache.end()) {
                pi = it->second;
            } else {
                int64_t xfound = -1, yfound = -1;
                for (int64_t x = 1; x * x <= p; ++x) {
                    int64_t rem = p - x * x;
                    int64_t y = static_cast<int64_t>(std::sqrt(static_cast<double>(rem)));
                    for (int64_t yy = std::max<int64_t>(0, y - 1); yy <= y + 1; ++yy) {
                        if (yy * yy == rem) { xfound = x; yfound = yy; break; }
                    }
                    if (xfound > 0) break;
                }
                pi = canonical_assoc({xfound, yfound});
                split_cache.emplace(p, pi);
            }
            GaussianInt pib = canonical_assoc(pi.conj());
            int cnt = 0;
            while (gi_divides(pi, rest)) { rest = gi_div_exact(rest, pi); ++cnt; }
            if (cnt) f.factors.push_back({pi, cnt});
            cnt = 0;
            while (gi_divides(pib, rest)) { rest = gi_div_exact(rest, pib); ++cnt; }
            if (cnt) f.factors.push_back({pib, cnt});
        }
    }
    if (!rest.is_unit()) throw std::logic_error("NormSieve::factor leftover");
    f.unit = rest;
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& a, const auto& b) { return norm_lex_less(a.first, b.first); });
    return f;
}

int NormSieve::moebius(const GaussianInt& n) const {
    Factorization f = factor(n);
    int sign = 1;
    for (const auto& [p, e] : f.factors) {
        if (e >= 2) return 0;
        sign = -sign;
    }
    return sign;
}

} // namespace kzeta
