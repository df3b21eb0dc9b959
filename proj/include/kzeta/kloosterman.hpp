// Kloosterman sums over Z[i]:
//   S(m, n; c) = sum_{a mod c, (a,c)=1} e[ m a/c + n a*/c ],   a a* = 1 mod c,
// with e[x] = exp(2 pi i Re(x)).  Phases are exact rationals:
// Re(m a / c) = Re(m a conj(c)) / N(c), an integer over N(c), reduced mod
// N(c) before any floating-point enters.

#pragma once

#include <complex>
#include <cstdint>

#include "kzeta/gaussian_int.hpp"

namespace kzeta {

using cplx = std::complex<double>;

struct KloostermanQuery {
    GaussianInt m, n, c;
};

// exp(2 pi i Re(x))
cplx additive_char(cplx x);

// direct evaluation, Theta(N(c)) character sums; refuses N(c) > 1e8
cplx kloosterman(const KloostermanQuery& q);

struct WeilDiagnostic {
    double value_abs;
    double bound;   // |c| * N(gcd(m,n,c))^(1/2) * d(c), d(c) = |divisors|/4
    double ratio;   // value_abs / bound; reference envelope, not an assertion
};

WeilDiagnostic weil_diagnostic(const KloostermanQuery& q);

} // namespace kzeta
