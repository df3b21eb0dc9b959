// Special-function kernel: complex log-gamma, upper incomplete gamma with
// complex shape parameter, Bessel J0/J1/I0/I1, Hurwitz zeta by
// Euler-Maclaurin, Dirichlet beta, alternating-series acceleration, and an
// adaptive Gauss-Legendre quadrature used by every oscillatory integral in
// the library.

#pragma once

#include <complex>
#include <functional>

namespace kzeta {

using cplx = std::complex<double>;

// principal-branch log Gamma (Lanczos, ~1e-13 relative)
cplx log_gamma(cplx z);
cplx gamma_fn(cplx z);

// upper incomplete Gamma(a, x) for complex a, real x > 0.
// Continued fraction for x >> |a|, lower-series subtraction for x << |a|,
// direct path quadrature in the transition band.  Relative accuracy ~1e-12
// away from zeros.
cplx upper_gamma(cplx a, double x);

// Bessel functions.
// Real arguments: any |x| <= 1e7 (series + Hankel asymptotics).
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_i0_scaled(double x);  // e^-|x| I0(x)
double bessel_i0(double x);
double bessel_i1(double x);

// complex argument: series on |z| <= 30; imaginary axis via
// I0(iy) = J0(y), I1(iy) = i J1(y); elsewhere throws
enum class BesselKind { J0, J1, I0, I1 };
cplx bessel(BesselKind kind, cplx z);

// Hurwitz zeta(s, a), a > 0, Euler-Maclaurin; valid for Re(s) > -21,
// any |Im(s)| (cost grows linearly with the height)
cplx hurwitz_zeta(cplx s, double a);

// Riemann zeta and the Dirichlet beta function L(s, chi_4)
cplx riemann_zeta(cplx s);
cplx dirichlet_beta(cplx s);

// zeta_k(s) = zeta(s) * beta(s): Dedekind zeta of Q(i), ideal-normalized
// (this is the tall-height workhorse; the theta-split continuation lives in
// zeta.hpp and is cross-checked against this product)
cplx zeta_k_product(cplx s);

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k
double alternating_sum_cvz(const std::function<double(int)>& a, int n_terms);

// Adaptive Gauss-Legendre (15-point panels, bisection to tolerance).
struct QuadResult {
    cplx value{0.0, 0.0};
    double err_estimate = 0.0;
    bool converged = true;
};
QuadResult integrate(const std::function<cplx(double)>& f, double lo, double hi,
                     double abs_tol = 1e-10, double rel_tol = 1e-10,
                     int max_depth = 14);

// fixed-order Gauss-Legendre on one panel (n in {15, 31, 63})
cplx gauss_legendre(const std::function<cplx(double)>& f, double lo, double hi, int n);

} // namespace kzeta
