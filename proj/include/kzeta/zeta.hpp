// Analytic continuation of Lerch/Epstein lattice sums over Z[i].
//
// The engine evaluates, for integer angular weight m, shift mu and twist nu
// (both in C identified with R^2),
//
//   F(s; m, mu, nu) = sum_{v in Z^2+mu, v != 0} P_m(v) e(<v,nu>) |v|^(-2s-|m|)
//
// with P_m(v) = v^|m| for m >= 0 and conj(v)^|m| for m < 0 (both harmonic of
// degree |m|), <x,y> = x1 y1 + x2 y2, e(t) = exp(2 pi i t).  Splitting the
// Mellin integral of the associated theta series at t = 1 and applying
// Poisson summation to the lower half gives the everywhere-convergent form
//
//   F = pi^a/Gamma(a) [ A + (-i)^k e(<nu,mu>) B
//                       + d_nu e(<nu,mu>) pi^a/(Gamma(a)(s-1))-part
//                       - d_mu /s-part ],     a = s + k/2, k = |m|,
//
// where A, B are incomplete-gamma-weighted lattice sums (B over the dual
// lattice Z^2 - nu with twist mu and shape b = 1 - s + k/2) and the polar
// terms are present only for k = 0 with integral nu resp. mu.  The polar
// terms are folded into pi^a/Gamma(a) analytically so s = 0 is regular and
// only the genuine pole at s = 1 (k = 0) remains.
//
// Special cases used by the library:
//   zeta_k(s)          = F(s; 0, 0, 0) / 4          (Dedekind zeta of Q(i))
//   zeta_k(s; m, xi)   = F(s; m, xi, 0)             (Lerch zeta)
//   FE right-hand side = prefactor * F(1-s; -m, 0, conj(xi))

#pragma once

#include <complex>
#include <stdexcept>

#include "kzeta/special.hpp"

namespace kzeta {

struct pole_error : std::domain_error {
    cplx residue;
    pole_error(const std::string& what, cplx res)
        : std::domain_error(what), residue(res) {}
};

// the general engine; throws pole_error at s = 1 when m = 0 and nu integral
cplx lerch_epstein(cplx s, int m, cplx shift, cplx twist);

// Dedekind zeta of Q(i), ideal-normalized: 4^-1 sum_{n != 0} |n|^-2s.
// Theta-split continuation, |s| <= 50; pole at s = 1 with residue pi/4.
cplx dedekind_zeta(cplx s);

// Lerch zeta per the m/xi convention above; pole (m = 0) at s = 1 with
// residue pi
cplx lerch_zeta(cplx s, int m, cplx xi);

// right-hand side of the Lerch functional equation, valid Re(s) < 0:
//   (-i)^|m| pi^(2s-1) Gamma(1-s+|m|/2)/Gamma(s+|m|/2)
//     * sum_{n != 0} (n/|n|)^(-m) e[n xi] |n|^(-2(1-s))
// evaluated through the twisted engine (not the direct series, which
// converges too slowly at Re(s) = -1/2 to be usable)
cplx lerch_fe_rhs(cplx s, int m, cplx xi);

// direct truncated lattice sums, used as convergent-regime oracles
cplx lerch_zeta_direct(cplx s, int m, cplx xi, int64_t max_norm);
cplx lerch_fe_rhs_direct(cplx s, int m, cplx xi, int64_t max_norm);

// zeta_k for arbitrary height via zeta(s)*beta(s) (Euler-Maclaurin);
// used internally where |Im s| can exceed the theta-split contract
inline cplx zeta_k_any_height(cplx s) {
    if (std::abs(s.imag()) <= 40.0 && std::abs(s) <= 50.0) return dedekind_zeta(s);
    return zeta_k_product(s);
}

} // namespace kzeta
