#include "kzeta/zeta.hpp"

#include <cmath>

namespace kzeta {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;
constexpr double TWO_PI = 2.0 * PI;

// x^-a Gamma(a, x): the natural building block of the theta-split sums
// (no x^a / x^-a blowup in the continued-fraction regime).
cplx gamma_term(cplx a, double x) {
    const double am = std::abs(a);
    if (x >= 1.1 * am + 9.0) {
        // Lentz CF for Gamma(a,x) = e^(-x + a log x) h  =>  x^-a Gamma = e^-x h
        const double tiny = 1e-300;
        cplx b = x + 1.0 - a;
        cplx c = 1.0 / tiny;
        cplx d = 1.0 / b;
        cplx h = d;
        for (int i = 1; i <= 800; ++i) {
            cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
            b += 2.0;
            d = an * d + b;
            if (std::abs(d) < tiny) d = tiny;
            c = b + an / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            cplx del = d * c;
            h *= del;
            if (std::abs(del - 1.0) < 1e-16) break;
        }
        return std::exp(-x) * h;
    }
    if (a.real() > 0.3) {
        // x^-a Gamma(a) - e^-x sum_n x^n / (a (a+1) ... (a+n))
        cplx sum = 1.0 / a;
        cplx term = sum;
        for (int n = 1; n <= 3000; ++n) {
            term *= x / (a + static_cast<double>(n));
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        cplx head = std::exp(log_gamma(a) - a * std::log(x));
        return head - std::exp(-x) * sum;
    }
    // Re(a) <= 0.3: x^-a Gamma(a,x) = int_0^inf exp(a u - x e^u) du
    double U = std::log((40.0 + 3.0 * std::abs(a.imag())) / x) + 1.0;
    if (U <= 0.0) U = 1.0;
    auto f = [a, x](double u) { return std::exp(a * u - x * std::exp(u)); };
    QuadResult q = integrate(f, 0.0, U, 1e-16, 5e-14, 16);
    return q.value;
}

struct ReducedPoint {
    double x, y;
    bool integral;  // reduced to exactly (0,0)
};

// reduce shift into [0,1)^2
ReducedPoint reduce_shift(cplx mu) {
    double x = mu.real() - std::floor(mu.real());
    double y = mu.imag() - std::floor(mu.imag());
    if (x == 1.0) x = 0.0;
    if (y == 1.0) y = 0.0;
    return {x, y, x == 0.0 && y == 0.0};
}

// reduce twist into [-1/2, 1/2)^2, returning the integer part
ReducedPoint reduce_twist(cplx nu, long& kx, long& ky) {
    kx = std::lround(nu.real());
    ky = std::lround(nu.imag());
    double x = nu.real() - kx;
    double y = nu.imag() - ky;
    return {x, y, x == 0.0 && y == 0.0};
}

cplx unit_phase(double t) { return {std::cos(TWO_PI * t), std::sin(TWO_PI * t)}; }

// sum over v in Z^2 + off, v != 0, of P_k(v) e(<v, tw>) gamma_term(shape, pi |v|^2)
cplx theta_sum(cplx shape, int k_abs, bool conj_power, ReducedPoint off,
               double tw_x, double tw_y, double x_cut) {
    const double r2max = x_cut / PI;
    const int R = static_cast<int>(std::sqrt(r2max)) + 2;
    cplx sum = 0.0;
    for (int ny = -R; ny <= R; ++ny) {
        const double vy = ny + off.y;
        for (int nx = -R; nx <= R; ++nx) {
            const double vx = nx + off.x;
            const double v2 = vx * vx + vy * vy;
            if (v2 == 0.0 || v2 > r2max) continue;
            cplx P = 1.0;
            if (k_abs > 0) {
                cplx v(vx, conj_power ? -vy : vy);
                // v^k / |v|^0; normalize to unit modulus times |v|^k kept in
                // P so that P * gamma_term carries |v|^(-2s-k) overall
                P = std::pow(v, k_abs);
            }
            cplx ph = unit_phase(vx * tw_x + vy * tw_y);
            sum += P * ph * gamma_term(shape, PI * v2);
        }
    }
    return sum;
}

} // namespace

cplx lerch_epstein(cplx s, int m, cplx shift, cplx twist) {
    const int k = std::abs(m);
    const bool conj_power = (m < 0);
    const cplx a = s + 0.5 * k;
    const cplx b = (1.0 - s) + 0.5 * k;

    ReducedPoint mu = reduce_shift(shift);
    long kx = 0, ky = 0;
    ReducedPoint nu = reduce_twist(twist, kx, ky);
    // F(nu' + lambda) = e(<mu, lambda>) F(nu'), applied with original mu
    // (the shift reduction does not change the set {v}, hence no phase)
    cplx outer_phase = unit_phase(mu.x * kx + mu.y * ky);

    const bool d_mu = (k == 0) && mu.integral;
    const bool d_nu = (k == 0) && nu.integral;

    if (d_nu && std::abs(s - 1.0) < 1e-12)
        throw pole_error("lerch_epstein: pole at s = 1",
                         PI * unit_phase(nu.x * mu.x + nu.y * mu.y));

    const double am = std::abs(a), bm = std::abs(b);
    const double x_cut = std::max(46.0, 1.7 * std::max(am, bm) + 16.0);

    // direct side: shape a, lattice Z^2 + mu, twist nu
    cplx A = theta_sum(a, k, conj_power, mu, nu.x, nu.y, x_cut);
    // dual side: shape b, lattice Z^2 - nu, twist mu, prefactor (-i)^k e(<nu,mu>)
    ReducedPoint neg_nu = reduce_shift(cplx(-nu.x, -nu.y));
    cplx B = theta_sum(b, k, conj_power, neg_nu, mu.x, mu.y, x_cut);

    cplx dual_phase = unit_phase(nu.x * mu.x + nu.y * mu.y);
    cplx mi_pow = 1.0;  // (-i)^k
    {
        int km = k % 4;
        static const cplx t[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
        mi_pow = t[km];
    }

    cplx lam_inv = std::exp(a * std::log(PI) - log_gamma(a));  // pi^a / Gamma(a)
    cplx val = lam_inv * (A + mi_pow * dual_phase * B);
    if (d_nu)
        val += dual_phase * std::exp(a * std::log(PI) - log_gamma(a)) / (s - 1.0);
    if (d_mu)
        val -= std::exp(a * std::log(PI) - log_gamma(a + 1.0));  // pi^a/(s Gamma(s)) = pi^a/Gamma(s+1)
    return outer_phase * val;
}

cplx dedekind_zeta(cplx s) {
    if (std::abs(s - 1.0) < 1e-12)
        throw pole_error("dedekind_zeta: pole at s = 1", cplx(PI / 4.0, 0.0));
    return 0.25 * lerch_epstein(s, 0, 0.0, 0.0);
}

cplx lerch_zeta(cplx s, int m, cplx xi) {
    if (m == 0 && std::abs(s - 1.0) < 1e-12) {
        ReducedPoint mu = reduce_shift(xi);
        (void)mu;
        throw pole_error("lerch_zeta: pole at s = 1 (m = 0)", cplx(PI, 0.0));
    }
    return lerch_epstein(s, m, xi, 0.0);
}

cplx lerch_fe_rhs(cplx s, int m, cplx xi) {
    if (s.real() >= 0.0)
        throw std::domain_error("lerch_fe_rhs: requires Re(s) < 0");
    const int k = std::abs(m);
    cplx pref = std::exp((2.0 * s - 1.0) * std::log(PI) +
                         log_gamma(1.0 - s + 0.5 * k) - log_gamma(s + 0.5 * k));
    static const cplx t[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    pref *= t[k % 4];  // (-i)^|m|
    return pref * lerch_epstein(1.0 - s, -m, 0.0, std::conj(xi));
}

cplx lerch_zeta_direct(cplx s, int m, cplx xi, int64_t max_norm) {
    const int k = std::abs(m);
    const int R = static_cast<int>(std::sqrt(static_cast<double>(max_norm))) + 2;
    cplx sum = 0.0;
    for (int ny = -R; ny <= R; ++ny) {
        for (int nx = -R; nx <= R; ++nx) {
            cplx v(nx + xi.real(), ny + xi.imag());
            double v2 = std::norm(v);
            if (v2 == 0.0 || v2 > static_cast<double>(max_norm)) continue;
            cplx ang = 1.0;
            if (k > 0) {
                cplx u = v / std::abs(v);
                if (m < 0) u = std::conj(u);
                ang = std::pow(u, k);
            }
            sum += ang * std::exp(-s * std::log(v2));
        }
    }
    return sum;
}

cplx lerch_fe_rhs_direct(cplx s, int m, cplx xi, int64_t max_norm) {
    const int k = std::abs(m);
    cplx pref = std::exp((2.0 * s - 1.0) * std::log(PI) +
                         log_gamma(1.0 - s + 0.5 * k) - log_gamma(s + 0.5 * k));
    static const cplx t[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    pref *= t[k % 4];
    const int R = static_cast<int>(std::sqrt(static_cast<double>(max_norm))) + 2;
    cplx sum = 0.0;
    for (int ny = -R; ny <= R; ++ny) {
        for (int nx = -R; nx <= R; ++nx) {
            if (nx == 0 && ny == 0) continue;
            double v2 = static_cast<double>(nx) * nx + static_cast<double>(ny) * ny;
            if (v2 > static_cast<double>(max_norm)) continue;
            cplx nz(nx, ny);
            cplx u = nz / std::abs(nz);
            cplx ang = std::pow(u, -m);  // (n/|n|)^(-m)
            double re_nxi = nx * xi.real() - ny * xi.imag();
            cplx ph(std::cos(TWO_PI * re_nxi), std::sin(TWO_PI * re_nxi));
            sum += ang * ph * std::exp(-(1.0 - s) * std::log(v2));
        }
    }
    return pref * sum;
}

} // namespace kzeta
