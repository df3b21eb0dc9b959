#include "kzeta/gaussian_int.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace kzeta {

std::string GaussianInt::str() const {
    std::string s = std::to_string(re);
    s += (im < 0) ? "-" : "+";
    s += std::to_string(im < 0 ? -im : im);
    s += "i";
    return s;
}

GaussianInt GaussianInt::parse(const std::string& s) {
    // accepted: "a", "a+bi", "a-bi", "bi", also "i"/"-i"/"+i"
    if (s.empty()) throw std::invalid_argument("empty Gaussian-integer literal");
    size_t pos = 0;
    auto read_int = [&](bool allow_empty) -> int64_t {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits_start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == digits_start) {
            if (!allow_empty) throw std::invalid_argument("bad Gaussian-integer literal: " + s);
            // bare sign means 1 or -1 (as in "a+i")
            return (start < s.size() && s[start] == '-') ? -1 : 1;
        }
        return std::stoll(s.substr(start, pos - start));
    };
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        // split body at the last +/- that is not at position 0
        size_t split = std::string::npos;
        for (size_t k = body.size(); k-- > 1;) {
            if (body[k] == '+' || body[k] == '-') { split = k; break; }
        }
        if (split == std::string::npos) {
            // pure imaginary
            pos = 0;
            const std::string t = body;
            if (t.empty() || t == "+" ) return {0, 1};
            if (t == "-") return {0, -1};
            return {0, std::stoll(t)};
        }
        pos = 0;
        std::string re_part = body.substr(0, split);
        std::string im_part = body.substr(split);
        int64_t re_v = std::stoll(re_part);
        int64_t im_v;
        if (im_part == "+") im_v = 1;
        else if (im_part == "-") im_v = -1;
        else im_v = std::stoll(im_part);
        return {re_v, im_v};
    }
    pos = 0;
    int64_t v = read_int(false);
    if (pos != s.size()) throw std::invalid_argument("bad Gaussian-integer literal: " + s);
    return {v, 0};
}

GaussianInt canonical_assoc(const GaussianInt& g) {
    if (g.is_zero()) return g;
    GaussianInt c = g;
    for (int k = 0; k < 4; ++k) {
        if (c.re > 0 && c.im >= 0) return c;
        c = c.times_i();
    }
    throw std::logic_error("unreachable: no canonical associate");
}

GaussianInt gi_divmod(const GaussianInt& a, const GaussianInt& b, GaussianInt& rem) {
    if (b.is_zero()) throw std::domain_error("Gaussian division by zero");
    // a/b = a*conj(b)/N(b), rounded to nearest
    GaussianInt num = a * b.conj();
    int64_t nb = b.norm();
    auto rnd = [nb](int64_t x) -> int64_t {
        // round(x/nb) with ties toward +inf; exactness is irrelevant,
        // any nearest rounding keeps norm(rem) <= nb/2
        int64_t q = x / nb, r = x % nb;
        if (2 * std::llabs(r) > nb) q += (x > 0) ? 1 : -1;
        return q;
    };
    GaussianInt q{rnd(num.re), rnd(num.im)};
    rem = a - q * b;
    return q;
}

bool gi_divides(const GaussianInt& b, const GaussianInt& a) {
    if (b.is_zero()) throw std::domain_error("divisibility by zero");
    GaussianInt num = a * b.conj();
    int64_t nb = b.norm();
    return num.re % nb == 0 && num.im % nb == 0;
}

GaussianInt gi_div_exact(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    GaussianInt num = a * b.conj();
    int64_t nb = b.norm();
    if (num.re % nb != 0 || num.im % nb != 0)
        throw std::domain_error("gi_div_exact: not divisible");
    return {num.re / nb, num.im / nb};
}

GaussianInt gi_gcd(GaussianInt a, GaussianInt b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd(0,0) undefined");
    while (!b.is_zero()) {
        GaussianInt r;
        gi_divmod(a, b, r);
        a = b;
        b = r;
    }
    return canonical_assoc(a);
}

GaussianInt inv_mod(const GaussianInt& a, const GaussianInt& q) {
    if (q.is_zero()) throw std::domain_error("inv_mod: zero modulus");
    // extended Euclid: track x with a*x = r mod q
    GaussianInt r0 = q, r1 = a, x0{0, 0}, x1{1, 0};
    while (!r1.is_zero()) {
        GaussianInt rem;
        GaussianInt qq = gi_divmod(r0, r1, rem);
        r0 = r1; r1 = rem;
        GaussianInt xn = x0 - qq * x1;
        x0 = x1; x1 = xn;
    }
    if (!r0.is_unit())
        throw std::domain_error("inv_mod: arguments not coprime");
    // a*x0 = r0 (unit) mod q; multiply by r0^-1 = conj-power
    // unit inverse: 1->1, -1->-1, i->-i, -i->i
    GaussianInt u = r0;
    GaussianInt uin;
    if (u == GaussianInt{1, 0}) uin = {1, 0};
    else if (u == GaussianInt{-1, 0}) uin = {-1, 0};
    else if (u == GaussianInt{0, 1}) uin = {0, -1};
    else uin = {0, 1};
    return reduce_mod(x0 * uin, q);
}

RectModulus::RectModulus(const GaussianInt& q_) : q(q_) {
    if (q.is_zero()) throw std::domain_error("zero modulus");
    g = std::gcd(std::llabs(q.re), std::llabs(q.im));
    int64_t ap = q.re / g, bp = q.im / g;     // primitive part q' = ap + bp*i
    nprim = checked_add(checked_mul(ap, ap), checked_mul(bp, bp));
    width = checked_mul(g, nprim);
    // integer w with w = i (mod q'): w = u*bp - v*ap where u*ap + v*bp = 1.
    // Verified by (w - i) * conj(q') = 0 mod N(q') componentwise.
    int64_t u = 0, v = 0;
    {
        int64_t r0 = ap, r1 = bp, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            int64_t k = r0 / r1;
            int64_t r2 = r0 - k * r1; r0 = r1; r1 = r2;
            int64_t s2 = s0 - k * s1; s0 = s1; s1 = s2;
            int64_t t2 = t0 - k * t1; t0 = t1; t1 = t2;
        }
        // r0 = +-1 since gcd(ap, bp) = 1
        if (r0 == 1) { u = s0; v = t0; }
        else { u = -s0; v = -t0; }
    }
    __int128 w = (__int128)u * bp - (__int128)v * ap;
    w %= nprim;
    if (w < 0) w += nprim;
    i_rep = (int64_t)w;
}

GaussianInt RectModulus::reduce(const GaussianInt& a) const {
    // im coordinate: y = a.im mod g; the lattice (q) contains g*(i - i_rep),
    // so peeling k*g of the imaginary part adds k*g*i_rep to the real part.
    int64_t y = a.im % g;
    if (y < 0) y += g;
    int64_t k = (a.im - y) / g;  // exact
    // x = a.re + k * g * i_rep  (mod width), all mod-width arithmetic in i128
    __int128 x = (__int128)(a.re % width) + ((__int128)(k % width) * ((checked_mul(g, i_rep)) % width)) % width;
    int64_t xr = (int64_t)(x % width);
    if (xr < 0) xr += width;
    return {xr, y};
}

std::vector<GaussianInt> residue_system(const GaussianInt& q) {
    RectModulus rm(q);
    int64_t N = q.norm();
    if (N > 10'000'000)
        throw std::domain_error("residue_system: norm too large to materialize");
    std::vector<GaussianInt> out;
    out.reserve(static_cast<size_t>(N));
    for (int64_t y = 0; y < rm.g; ++y)
        for (int64_t x = 0; x < rm.width; ++x)
            out.push_back({x, y});
    return out;
}

GaussianInt reduce_mod(const GaussianInt& a, const GaussianInt& q) {
    return RectModulus(q).reduce(a);
}

GaussianInt Factorization::value() const {
    GaussianInt v = unit;
    for (const auto& [p, e] : factors)
        for (int k = 0; k < e; ++k) v = v * p;
    return v;
}

namespace {

// smallest x with x^2 = -1 mod p, p = 1 mod 4 prime
int64_t sqrt_minus_one_mod_p(int64_t p) {
    auto mulmod = [p](int64_t a, int64_t b) {
        return static_cast<int64_t>((__int128)a * b % p);
    };
    auto powmod = [&](int64_t b, int64_t e) {
        int64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    for (int64_t c = 2; ; ++c) {
        int64_t t = powmod(c, (p - 1) / 4);
        if (mulmod(t, t) == p - 1) return t;
    }
}

} // namespace

Factorization factorize(const GaussianInt& n) {
    if (n.is_zero()) throw std::domain_error("factorize(0)");
    int64_t N = n.norm();
    if (N > 1'000'000'000'000LL)
        throw std::domain_error("factorize: norm exceeds 1e12");

    Factorization f;
    GaussianInt rest = n;

    // factor the norm over Z
    std::vector<std::pair<int64_t, int>> norm_primes;
    int64_t m = N;
    for (int64_t p = 2; p * p <= m && p <= 1'000'000; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            norm_primes.push_back({p, e});
        }
    }
    if (m > 1) norm_primes.push_back({m, 1});  // prime cofactor (norm <= 1e12)

    for (auto [p, e] : norm_primes) {
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
        } else { // p = 1 mod 4 splits
            int64_t t = sqrt_minus_one_mod_p(p);
            GaussianInt pi = canonical_assoc(gi_gcd({p, 0}, {t, 1}));
            GaussianInt pib = canonical_assoc(pi.conj());
            int cnt = 0;
            while (gi_divides(pi, rest)) { rest = gi_div_exact(rest, pi); ++cnt; }
            if (cnt) f.factors.push_back({pi, cnt});
            cnt = 0;
            while (gi_divides(pib, rest)) { rest = gi_div_exact(rest, pib); ++cnt; }
            if (cnt) f.factors.push_back({pib, cnt});
        }
    }
    if (!rest.is_unit())
        throw std::logic_error("factorize: leftover non-unit");
    f.unit = rest;
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& a, const auto& b) { return norm_lex_less(a.first, b.first); });
    return f;
}

std::vector<GaussianInt> canonical_divisors(const GaussianInt& n) {
    Factorization f = factorize(n);
    std::vector<GaussianInt> out{GaussianInt{1, 0}};
    for (const auto& [p, e] : f.factors) {
        size_t base = out.size();
        GaussianInt pk{1, 0};
        std::vector<GaussianInt> next;
        next.reserve(base * (e + 1));
        for (int k = 0; k <= e; ++k) {
            for (size_t j = 0; j < base; ++j)
                next.push_back(canonical_assoc(out[j] * pk));
            if (k < e) pk = pk * p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), norm_lex_less);
    return out;
}

std::vector<GaussianInt> divisors(const GaussianInt& n) {
    std::vector<GaussianInt> canon = canonical_divisors(n);
    std::vector<GaussianInt> out;
    out.reserve(canon.size() * 4);
    for (const auto& d : canon) {
        GaussianInt u = d;
        for (int k = 0; k < 4; ++k) {
            out.push_back(u);
            u = u.times_i();
        }
    }
    std::sort(out.begin(), out.end(), norm_lex_less);
    return out;
}

} // namespace kzeta
