// Exact arithmetic over the Gaussian integers Z[i].
//
// Conventions used throughout:
//   - norm(a+bi) = a^2 + b^2  (the field norm, = |a+bi|^2).
//   - The canonical associate of g != 0 is the unique element of
//     {g, ig, -g, -ig} with re > 0 and im >= 0 (closed first quadrant
//     minus the positive imaginary axis); canonical(0) = 0.
//   - Components are checked int64: every product goes through a
//     signed-overflow test and throws kz_overflow_error instead of
//     wrapping.  All callers in this library keep norms <= 1e12, far
//     inside the safe range.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>
#include <functional>

namespace kzeta {

struct kz_overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw kz_overflow_error("int64 overflow in Gaussian-integer multiply");
    return r;
}

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw kz_overflow_error("int64 overflow in Gaussian-integer add");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw kz_overflow_error("int64 overflow in Gaussian-integer subtract");
    return r;
}

struct GaussianInt {
    int64_t re = 0;
    int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(int64_t r) : re(r), im(0) {}
    constexpr GaussianInt(int64_t r, int64_t i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const {
        return (re == 0 && (im == 1 || im == -1)) ||
               (im == 0 && (re == 1 || re == -1));
    }

    GaussianInt conj() const { return {re, -im}; }
    GaussianInt times_i() const { return {-im, re}; }

    friend GaussianInt operator-(const GaussianInt& g) { return {-g.re, -g.im}; }
    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
                checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) {
        return !(a == b);
    }

    int64_t norm() const {
        return checked_add(checked_mul(re, re), checked_mul(im, im));
    }

    // serialization: "a+bi" / "a-bi", no spaces
    std::string str() const;
    static GaussianInt parse(const std::string& s);
};

// total order used for deterministic output: (norm, re, im)
inline bool norm_lex_less(const GaussianInt& a, const GaussianInt& b) {
    int64_t na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb;
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

// The unique associate u*g with re > 0, im >= 0 (0 for g = 0).
GaussianInt canonical_assoc(const GaussianInt& g);

// Euclidean division: q = round(a/b) componentwise, r = a - q*b with
// norm(r) <= norm(b)/2.
GaussianInt gi_divmod(const GaussianInt& a, const GaussianInt& b, GaussianInt& rem);

// true iff b | a (b != 0)
bool gi_divides(const GaussianInt& b, const GaussianInt& a);

// exact quotient a/b; throws if b does not divide a
GaussianInt gi_div_exact(const GaussianInt& a, const GaussianInt& b);

// canonical gcd; throws std::domain_error on (0,0)
GaussianInt gi_gcd(GaussianInt a, GaussianInt b);

// x with a*x = 1 mod q, returned inside residue_system(q);
// throws std::domain_error if gcd(a,q) != 1 or q = 0
GaussianInt inv_mod(const GaussianInt& a, const GaussianInt& q);

// Rectangular residue model for a modulus q = g*q' (q' primitive, i.e.
// gcd(re, im) = 1).  Z[i]/(q) is represented by the rectangle
//   { x + y i : 0 <= x < g*N(q'), 0 <= y < g },
// a complete residue system: (q) contains g*N(q') (real) and g*(i - i_rep),
// where i_rep is the integer representing i modulo q'.
struct RectModulus {
    GaussianInt q;
    int64_t g = 1;       // content gcd(|re|, |im|)
    int64_t nprim = 1;   // N(q')
    int64_t width = 1;   // g * N(q')
    int64_t i_rep = 0;   // integer w with w = i (mod q')

    explicit RectModulus(const GaussianInt& q);
    GaussianInt reduce(const GaussianInt& a) const;
    // flat index of a reduced element, row-major by (im, re)
    int64_t index(const GaussianInt& reduced) const {
        return reduced.im * width + reduced.re;
    }
};

// Complete residue system mod q in the rectangle above, listed
// lexicographically by (im, re).  |result| = N(q).  Guarded against
// materializing more than 1e7 residues.
std::vector<GaussianInt> residue_system(const GaussianInt& q);

// reduce a into that rectangle
GaussianInt reduce_mod(const GaussianInt& a, const GaussianInt& q);

struct Factorization {
    GaussianInt unit;  // one of 1, i, -1, -i
    std::vector<std::pair<GaussianInt, int>> factors;  // canonical primes, sorted by (norm, re)
    GaussianInt value() const;
};

// Canonical-prime factorization.  Route: factor norm(n) over Z (trial
// division; norms <= 1e12 leave a prime cofactor), split p = 1 mod 4 by a
// square root of -1 mod p.  Throws on n = 0 or norm(n) > 1e12.
Factorization factorize(const GaussianInt& n);

// All divisors of n, associates included; |result| = 4 * prod (e_i + 1),
// sorted by (norm, re, im).  Throws on n = 0.
std::vector<GaussianInt> divisors(const GaussianInt& n);

// canonical divisors only (one per associate class), sorted by (norm, re, im)
std::vector<GaussianInt> canonical_divisors(const GaussianInt& n);

} // namespace kzeta
