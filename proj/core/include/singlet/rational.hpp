#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace singlet {

// Exact rational arithmetic everywhere; no floating point in the engines.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

// "num/den" with den always present, both in lowest terms.
std::string to_fraction_string(const Rational& q);

// Accepts "num", "num/den", optional leading '-'.
Rational rational_from_string(std::string_view text);

// If q is the square of a rational, stores the non-negative root and returns true.
bool rational_sqrt(const Rational& q, Rational& root);

// Largest s with q = s^2 * sf and sf integer square-free (numerator and
// denominator factored by trial division; fine for the smooth numbers
// produced here).
void square_decompose(const Rational& q, Rational& square_root, Rational& square_free);

// Complex rational a + b*i for generator matrix elements (sigma_2, lambda_{2,5,7}).
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const GaussianRational& a, const Rational& s) {
        return {a.re * s, a.im * s};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

}  // namespace singlet
