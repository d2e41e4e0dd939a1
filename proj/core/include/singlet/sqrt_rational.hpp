#pragma once

#include <stdexcept>
#include <string>

#include "singlet/rational.hpp"

namespace singlet {

// Thrown when two SqrtRational values with incommensurable radicands are added.
struct IncompatibleRadicand : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact value sign * sqrt(radicand), radicand a non-negative rational.
// Every matrix element of the engines has this shape: a rational coefficient
// times the square root of a ratio of state norms.
class SqrtRational {
public:
    SqrtRational() = default;

    SqrtRational(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
        if (radicand_ < 0) throw std::domain_error("SqrtRational: negative radicand");
        if (radicand_ == 0) sign_ = 0;
        if (sign_ == 0) radicand_ = 0;
    }

    // Exact embedding of a rational: r -> sign(r) * sqrt(r^2).
    static SqrtRational from_rational(const Rational& r) {
        const int s = r > 0 ? 1 : (r < 0 ? -1 : 0);
        return SqrtRational(s, r * r);
    }

    // rational * sqrt(radicand)
    static SqrtRational scaled_sqrt(const Rational& scale, const Rational& radicand) {
        const int s = scale > 0 ? 1 : (scale < 0 ? -1 : 0);
        return SqrtRational(s, scale * scale * radicand);
    }

    int sign() const { return sign_; }
    const Rational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    // Exactly a rational iff the radicand is a perfect square.
    bool as_rational(Rational& out) const {
        Rational root;
        if (!rational_sqrt(radicand_, root)) return false;
        out = sign_ < 0 ? Rational(-root) : root;
        return true;
    }

    SqrtRational operator-() const {
        SqrtRational r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
        return SqrtRational(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
    }

    friend SqrtRational operator*(const SqrtRational& a, const Rational& r) {
        const int s = r > 0 ? 1 : (r < 0 ? -1 : 0);
        return SqrtRational(a.sign_ * s, a.radicand_ * r * r);
    }

    // Defined only when radicand_a / radicand_b is the square of a rational:
    //   r1*sqrt(s^2 q) + r2*sqrt(q) = (r1 s + r2) sqrt(q).
    friend SqrtRational operator+(const SqrtRational& a, const SqrtRational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Rational ratio = a.radicand_ / b.radicand_;
        Rational s;
        if (!rational_sqrt(ratio, s)) {
            throw IncompatibleRadicand("SqrtRational: radicand ratio " + to_fraction_string(ratio) +
                                       " is not a perfect square");
        }
        // a = sign_a * s * sqrt(q_b), b = sign_b * sqrt(q_b)
        Rational coeff = Rational(a.sign_) * s + Rational(b.sign_);
        const int sign = coeff > 0 ? 1 : (coeff < 0 ? -1 : 0);
        return SqrtRational(sign, coeff * coeff * b.radicand_);
    }

    friend SqrtRational operator-(const SqrtRational& a, const SqrtRational& b) { return a + (-b); }

    friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
        return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
    }
    friend bool operator!=(const SqrtRational& a, const SqrtRational& b) { return !(a == b); }

    // "2*sqrt(3)", "-sqrt(5/2)", "4", "0": square part pulled out front.
    std::string pretty() const;

private:
    int sign_ = 0;
    Rational radicand_{0};
};

}  // namespace singlet
