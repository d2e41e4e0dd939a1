#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "singlet/rational.hpp"

namespace singlet::fock {

// Occupation-number state over a fixed set of oscillator modes.  Amplitudes
// track the unnormalized number basis |n> = (a^dag)^n |0>, so every amplitude
// stays rational; the per-mode n! normalization lives in the inner product.
template <int NModes>
using State = std::array<std::uint8_t, NModes>;

template <int NModes>
class Vector {
public:
    using state_type = State<NModes>;
    using map_type = std::map<state_type, GaussianRational>;

    Vector() = default;

    static Vector vacuum() {
        Vector v;
        state_type s{};
        v.terms_[s] = GaussianRational(Rational(1));
        return v;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }

    void add(const state_type& s, const GaussianRational& amp) {
        if (amp.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(s, amp);
        if (!inserted) {
            it->second += amp;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Vector& operator+=(const Vector& o) {
        for (const auto& [s, a] : o.terms_) add(s, a);
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        for (const auto& [s, a] : o.terms_) add(s, GaussianRational(-a.re, -a.im));
        return *this;
    }
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }

    Vector operator*(const Rational& c) const {
        Vector out;
        if (c == 0) return out;
        for (const auto& [s, a] : terms_) out.terms_.emplace(s, a * c);
        return out;
    }

    Vector operator*(const GaussianRational& c) const {
        Vector out;
        if (c.is_zero()) return out;
        for (const auto& [s, a] : terms_) out.terms_.emplace(s, a * c);
        return out;
    }

    friend bool operator==(const Vector& a, const Vector& b) { return a.terms_ == b.terms_; }

    bool is_real() const {
        for (const auto& [s, a] : terms_)
            if (a.im != 0) return false;
        return true;
    }

    // Raw oscillator action; annihilating an empty mode contributes nothing.
    Vector apply_create(int mode) const {
        Vector out;
        for (const auto& [s, a] : terms_) {
            state_type t = s;
            ++t[mode];
            out.terms_.emplace(t, a);
        }
        return out;
    }

    Vector apply_annihilate(int mode) const {
        Vector out;
        for (const auto& [s, a] : terms_) {
            if (s[mode] == 0) continue;
            state_type t = s;
            --t[mode];
            out.add(t, a * Rational(int(s[mode])));
        }
        return out;
    }

    // Multiply each component by f(state).
    template <typename F>
    Vector scale_by(F&& f) const {
        Vector out;
        for (const auto& [s, a] : terms_) out.add(s, a * f(s));
        return out;
    }

    static Rational state_weight(const state_type& s) {
        Rational w = 1;
        for (int m = 0; m < NModes; ++m)
            if (s[m] > 1) w *= Rational(factorial(s[m]));
        return w;
    }

    // <v, w> with conjugation on v and per-mode n! weights.
    friend GaussianRational inner(const Vector& v, const Vector& w) {
        GaussianRational acc;
        const Vector& small = v.size() <= w.size() ? v : w;
        const Vector& large = v.size() <= w.size() ? w : v;
        const bool small_is_v = &small == &v;
        for (const auto& [s, a] : small.terms_) {
            auto it = large.terms_.find(s);
            if (it == large.terms_.end()) continue;
            const GaussianRational& va = small_is_v ? a : it->second;
            const GaussianRational& wa = small_is_v ? it->second : a;
            acc += va.conj() * wa * state_weight(s);
        }
        return acc;
    }

    int total_quanta_of_first() const {
        if (terms_.empty()) return 0;
        int q = 0;
        for (auto n : terms_.begin()->first) q += n;
        return q;
    }

private:
    map_type terms_;
};

}  // namespace singlet::fock
