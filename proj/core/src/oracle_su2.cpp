#include "singlet/oracle_su2.hpp"

#include <algorithm>
#include <stdexcept>

namespace singlet::oracle {

int su2_mode(int leg, int color) { return (leg - 1) * 2 + color; }

int su2_leg_count(const Su2State& s, int leg) {
    return s[su2_mode(leg, 0)] + s[su2_mode(leg, 1)];
}

Su2Vector su2_create(int leg, int color, const Su2Vector& v) {
    return v.apply_create(su2_mode(leg, color));
}

Su2Vector su2_annihilate(int leg, int color, const Su2Vector& v) {
    return v.apply_annihilate(su2_mode(leg, color));
}

namespace {

// eps_{01} = +1
int eps2(int a, int b) { return a == b ? 0 : (a == 0 ? 1 : -1); }

}  // namespace

Su2Vector apply_factor_su2(const Factor& f, int color, const Su2Vector& v) {
    if (f.species == Species::A)
        return f.dagger ? su2_create(f.leg, color, v) : su2_annihilate(f.leg, color, v);
    // tilde factor: contract the free color through epsilon
    Su2Vector out;
    for (int beta = 0; beta < 2; ++beta) {
        const int e = eps2(color, beta);
        if (e == 0) continue;
        Su2Vector term = f.dagger ? su2_create(f.leg, beta, v) : su2_annihilate(f.leg, beta, v);
        out += term * Rational(e);
    }
    return out;
}

Su2Vector apply_op_su2(const InvariantOp& op, const Su2Vector& v) {
    Su2Vector out;
    switch (op.kind) {
        case InvariantOp::Kind::Number:
            return v.scale_by(
                [leg = op.leg](const Su2State& s) { return Rational(su2_leg_count(s, leg)); });
        case InvariantOp::Kind::Bilinear:
            for (int c = 0; c < 2; ++c)
                out += apply_factor_su2(op.factors[0], c, apply_factor_su2(op.factors[1], c, v));
            return out;
        case InvariantOp::Kind::TrilinearEps:
            throw std::invalid_argument("SU(2) has no epsilon-trilinear invariants");
    }
    throw std::logic_error("unreachable");
}

namespace {

// (a+_i . ~a+_j)
Su2Vector raise_pair(int i, int j, const Su2Vector& v) {
    Su2Vector out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const int e = eps2(a, b);
            if (e == 0) continue;
            out += su2_create(i, a, su2_create(j, b, v)) * Rational(e);
        }
    return out;
}

}  // namespace

Su2Vector build_state_su2(const Su2Label& label) {
    if (!label.valid()) throw std::invalid_argument("invalid label");
    Su2Vector v = Su2Vector::vacuum();
    for (int k = 0; k < label.l31; ++k) v = raise_pair(3, 1, v);
    for (int k = 0; k < label.l23; ++k) v = raise_pair(2, 3, v);
    for (int k = 0; k < label.l12; ++k) v = raise_pair(1, 2, v);
    return v;
}

namespace {

using GR = GaussianRational;

const std::array<std::array<std::array<GR, 2>, 2>, 3>& sigma_matrices() {
    static const auto table = [] {
        std::array<std::array<std::array<GR, 2>, 2>, 3> s{};
        s[0][0][1] = GR(Rational(1));
        s[0][1][0] = GR(Rational(1));
        s[1][0][1] = GR(Rational(0), Rational(-1));
        s[1][1][0] = GR(Rational(0), Rational(1));
        s[2][0][0] = GR(Rational(1));
        s[2][1][1] = GR(Rational(-1));
        return s;
    }();
    return table;
}

Su2Vector su2_gauss_leg(int a, int leg, const Su2Vector& v) {
    const auto& sig = sigma_matrices()[a - 1];
    Su2Vector out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            if (sig[r][c].is_zero()) continue;
            out += su2_create(leg, r, su2_annihilate(leg, c, v)) * sig[r][c];
        }
    return out * Rational(1, 2);
}

}  // namespace

Su2Vector su2_gauss_total(int a, const Su2Vector& v) {
    Su2Vector out;
    for (int leg = 1; leg <= 3; ++leg) out += su2_gauss_leg(a, leg, v);
    return out;
}

Su2Vector su2_casimir_leg(int leg, const Su2Vector& v) {
    Su2Vector out;
    for (int a = 1; a <= 3; ++a) out += su2_gauss_leg(a, leg, su2_gauss_leg(a, leg, v));
    return out;
}

const Su2Vector& Su2StateCache::get(const Su2Label& label) {
    std::array<int, 3> key{label.l12, label.l23, label.l31};
    auto it = states_.find(key);
    if (it == states_.end()) it = states_.emplace(key, build_state_su2(label)).first;
    return it->second;
}

const Rational& Su2StateCache::norm_sq(const Su2Label& label) {
    std::array<int, 3> key{label.l12, label.l23, label.l31};
    auto it = norms_.find(key);
    if (it == norms_.end()) {
        const Su2Vector& v = get(label);
        GaussianRational n = inner(v, v);
        if (n.im != 0) throw std::logic_error("state norm has an imaginary part");
        it = norms_.emplace(key, n.re).first;
    }
    return it->second;
}

std::vector<std::pair<Su2Label, Rational>> decompose_su2(const Su2Vector& v, Su2StateCache& cache) {
    std::vector<std::pair<Su2Label, Rational>> out;
    if (v.empty()) return out;
    const Su2State& first = v.terms().begin()->first;
    Su2Label target;
    if (!su2_label_from_counts(su2_leg_count(first, 1), su2_leg_count(first, 2),
                               su2_leg_count(first, 3), target))
        throw std::logic_error("decompose_su2: occupancies violate the singlet constraints");
    const Su2Vector& basis_vec = cache.get(target);
    GaussianRational amp = inner(basis_vec, v);
    if (amp.im != 0) throw std::logic_error("decompose_su2: imaginary overlap");
    Su2Vector residual = v;
    if (amp.re != 0) {
        Rational coeff = amp.re / cache.norm_sq(target);
        out.emplace_back(target, coeff);
        residual -= basis_vec * coeff;
    }
    if (!residual.empty()) throw std::logic_error("decompose_su2: vector outside the singlet span");
    return out;
}

}  // namespace singlet::oracle
