#include "singlet/oracle_su3.hpp"

#include <algorithm>
#include <stdexcept>

namespace singlet::oracle {

int su3_mode(int leg, Species species, int color) {
    return (leg - 1) * 6 + (species == Species::B ? 3 : 0) + color;
}

int leg_count(const Su3State& s, int leg, Species species) {
    int total = 0;
    for (int c = 0; c < 3; ++c) total += s[su3_mode(leg, species, c)];
    return total;
}

Su3Vector raw_create(int leg, Species sp, int color, const Su3Vector& v) {
    return v.apply_create(su3_mode(leg, sp, color));
}

Su3Vector raw_annihilate(int leg, Species sp, int color, const Su3Vector& v) {
    return v.apply_annihilate(su3_mode(leg, sp, color));
}

Su3Vector k_plus(int leg, const Su3Vector& v) {
    Su3Vector out;
    for (int c = 0; c < 3; ++c) out += raw_create(leg, Species::A, c, raw_create(leg, Species::B, c, v));
    return out;
}

Su3Vector k_minus(int leg, const Su3Vector& v) {
    Su3Vector out;
    for (int c = 0; c < 3; ++c)
        out += raw_annihilate(leg, Species::A, c, raw_annihilate(leg, Species::B, c, v));
    return out;
}

Su3Vector k_zero(int leg, const Su3Vector& v) {
    return v.scale_by([leg](const Su3State& s) {
        Rational r(leg_count(s, leg) + 3, 2);
        r.canonicalize();
        return r;
    });
}

namespace {

// Multiply each component by 1/(n_leg + m_leg + 1).
Su3Vector over_count_plus_one(int leg, const Su3Vector& v) {
    return v.scale_by([leg](const Su3State& s) {
        Rational r(1, leg_count(s, leg) + 1);
        r.canonicalize();
        return r;
    });
}

}  // namespace

Su3Vector irr_a_dag(int leg, int color, const Su3Vector& v) {
    Su3Vector out = raw_create(leg, Species::A, color, v);
    Su3Vector corr = over_count_plus_one(leg, k_plus(leg, raw_annihilate(leg, Species::B, color, v)));
    out -= corr;
    return out;
}

Su3Vector irr_b_dag(int leg, int color, const Su3Vector& v) {
    Su3Vector out = raw_create(leg, Species::B, color, v);
    Su3Vector corr = over_count_plus_one(leg, k_plus(leg, raw_annihilate(leg, Species::A, color, v)));
    out -= corr;
    return out;
}

Su3Vector irr_a(int leg, int color, const Su3Vector& v) {
    Su3Vector out = raw_annihilate(leg, Species::A, color, v);
    Su3Vector corr = raw_create(leg, Species::B, color, k_minus(leg, over_count_plus_one(leg, v)));
    out -= corr;
    return out;
}

Su3Vector irr_b(int leg, int color, const Su3Vector& v) {
    Su3Vector out = raw_annihilate(leg, Species::B, color, v);
    Su3Vector corr = raw_create(leg, Species::A, color, k_minus(leg, over_count_plus_one(leg, v)));
    out -= corr;
    return out;
}

Su3Vector apply_factor(const Factor& f, int color, const Su3Vector& v) {
    if (f.species == Species::A) return f.dagger ? irr_a_dag(f.leg, color, v) : irr_a(f.leg, color, v);
    return f.dagger ? irr_b_dag(f.leg, color, v) : irr_b(f.leg, color, v);
}

namespace {

constexpr int kEpsPerm[6][4] = {
    // alpha, beta, gamma, sign
    {0, 1, 2, +1}, {1, 2, 0, +1}, {2, 0, 1, +1},
    {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1},
};

Su3Vector number_total(int leg, const Su3Vector& v) {
    return v.scale_by([leg](const Su3State& s) { return Rational(leg_count(s, leg)); });
}

}  // namespace

Su3Vector apply_op(const InvariantOp& op, const Su3Vector& v) {
    Su3Vector out;
    switch (op.kind) {
        case InvariantOp::Kind::Number:
            return number_total(op.leg, v);
        case InvariantOp::Kind::Bilinear:
            for (int c = 0; c < 3; ++c)
                out += apply_factor(op.factors[0], c, apply_factor(op.factors[1], c, v));
            return out;
        case InvariantOp::Kind::TrilinearEps:
            // Epsilon monomials compose left-to-right: the leftmost factor
            // acts first.  This is the ordering under which the published
            // closed forms and their commutator identities close exactly
            // (for the same-leg annihilator/creator pair the two readings
            // differ by a correction term).
            for (const auto& perm : kEpsPerm) {
                Su3Vector term = apply_factor(op.factors[0], perm[0], v);
                term = apply_factor(op.factors[1], perm[1], term);
                term = apply_factor(op.factors[2], perm[2], term);
                if (perm[3] < 0)
                    out -= term;
                else
                    out += term;
            }
            return out;
    }
    throw std::logic_error("unreachable");
}

namespace {

Su3Vector apply_bilinear_dag(int i, int j, const Su3Vector& v) {
    Su3Vector out;
    for (int c = 0; c < 3; ++c) out += irr_a_dag(i, c, irr_b_dag(j, c, v));
    return out;
}

Su3Vector apply_eps_triple(Species sp, const Su3Vector& v) {
    Su3Vector out;
    for (const auto& perm : kEpsPerm) {
        Su3Vector term = sp == Species::A ? irr_a_dag(3, perm[2], v) : irr_b_dag(3, perm[2], v);
        term = sp == Species::A ? irr_a_dag(2, perm[1], term) : irr_b_dag(2, perm[1], term);
        term = sp == Species::A ? irr_a_dag(1, perm[0], term) : irr_b_dag(1, perm[0], term);
        if (perm[3] < 0)
            out -= term;
        else
            out += term;
    }
    return out;
}

}  // namespace

Su3Vector build_state_ordered(const Su3Label& label,
                              const std::vector<std::pair<int, int>>& order) {
    if (!label.valid()) throw std::invalid_argument("invalid label");
    Su3Vector v = Su3Vector::vacuum();
    for (int k = 0; k < label.abs_p(); ++k)
        v = apply_eps_triple(label.p >= 0 ? Species::A : Species::B, v);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int k = 0; k < label.l(it->first, it->second); ++k)
            v = apply_bilinear_dag(it->first, it->second, v);
    return v;
}

Su3Vector build_state(const Su3Label& label) {
    static const std::vector<std::pair<int, int>> canonical = {{1, 2}, {2, 1}, {1, 3},
                                                               {3, 1}, {2, 3}, {3, 2}};
    return build_state_ordered(label, canonical);
}

namespace {

using GR = GaussianRational;

// Gell-Mann matrices over the Gaussian rationals; index 7 holds the rescaled
// diagonal (1, 1, -2).
const std::array<std::array<std::array<GR, 3>, 3>, 8>& lambda_matrices() {
    static const auto table = [] {
        std::array<std::array<std::array<GR, 3>, 3>, 8> l{};
        const Rational one(1);
        l[0][0][1] = GR(one);
        l[0][1][0] = GR(one);
        l[1][0][1] = GR(Rational(0), Rational(-1));
        l[1][1][0] = GR(Rational(0), Rational(1));
        l[2][0][0] = GR(one);
        l[2][1][1] = GR(Rational(-1));
        l[3][0][2] = GR(one);
        l[3][2][0] = GR(one);
        l[4][0][2] = GR(Rational(0), Rational(-1));
        l[4][2][0] = GR(Rational(0), Rational(1));
        l[5][1][2] = GR(one);
        l[5][2][1] = GR(one);
        l[6][1][2] = GR(Rational(0), Rational(-1));
        l[6][2][1] = GR(Rational(0), Rational(1));
        l[7][0][0] = GR(one);
        l[7][1][1] = GR(one);
        l[7][2][2] = GR(Rational(-2));
        return l;
    }();
    return table;
}

template <typename Create, typename Annihilate>
Su3Vector matrix_bilinear(const std::array<std::array<GR, 3>, 3>& mat, bool conjugate,
                          const Su3Vector& v, Create&& create, Annihilate&& annihilate) {
    Su3Vector out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const GR entry = conjugate ? mat[r][c].conj() : mat[r][c];
            if (entry.is_zero()) continue;
            out += create(r, annihilate(c, v)) * entry;
        }
    return out;
}

Su3Vector gauss_leg_impl(int a, int leg, const Su3Vector& v, bool irreducible) {
    const auto& lam = lambda_matrices()[a - 1];
    const auto a_create = [&](int r, const Su3Vector& w) {
        return irreducible ? irr_a_dag(leg, r, w) : raw_create(leg, Species::A, r, w);
    };
    const auto a_ann = [&](int c, const Su3Vector& w) {
        return irreducible ? irr_a(leg, c, w) : raw_annihilate(leg, Species::A, c, w);
    };
    const auto b_create = [&](int r, const Su3Vector& w) {
        return irreducible ? irr_b_dag(leg, r, w) : raw_create(leg, Species::B, r, w);
    };
    const auto b_ann = [&](int c, const Su3Vector& w) {
        return irreducible ? irr_b(leg, c, w) : raw_annihilate(leg, Species::B, c, w);
    };
    Su3Vector out = matrix_bilinear(lam, false, v, a_create, a_ann);
    out -= matrix_bilinear(lam, true, v, b_create, b_ann);
    // E^a = a+ (lambda^a/2) a - b+ (lambda^a*/2) b; the 1/2 is harmless for
    // kernel checks but kept so Casimir weights come out right.
    return out * Rational(1, 2);
}

}  // namespace

Su3Vector gauss_leg_raw(int a, int leg, const Su3Vector& v) {
    return gauss_leg_impl(a, leg, v, false);
}

Su3Vector gauss_leg_irreducible(int a, int leg, const Su3Vector& v) {
    return gauss_leg_impl(a, leg, v, true);
}

Su3Vector gauss_total(int a, const Su3Vector& v) {
    Su3Vector out;
    for (int leg = 1; leg <= 3; ++leg) out += gauss_leg_raw(a, leg, v);
    return out;
}

Su3Vector casimir_leg(int leg, const Su3Vector& v) {
    Su3Vector out;
    for (int a = 1; a <= 7; ++a) out += gauss_leg_raw(a, leg, gauss_leg_raw(a, leg, v));
    // (lambda_8/2)^2 = (rescaled diagonal)^2 / 12
    out += gauss_leg_raw(8, leg, gauss_leg_raw(8, leg, v)) * Rational(1, 3);
    return out;
}

const Su3Vector& StateCache::get(const Su3Label& label) {
    auto key = label.as_tuple();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = states_.find(key);
        if (it != states_.end()) return it->second;
    }
    Su3Vector built = build_state(label);
    std::lock_guard<std::mutex> lock(mutex_);
    return states_.try_emplace(key, std::move(built)).first->second;
}

const Rational& StateCache::norm_sq(const Su3Label& label) {
    auto key = label.as_tuple();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = norms_.find(key);
        if (it != norms_.end()) return it->second;
    }
    const Su3Vector& v = get(label);
    GaussianRational n = inner(v, v);
    if (n.im != 0) throw std::logic_error("state norm has an imaginary part");
    std::lock_guard<std::mutex> lock(mutex_);
    return norms_.try_emplace(key, std::move(n.re)).first->second;
}

std::vector<Su3Label> labels_with_occupancy(const std::array<int, 3>& triplet_counts,
                                            const std::array<int, 3>& antitriplet_counts) {
    // n_i + p_plus = na_i, m_i + p_minus = nb_i, with sum(l_ij over j) = n_i.
    std::vector<Su3Label> out;
    const auto& na = triplet_counts;
    const auto& nb = antitriplet_counts;
    const int max_p = std::min({na[0], na[1], na[2]});
    const int max_q = std::min({nb[0], nb[1], nb[2]});
    for (int p = -max_q; p <= max_p; ++p) {
        const int pp = p > 0 ? p : 0;
        const int pm = p < 0 ? -p : 0;
        int n[4], m[4];
        bool ok = true;
        for (int leg = 1; leg <= 3; ++leg) {
            n[leg] = na[leg - 1] - pp;
            m[leg] = nb[leg - 1] - pm;
            if (n[leg] < 0 || m[leg] < 0) ok = false;
        }
        if (!ok) continue;
        // l12 + l13 = n1, l21 + l23 = n2, l31 + l32 = n3,
        // l21 + l31 = m1, l12 + l32 = m2, l13 + l23 = m3.
        for (int l12 = 0; l12 <= std::min(n[1], m[2]); ++l12) {
            const int l13 = n[1] - l12;
            const int l32 = m[2] - l12;
            if (l13 > m[3]) continue;
            const int l23 = m[3] - l13;
            if (l23 > n[2]) continue;
            const int l21 = n[2] - l23;
            const int l31 = n[3] - l32;
            if (l31 < 0 || l21 + l31 != m[1]) continue;
            out.push_back(Su3Label{l12, l21, l13, l31, l23, l32, p});
        }
    }
    return out;
}

std::vector<Su3Label> occupancy_sector(const Su3Label& label) {
    return labels_with_occupancy(
        {label.n1() + label.p_plus(), label.n2() + label.p_plus(), label.n3() + label.p_plus()},
        {label.m1() + label.p_minus(), label.m2() + label.p_minus(),
         label.m3() + label.p_minus()});
}

std::vector<std::pair<Su3Label, Rational>> decompose(const Su3Vector& v, StateCache& cache) {
    std::vector<std::pair<Su3Label, Rational>> out;
    if (v.empty()) return out;
    // Invariant monomials are homogeneous: every component shares the same
    // per-leg (a, b) occupancies, which pin down the candidate labels.
    const Su3State& first = v.terms().begin()->first;
    std::array<int, 3> na{}, nb{};
    for (int leg = 1; leg <= 3; ++leg) {
        na[leg - 1] = leg_count(first, leg, Species::A);
        nb[leg - 1] = leg_count(first, leg, Species::B);
    }
    std::vector<Su3Label> candidates;
    for (const auto& label : labels_with_occupancy(na, nb))
        if (!cache.get(label).empty()) candidates.push_back(label);
    // Basis states with equal occupancies are independent but not orthogonal,
    // so solve the (small) Gram system exactly instead of projecting.
    const std::size_t k = candidates.size();
    std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            GaussianRational g = inner(cache.get(candidates[i]), cache.get(candidates[j]));
            if (g.im != 0) throw std::logic_error("decompose: imaginary overlap");
            aug[i][j] = g.re;
        }
        GaussianRational b = inner(cache.get(candidates[i]), v);
        if (b.im != 0) throw std::logic_error("decompose: imaginary overlap");
        aug[i][k] = b.re;
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && aug[pivot][col] == 0) ++pivot;
        if (pivot == k) throw std::logic_error("decompose: dependent basis states");
        std::swap(aug[pivot], aug[col]);
        for (std::size_t row = 0; row < k; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            Rational factor = aug[row][col] / aug[col][col];
            for (std::size_t c = col; c <= k; ++c) aug[row][c] -= factor * aug[col][c];
        }
    }
    Su3Vector residual = v;
    for (std::size_t i = 0; i < k; ++i) {
        Rational coeff = aug[i][k] / aug[i][i];
        if (coeff == 0) continue;
        out.emplace_back(candidates[i], coeff);
        residual -= cache.get(candidates[i]) * coeff;
    }
    if (!residual.empty()) throw std::logic_error("decompose: vector outside the singlet span");
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace singlet::oracle
