#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "singlet/fock.hpp"
#include "singlet/labels.hpp"
#include "singlet/ops.hpp"

namespace singlet::oracle {

// Brute-force SU(3) construction: three legs, each carrying a raw oscillator
// triplet and anti-triplet (18 modes total).  Singlet states are built from
// irreducible oscillators (the k+-corrected composites) acting inside the
// ordinary Fock space; all arithmetic is exact.
inline constexpr int kSu3Modes = 18;
using Su3Vector = fock::Vector<kSu3Modes>;
using Su3State = Su3Vector::state_type;

// legs 1..3, colors 0..2
int su3_mode(int leg, Species species, int color);
int leg_count(const Su3State& s, int leg, Species species);
inline int leg_count(const Su3State& s, int leg) {
    return leg_count(s, leg, Species::A) + leg_count(s, leg, Species::B);
}

// Raw oscillator actions.
Su3Vector raw_create(int leg, Species sp, int color, const Su3Vector& v);
Su3Vector raw_annihilate(int leg, Species sp, int color, const Su3Vector& v);

// Per-leg Sp(2,R) multiplicity operators built from raw oscillators.
Su3Vector k_plus(int leg, const Su3Vector& v);
Su3Vector k_minus(int leg, const Su3Vector& v);
Su3Vector k_zero(int leg, const Su3Vector& v);

// Irreducible oscillators: creation as printed (the 1/(n+m+1) factor acts
// leftmost, i.e. on the produced component), annihilation as the exact
// adjoint under the weighted Fock inner product.
Su3Vector irr_a_dag(int leg, int color, const Su3Vector& v);
Su3Vector irr_b_dag(int leg, int color, const Su3Vector& v);
Su3Vector irr_a(int leg, int color, const Su3Vector& v);
Su3Vector irr_b(int leg, int color, const Su3Vector& v);

Su3Vector apply_factor(const Factor& f, int color, const Su3Vector& v);

// A parsed invariant operator applied factor-by-factor (rightmost first) with
// the appropriate color contraction.
Su3Vector apply_op(const InvariantOp& op, const Su3Vector& v);

// Unnormalized basis state; bilinear factors applied in canonical order.
Su3Vector build_state(const Su3Label& label);

// Same state with the six bilinear applications permuted (order-independence
// checks); `order` lists (i, j) leg pairs.
Su3Vector build_state_ordered(const Su3Label& label,
                              const std::vector<std::pair<int, int>>& order);

// Gauss-law generators summed over legs, from raw oscillator bilinears.
// a = 1..7 are the usual generator indices; a = 8 is rescaled by sqrt(3)
// (diagonal charges 1, 1, -2) to stay rational, which preserves its kernel.
Su3Vector gauss_total(int a, const Su3Vector& v);

// Same generator built from irreducible oscillators, single leg.
Su3Vector gauss_leg_irreducible(int a, int leg, const Su3Vector& v);
Su3Vector gauss_leg_raw(int a, int leg, const Su3Vector& v);

// Quadratic Casimir of one leg, exact (includes the 1/12 weight of the
// rescaled eighth generator).
Su3Vector casimir_leg(int leg, const Su3Vector& v);

// Cached builder for repeated validation passes; safe for concurrent use
// (validation fans out over operators with a shared cache).
class StateCache {
public:
    const Su3Vector& get(const Su3Label& label);
    const Rational& norm_sq(const Su3Label& label);

private:
    std::mutex mutex_;
    std::map<std::array<int, 7>, Su3Vector> states_;
    std::map<std::array<int, 7>, Rational> norms_;
};

// All valid labels whose states carry the given per-leg (triplet,
// anti-triplet) occupancies; sectors with more than one member are exactly
// the non-orthogonal ones.
std::vector<Su3Label> labels_with_occupancy(const std::array<int, 3>& triplet_counts,
                                            const std::array<int, 3>& antitriplet_counts);
std::vector<Su3Label> occupancy_sector(const Su3Label& label);

// Exact decomposition of v over unnormalized basis states, solving the
// sector Gram system so degenerate (non-orthogonal) sectors come out right.
// Throws when a nonzero residual remains (v outside the singlet span).
std::vector<std::pair<Su3Label, Rational>> decompose(const Su3Vector& v, StateCache& cache);

}  // namespace singlet::oracle
