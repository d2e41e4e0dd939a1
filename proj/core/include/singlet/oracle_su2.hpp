#pragma once

#include <map>
#include <vector>

#include "singlet/fock.hpp"
#include "singlet/labels.hpp"
#include "singlet/ops.hpp"

namespace singlet::oracle {

// SU(2) sibling of the SU(3) oracle: one oscillator doublet per leg (6 modes),
// no multiplicity problem, so the raw oscillators are already the right ones.
// Species B in operator expressions denotes the epsilon-conjugated doublet.
inline constexpr int kSu2Modes = 6;
using Su2Vector = fock::Vector<kSu2Modes>;
using Su2State = Su2Vector::state_type;

int su2_mode(int leg, int color);  // colors 0..1
int su2_leg_count(const Su2State& s, int leg);

Su2Vector su2_create(int leg, int color, const Su2Vector& v);
Su2Vector su2_annihilate(int leg, int color, const Su2Vector& v);

// Factor application with the tilde convention: (b, dagger, leg) acts as
// eps_{alpha beta} a^(dagger)_{leg, beta} summed against the free color.
Su2Vector apply_factor_su2(const Factor& f, int color, const Su2Vector& v);
Su2Vector apply_op_su2(const InvariantOp& op, const Su2Vector& v);

Su2Vector build_state_su2(const Su2Label& label);

Su2Vector su2_gauss_total(int a, const Su2Vector& v);  // a = 1..3
Su2Vector su2_casimir_leg(int leg, const Su2Vector& v);

class Su2StateCache {
public:
    const Su2Vector& get(const Su2Label& label);
    const Rational& norm_sq(const Su2Label& label);

private:
    std::map<std::array<int, 3>, Su2Vector> states_;
    std::map<std::array<int, 3>, Rational> norms_;
};

std::vector<std::pair<Su2Label, Rational>> decompose_su2(const Su2Vector& v, Su2StateCache& cache);

}  // namespace singlet::oracle
