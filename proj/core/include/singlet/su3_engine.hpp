#pragma once

#include <vector>

#include "singlet/labels.hpp"
#include "singlet/ops.hpp"
#include "singlet/rational.hpp"
#include "singlet/sqrt_rational.hpp"

namespace singlet::su3 {

struct Transition {
    Su3Label target;
    SqrtRational coeff;
    friend bool operator==(const Transition&, const Transition&) = default;
};

// Action on the unnormalized basis: coefficients are plain rationals.
struct RatTransition {
    Su3Label target;
    Rational coeff;
};

// The coefficient function f1bar for the (1,2) channel, evaluated at the
// label's own quantum numbers (all of n_i, m_i shift with l12).  Vanishes at
// l12 = 0.
Rational fbar_12(const Su3Label& label);

// The five restricted channel variants used by the norm recursion, evaluated
// with the earlier channels already peeled to zero.  The |p|-dependence of
// the two subtraction terms in the l21 channel follows the species-swap
// symmetry and the numeric cross-checks (see the discrepancy ledger).
enum class RestrictedChannel : std::uint8_t { L21, L13, L31, L23, L32 };
Rational fbar_restricted(RestrictedChannel which, const Su3Label& label);

// Norm of the pure-baryon state (all l = 0): P! (P+1)! (P+2)! / 2.
Rational norm_base(int abs_p);

// <l,p|l,p>_u via the channel-by-channel recursion.
Rational norm_sq(const Su3Label& label);

// Complete transition list of an invariant operator on the unnormalized
// basis.  Throws CatalogMiss for operators without a closed form.
std::vector<RatTransition> unnormalized_act(const InvariantOp& op, const Su3Label& label);

// Action on the normalized basis: each coefficient is the unnormalized one
// times sqrt(norm ratio).
std::vector<Transition> act(const InvariantOp& op, const Su3Label& label);

// (A B)|label> and [A, B]|label> on the unnormalized basis, composed from the
// closed-form transition lists.
std::vector<RatTransition> unnormalized_compose(const InvariantOp& outer, const InvariantOp& inner,
                                                const Su3Label& label);
std::vector<RatTransition> unnormalized_commutator(const InvariantOp& a, const InvariantOp& b,
                                                   const Su3Label& label);

void sort_transitions(std::vector<RatTransition>& ts);
void sort_transitions(std::vector<Transition>& ts);

}  // namespace singlet::su3
