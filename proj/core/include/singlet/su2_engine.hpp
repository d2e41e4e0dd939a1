#pragma once

#include <vector>

#include "singlet/labels.hpp"
#include "singlet/ops.hpp"
#include "singlet/rational.hpp"
#include "singlet/sqrt_rational.hpp"

namespace singlet::su2 {

struct Transition {
    Su2Label target;
    SqrtRational coeff;
    friend bool operator==(const Transition&, const Transition&) = default;
};

// <l|l>_u = l12! l23! l31! (l12+l23+l31+1)!
Rational norm_sq(const Su2Label& label);

// The SU(2) invariant operators reduce to four families; species B in the
// expression denotes the epsilon-conjugated doublet.
//   Num(i)      N(i) or a+(i).a(i)
//   Raise(i,j)  a+(i).b+(j)   -> l_{ij} + 1
//   Hop(i,j)    a+(i).a(j)    -> moves one quantum from leg j to leg i
//   Lower(i,j)  a(i).b(j)     -> l_{ij} - 1
struct Su2CanonicalOp {
    enum class Family : std::uint8_t { Num, Raise, Hop, Lower };
    Family family;
    int i = 0;
    int j = 0;
    int sign = 1;
};

Su2CanonicalOp canonicalize_su2(const InvariantOp& op);

// Closed-form action on the normalized basis; exact coefficients with the
// oracle-validated signs.  Zero-coefficient transitions are dropped.
std::vector<Transition> act(const InvariantOp& op, const Su2Label& label);

}  // namespace singlet::su2
