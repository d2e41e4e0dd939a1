#pragma once

#include <string>
#include <vector>

#include "singlet/labels.hpp"
#include "singlet/ops.hpp"
#include "singlet/sqrt_rational.hpp"
#include "singlet/su3_engine.hpp"

// Previously published closed forms, evaluated verbatim.  The engine does not
// use these; the verification pass compares them against the oracle and files
// a discrepancy record wherever they differ from the exact value.
namespace singlet::published {

// Variant of the (1,2)-channel coefficient function whose first term carries
// the signed p instead of |p| (as printed in one of the two published
// versions of the formula).
Rational fbar_12_signed_p(const Su3Label& label);

// Restricted channel functions exactly as printed: the two subtraction terms
// of the l21 channel lack |p| in their denominators.
Rational fbar_restricted_printed(su3::RestrictedChannel which, const Su3Label& label);

// Published pure-baryon norm ((|p|+2)!)^3 / 8.
Rational norm_base_printed(int abs_p);

// Norm chain assembled from the printed pieces.
Rational norm_sq_printed(const Su3Label& label);

struct Coefficient {
    std::string formula;  // family id, e.g. "c1(12)", "j3(322)"
    Su3Label target;
    SqrtRational value;
    bool defined = true;  // false when the printed expression divides by zero
    std::string issue;    // or takes the square root of a negative ratio
};

// Published normalized actions for the base channels: families c, d, e, f,
// g/h, i/j, m/n, plus k/l obtained from i/j by the printed species-swap rule.
// Returns an empty list for operators without a published normalized form.
std::vector<Coefficient> act_printed(const InvariantOp& op, const Su3Label& label);

struct Su2Coefficient {
    std::string formula;
    Su2Label target;
    SqrtRational value;
};

// Published SU(2) table rows for the printed operators (a+(3).b+(i)),
// (a+(3).a(1)) and (a(3).b(1)); species B denotes the conjugated doublet.
std::vector<Su2Coefficient> act_printed_su2(const InvariantOp& op, const Su2Label& label);

}  // namespace singlet::published
