#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singlet {

// Parse failure with the offending position in the input text.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg) + " at position " + std::to_string(pos)), position(pos) {}
};

// Operator is outside the closed-form catalog (no printed action and no
// symmetry image of one); callers may fall back to the numeric path.
struct CatalogMiss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Species : std::uint8_t { A, B };

struct Factor {
    Species species = Species::A;
    bool dagger = false;
    int leg = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
};

// A color-contracted monomial in the oscillator multiplets:
//   Bilinear      f1 . f2          (delta contraction)
//   TrilinearEps  eps(f1, f2, f3)  (epsilon contraction, factor order kept)
//   Number        N(leg)           (total leg occupation)
// For SU(2) callers, species B denotes the epsilon-conjugated doublet.
struct InvariantOp {
    enum class Kind : std::uint8_t { Bilinear, TrilinearEps, Number };
    Kind kind = Kind::Bilinear;
    std::vector<Factor> factors;  // 2 for Bilinear, 3 for TrilinearEps, 0 for Number
    int leg = 0;                  // Number only

    static InvariantOp bilinear(Factor a, Factor b) { return {Kind::Bilinear, {a, b}, 0}; }
    static InvariantOp trilinear(Factor a, Factor b, Factor c) {
        return {Kind::TrilinearEps, {a, b, c}, 0};
    }
    static InvariantOp number(int leg) { return {Kind::Number, {}, leg}; }

    friend bool operator==(const InvariantOp&, const InvariantOp&) = default;
};

// Grammar (whitespace-insensitive):
//   expr      := bilinear | trilinear | number
//   bilinear  := factor "." factor
//   trilinear := "eps(" factor "," factor "," factor ")"
//   number    := "N(" leg ")"
//   factor    := ("a"|"b") ("+" | "") "(" leg ")"
//   leg       := "1" | "2" | "3"
// "+" marks a dagger.
InvariantOp parse_op(const std::string& text);
std::string print_op(const InvariantOp& op);

// Symmetry action on operators.
InvariantOp conj_flip(const InvariantOp& op);
InvariantOp cycle(const InvariantOp& op);

// Hermitian conjugate written as a catalog-style monomial: factor order
// reversed, daggers toggled.  Epsilon trilinears pick up a sign from the
// index relabelling: op^dagger = sign * result.
std::pair<InvariantOp, int> adjoint_op(const InvariantOp& op);

// Word in the symmetry group Z3 x Z2: `cycles` applications of cycle
// followed by an optional conj_flip.
struct SymmetryWord {
    int cycles = 0;  // 0..2
    bool flip = false;
};
InvariantOp apply_word(const SymmetryWord& w, const InvariantOp& op);

// The SU(3) closed-form catalog: every operator whose action the engine
// evaluates analytically, reduced to a printed base plus a symmetry word and
// a sign from epsilon-slot reordering.
enum class Su3Base : std::uint8_t {
    CreatePair,      // a+(1).b+(2)
    CreatePairZero,  // a+(i).b+(i), identically zero on the singlet space
    AnnihilatePair,  // a(1).b(2)
    AnnihilatePairZero,
    MoveA,           // a+(1).a(2)
    MoveAAdj,        // a+(2).a(1)
    NumberA,         // a+(i).a(i)
    NumberB,         // b+(i).b(i)
    NumberTotal,     // N(i)
    EpsMixedRaise,   // eps(a+(3), b(2), a+(2))
    EpsBBRaise,      // eps(b(3), b(2), a+(2))
    EpsAAALower,     // eps(a(1), a(2), a(3))
    EpsAAARaise,     // eps(a+(1), a+(2), a+(3))
};

struct CanonicalForm {
    Su3Base base;
    SymmetryWord word;
    // Sign from reordering epsilon slots across commuting factors; 0 when the
    // operator vanishes identically (repeated slot under the epsilon).
    int sign = 1;
    int leg = 0;  // number-operator and same-leg-pair families only
};

// Reduce op to its catalog base; throws CatalogMiss when the operator has no
// printed closed form (callers can still evaluate it numerically).
CanonicalForm canonicalize_su3(const InvariantOp& op);

// Rebuild the operator a canonical form describes (sign ignored); used by the
// round-trip tests.
InvariantOp realize_su3(const CanonicalForm& form);

// Every operator the analytic SU(3) engine covers, in a fixed order.
std::vector<InvariantOp> su3_catalog();

}  // namespace singlet
