#include "singlet/su2_engine.hpp"

#include <stdexcept>

namespace singlet::su2 {

Rational norm_sq(const Su2Label& label) {
    if (!label.valid()) throw std::invalid_argument("invalid SU(2) label");
    Integer n = factorial(label.l12) * factorial(label.l23) * factorial(label.l31) *
                factorial(label.link_sum() + 1);
    return Rational(n);
}

namespace {

bool is_cyclic(int i, int j) {
    return (i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1);
}

int third_leg(int i, int j) { return 6 - i - j; }

int link_of(const Su2Label& l, int i, int j) {
    // cyclic pairs only
    if (i == 1 && j == 2) return l.l12;
    if (i == 2 && j == 3) return l.l23;
    if (i == 3 && j == 1) return l.l31;
    throw std::logic_error("link_of: pair is not cyclic");
}

Su2Label bump(const Su2Label& l, int i, int j, int delta) {
    Su2Label out = l;
    if (i == 1 && j == 2) out.l12 += delta;
    else if (i == 2 && j == 3) out.l23 += delta;
    else if (i == 3 && j == 1) out.l31 += delta;
    else throw std::logic_error("bump: pair is not cyclic");
    return out;
}

}  // namespace

Su2CanonicalOp canonicalize_su2(const InvariantOp& op) {
    if (op.kind == InvariantOp::Kind::Number) return {Su2CanonicalOp::Family::Num, op.leg, op.leg, 1};
    if (op.kind != InvariantOp::Kind::Bilinear)
        throw std::invalid_argument("SU(2) has no epsilon-trilinear invariants");
    Factor f = op.factors[0];
    Factor g = op.factors[1];
    if (f.dagger == g.dagger) {
        if (f.species == g.species)
            throw std::invalid_argument("bilinear " + print_op(op) +
                                        " is not an SU(2) invariant contraction");
        // (a+ . ~a+) and (a . ~a) families; the tilde slot carries species B,
        // and (~a_x . a_y) = (a_y . ~a_x).
        if (f.species == Species::B) std::swap(f, g);
        return {f.dagger ? Su2CanonicalOp::Family::Raise : Su2CanonicalOp::Family::Lower, f.leg,
                g.leg, 1};
    }
    // Mixed dagger: either species pair reduces to (a+_i . a_j), since
    // (~a+ . ~a) contracts to the plain pair.
    if (f.species != g.species)
        throw std::invalid_argument("bilinear " + print_op(op) +
                                    " is not an SU(2) invariant contraction");
    if (!f.dagger) {
        if (f.leg == g.leg)
            throw CatalogMiss("bilinear " + print_op(op) +
                              " is not normal-ordered; only the dagger-first form has a "
                              "closed-form action");
        std::swap(f, g);
    }
    if (f.leg == g.leg) return {Su2CanonicalOp::Family::Num, f.leg, g.leg, 1};
    return {Su2CanonicalOp::Family::Hop, f.leg, g.leg, 1};
}

std::vector<Transition> act(const InvariantOp& op, const Su2Label& label) {
    if (!label.valid()) throw std::invalid_argument("invalid SU(2) label");
    const Su2CanonicalOp c = canonicalize_su2(op);
    std::vector<Transition> out;
    const int sum = label.link_sum();
    switch (c.family) {
        case Su2CanonicalOp::Family::Num: {
            const int n = label.n(c.i);
            if (n != 0) out.push_back({label, SqrtRational::from_rational(Rational(n))});
            return out;
        }
        case Su2CanonicalOp::Family::Raise: {
            if (c.i == c.j) return out;  // (a+ . ~a+) on one leg vanishes identically
            const bool cyc = is_cyclic(c.i, c.j);
            const int i = cyc ? c.i : c.j;
            const int j = cyc ? c.j : c.i;
            const int lc = link_of(label, i, j);
            const Rational radicand = Rational((lc + 1) * (sum + 2));
            out.push_back({bump(label, i, j, +1), SqrtRational(cyc ? 1 : -1, radicand)});
            return out;
        }
        case Su2CanonicalOp::Family::Lower: {
            if (c.i == c.j) return out;
            const bool cyc = is_cyclic(c.i, c.j);
            const int i = cyc ? c.i : c.j;
            const int j = cyc ? c.j : c.i;
            const int lc = link_of(label, i, j);
            if (lc == 0) return out;
            const Rational radicand = Rational(lc * (sum + 1));
            out.push_back({bump(label, i, j, -1), SqrtRational(cyc ? 1 : -1, radicand)});
            return out;
        }
        case Su2CanonicalOp::Family::Hop: {
            // (a+_i . a_j) annihilates one quantum on leg j out of the link
            // that does not touch leg i, and recreates it on the link
            // between the third leg and leg i.
            const int t = third_leg(c.i, c.j);
            int lo_i, lo_j, hi_i, hi_j;
            if (is_cyclic(c.i, c.j)) {
                lo_i = c.j; lo_j = t;  // lowers l_{j t}
                hi_i = t;  hi_j = c.i; // raises l_{t i}
            } else {
                lo_i = t;  lo_j = c.j; // lowers l_{t j}
                hi_i = c.i; hi_j = t;  // raises l_{i t}
            }
            const int down = link_of(label, lo_i, lo_j);
            if (down == 0) return out;
            const int up = link_of(label, hi_i, hi_j);
            Su2Label target = bump(bump(label, lo_i, lo_j, -1), hi_i, hi_j, +1);
            out.push_back({target, SqrtRational(-1, Rational(down * (up + 1)))});
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace singlet::su2
