#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace singlet {

// ---------------------------------------------------------------------------
// SU(2): three legs coupled to a singlet, labelled by linking numbers
// l12, l23, l31.  Leg oscillator counts n_i = 2 j_i follow from those.
// ---------------------------------------------------------------------------
struct Su2Label {
    int l12 = 0;
    int l23 = 0;
    int l31 = 0;

    int n1() const { return l12 + l31; }
    int n2() const { return l12 + l23; }
    int n3() const { return l23 + l31; }
    int n(int leg) const;

    int link_sum() const { return l12 + l23 + l31; }
    // Total oscillator quanta of the unnormalized state.
    int weight() const { return 2 * link_sum(); }

    bool valid() const { return l12 >= 0 && l23 >= 0 && l31 >= 0; }

    friend auto operator<=>(const Su2Label&, const Su2Label&) = default;
};

// Inverse of the n_i <-> l map; returns false if the n-triple violates the
// parity/triangle constraints of a singlet.
bool su2_label_from_counts(int n1, int n2, int n3, Su2Label& out);

// All labels with n1+n2+n3 <= n_max, ordered by (weight, l12, l23, l31).
std::vector<Su2Label> enumerate_su2(int n_max);

// ---------------------------------------------------------------------------
// SU(3): six linking numbers l_ij (i != j) plus one signed baryon number p.
// ---------------------------------------------------------------------------
struct Su3Label {
    int l12 = 0;
    int l21 = 0;
    int l13 = 0;
    int l31 = 0;
    int l23 = 0;
    int l32 = 0;
    int p = 0;

    int abs_p() const { return p < 0 ? -p : p; }
    // Count of epsilon-a (p>=0 side) and epsilon-b (p<0 side) factors.
    int p_plus() const { return p > 0 ? p : 0; }
    int p_minus() const { return p < 0 ? -p : 0; }

    // l(i,j): linking number from leg i to leg j, 1-based legs.
    int l(int i, int j) const;
    Su3Label& set_l(int i, int j, int value);

    int n1() const { return l12 + l13; }
    int m1() const { return l21 + l31; }
    int n2() const { return l21 + l23; }
    int m2() const { return l12 + l32; }
    int n3() const { return l31 + l32; }
    int m3() const { return l13 + l23; }
    int n(int leg) const;
    int m(int leg) const;
    // Leg oscillator count N_i = n_i + m_i + |p|.
    int big_n(int leg) const { return n(leg) + m(leg) + abs_p(); }

    int link_sum() const { return l12 + l21 + l13 + l31 + l23 + l32; }
    int weight() const { return 2 * link_sum() + 3 * abs_p(); }

    bool valid() const {
        return l12 >= 0 && l21 >= 0 && l13 >= 0 && l31 >= 0 && l23 >= 0 && l32 >= 0;
    }

    // Canonical total order: (weight, p, l12, l21, l13, l31, l23, l32).
    friend bool operator==(const Su3Label&, const Su3Label&) = default;
    friend bool operator<(const Su3Label& a, const Su3Label& b);

    std::array<int, 7> as_tuple() const { return {l12, l21, l13, l31, l23, l32, p}; }
};

// Per-leg irrep labels (p_i, q_i) of the state carried by one leg.
struct IrrepPQ {
    int p = 0;
    int q = 0;
    friend bool operator==(const IrrepPQ&, const IrrepPQ&) = default;
};

IrrepPQ leg_irrep(const Su3Label& label, int leg);

// All labels with weight <= w_max in canonical order.
std::vector<Su3Label> enumerate_su3(int w_max);

// Symmetry operations of the basis.
//  conj_flip: swap the two oscillator species, transpose l_ij <-> l_ji, negate p.
//  cycle:     relabel legs 1 -> 2 -> 3 -> 1.
Su3Label conj_flip(const Su3Label& label);
Su3Label cycle(const Su3Label& label);

inline int next_leg(int leg) { return leg % 3 + 1; }
inline int prev_leg(int leg) { return (leg + 1) % 3 + 1; }

}  // namespace singlet
