#include "singlet/labels.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace singlet {

int Su2Label::n(int leg) const {
    switch (leg) {
        case 1: return n1();
        case 2: return n2();
        case 3: return n3();
    }
    throw std::invalid_argument("leg must be 1, 2 or 3");
}

bool su2_label_from_counts(int n1, int n2, int n3, Su2Label& out) {
    // n1 = l12+l31, n2 = l12+l23, n3 = l23+l31.
    const int total = n1 + n2 + n3;
    if (total % 2 != 0) return false;
    const int l12 = (n1 + n2 - n3) / 2;
    const int l23 = (n2 + n3 - n1) / 2;
    const int l31 = (n3 + n1 - n2) / 2;
    if (l12 < 0 || l23 < 0 || l31 < 0) return false;
    out = Su2Label{l12, l23, l31};
    return true;
}

std::vector<Su2Label> enumerate_su2(int n_max) {
    std::vector<Su2Label> out;
    const int l_max = n_max / 2;
    for (int sum = 0; sum <= l_max; ++sum)
        for (int l12 = 0; l12 <= sum; ++l12)
            for (int l23 = 0; l23 + l12 <= sum; ++l23)
                out.push_back(Su2Label{l12, l23, sum - l12 - l23});
    return out;
}

int Su3Label::l(int i, int j) const {
    if (i == 1 && j == 2) return l12;
    if (i == 2 && j == 1) return l21;
    if (i == 1 && j == 3) return l13;
    if (i == 3 && j == 1) return l31;
    if (i == 2 && j == 3) return l23;
    if (i == 3 && j == 2) return l32;
    throw std::invalid_argument("l(i,j) needs distinct legs in 1..3");
}

Su3Label& Su3Label::set_l(int i, int j, int value) {
    if (i == 1 && j == 2) l12 = value;
    else if (i == 2 && j == 1) l21 = value;
    else if (i == 1 && j == 3) l13 = value;
    else if (i == 3 && j == 1) l31 = value;
    else if (i == 2 && j == 3) l23 = value;
    else if (i == 3 && j == 2) l32 = value;
    else throw std::invalid_argument("set_l(i,j) needs distinct legs in 1..3");
    return *this;
}

int Su3Label::n(int leg) const {
    switch (leg) {
        case 1: return n1();
        case 2: return n2();
        case 3: return n3();
    }
    throw std::invalid_argument("leg must be 1, 2 or 3");
}

int Su3Label::m(int leg) const {
    switch (leg) {
        case 1: return m1();
        case 2: return m2();
        case 3: return m3();
    }
    throw std::invalid_argument("leg must be 1, 2 or 3");
}

bool operator<(const Su3Label& a, const Su3Label& b) {
    return std::make_tuple(a.weight(), a.p, a.l12, a.l21, a.l13, a.l31, a.l23, a.l32) <
           std::make_tuple(b.weight(), b.p, b.l12, b.l21, b.l13, b.l31, b.l23, b.l32);
}

IrrepPQ leg_irrep(const Su3Label& label, int leg) {
    IrrepPQ pq;
    pq.p = label.n(leg) + label.p_plus();
    pq.q = label.m(leg) + label.p_minus();
    return pq;
}

std::vector<Su3Label> enumerate_su3(int w_max) {
    std::vector<Su3Label> out;
    if (w_max < 0) return out;
    for (int w = 0; w <= w_max; ++w) {
        // w = 2*link_sum + 3*|p|
        for (int ap = w / 3; ap >= 0; --ap) {
            const int rest = w - 3 * ap;
            if (rest % 2 != 0) continue;
            const int sum = rest / 2;
            const int p_lo = ap == 0 ? 0 : -ap;
            for (int p = p_lo; p <= ap; p += ap == 0 ? 1 : 2 * ap) {
                for (int l12 = 0; l12 <= sum; ++l12)
                    for (int l21 = 0; l21 + l12 <= sum; ++l21)
                        for (int l13 = 0; l13 + l21 + l12 <= sum; ++l13)
                            for (int l31 = 0; l31 + l13 + l21 + l12 <= sum; ++l31)
                                for (int l23 = 0; l23 + l31 + l13 + l21 + l12 <= sum; ++l23) {
                                    const int l32 = sum - l12 - l21 - l13 - l31 - l23;
                                    out.push_back(Su3Label{l12, l21, l13, l31, l23, l32, p});
                                }
            }
        }
    }
    // Enumeration above is weight-major but (p, l...) order within a weight
    // shell needs the canonical comparator.
    std::sort(out.begin(), out.end());
    return out;
}

Su3Label conj_flip(const Su3Label& label) {
    return Su3Label{label.l21, label.l12, label.l31, label.l13, label.l32, label.l23, -label.p};
}

Su3Label cycle(const Su3Label& label) {
    // legs 1 -> 2 -> 3 -> 1, so l'_{sigma(i) sigma(j)} = l_{ij}.
    Su3Label out;
    out.p = label.p;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) out.set_l(next_leg(i), next_leg(j), label.l(i, j));
    return out;
}

}  // namespace singlet
