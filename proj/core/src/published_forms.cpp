#include "singlet/published_forms.hpp"

#include <stdexcept>

namespace singlet::published {

namespace {

Rational rat(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Rational fbar_12_signed_p(const Su3Label& L) {
    if (L.l12 <= 0) return 0;
    const int N1 = L.big_n(1);
    const int N2 = L.big_n(2);
    Rational term1 =
        rat(N1 + 2, N1 + 1) * Rational((L.n1() + L.m2() - L.l12 + L.p + 1) * L.l12);
    Rational term2 = rat(L.l32 * (L.l31 + 1) * L.l12, N1 + 1) * rat(N2 + 1 - L.l21, N2 + 1);
    Rational term3 = rat(L.l23 * (L.l13 + 1) * L.l12, N1 + 1) * rat(N1 + 1 - L.l21, N2 + 1);
    return term1 - term2 - term3;
}

Rational fbar_restricted_printed(su3::RestrictedChannel which, const Su3Label& L) {
    if (which != su3::RestrictedChannel::L21) return su3::fbar_restricted(which, L);
    if (L.l21 <= 0) return 0;
    const int ap = L.abs_p();
    const int base = L.l21 + L.l13 + L.l31 + ap;
    Rational t1 = rat(base + 2, base + 1) * Rational((L.l21 + L.l31 + L.l23 + ap + 1) * L.l21);
    Rational t2 = rat(L.l21 * L.l23 * (L.l13 + 1), L.l21 + L.l13 + L.l31 + 1);
    Rational t3 = rat(L.l21 * L.l32 * (L.l31 + 1), L.l21 + L.l23 + L.l32 + 1);
    return t1 - t2 - t3;
}

Rational norm_base_printed(int abs_p) {
    Integer f = factorial(abs_p + 2);
    Rational r(f * f * f, 8);
    r.canonicalize();
    return r;
}

Rational norm_sq_printed(const Su3Label& label) {
    Rational s = 1;
    Su3Label cur = label;
    for (; cur.l12 > 0; --cur.l12) s *= su3::fbar_12(cur);
    for (; cur.l21 > 0; --cur.l21) s *= fbar_restricted_printed(su3::RestrictedChannel::L21, cur);
    for (; cur.l13 > 0; --cur.l13) s *= fbar_restricted_printed(su3::RestrictedChannel::L13, cur);
    for (; cur.l31 > 0; --cur.l31) s *= fbar_restricted_printed(su3::RestrictedChannel::L31, cur);
    for (; cur.l23 > 0; --cur.l23) s *= fbar_restricted_printed(su3::RestrictedChannel::L23, cur);
    for (; cur.l32 > 0; --cur.l32) s *= fbar_restricted_printed(su3::RestrictedChannel::L32, cur);
    return s * norm_base_printed(label.abs_p());
}

namespace {

using su3::RestrictedChannel;

// Restricted channel function with that channel's own argument bumped.
Rational rfp(RestrictedChannel ch, const Su3Label& L, int bump) {
    Su3Label x = L;
    switch (ch) {
        case RestrictedChannel::L21: x.l21 += bump; break;
        case RestrictedChannel::L13: x.l13 += bump; break;
        case RestrictedChannel::L31: x.l31 += bump; break;
        case RestrictedChannel::L23: x.l23 += bump; break;
        case RestrictedChannel::L32: x.l32 += bump; break;
    }
    return fbar_restricted_printed(ch, x);
}

Rational fbar12_at(const Su3Label& L, int bump) {
    Su3Label x = L;
    x.l12 += bump;
    return su3::fbar_12(x);
}

// General (1,2)-channel function with the listed links zeroed first.
Rational fbar12_zeroed(const Su3Label& L) {
    Su3Label x = L;
    x.l21 = 0;
    x.l13 = 0;
    x.l31 = 0;
    return su3::fbar_12(x);
}

Rational cube(int n) { return Rational(n) * Rational(n) * Rational(n); }

struct Builder {
    const Su3Label& L;
    std::vector<Coefficient> out = {};

    // value = prefactor * sqrt(num / den); skipped when the prefactor
    // vanishes, flagged when the printed ratio is undefined or negative.
    void add(const std::string& formula, const Su3Label& target, const Rational& prefactor,
             const Rational& num, const Rational& den) {
        if (prefactor == 0) return;
        Coefficient c;
        c.formula = formula;
        c.target = target;
        if (den == 0) {
            c.defined = false;
            c.issue = "printed ratio divides by zero";
        } else if (num / den < 0) {
            c.defined = false;
            c.issue = "printed ratio is negative under the square root";
        } else {
            c.value = SqrtRational::scaled_sqrt(prefactor, num / den);
        }
        out.push_back(std::move(c));
    }
};

std::vector<Coefficient> printed_create_pair(const Su3Label& L) {
    Builder b{L};
    Su3Label t = L;
    t.l12 += 1;
    b.add("c1(12)", t, 1, fbar12_at(L, +1), 1);
    return std::move(b.out);
}

std::vector<Coefficient> printed_move_a(const Su3Label& L) {
    Builder b{L};
    const int N2 = L.big_n(2);
    {
        Su3Label t = L;
        t.l13 += 1;
        t.l23 -= 1;
        Rational pre = rat(L.l23 * (L.n2() + L.m2() + L.abs_p() - L.l12 + 1), N2 + 1);
        b.add("d1(12)", t, pre, rfp(RestrictedChannel::L13, L, +1), rfp(RestrictedChannel::L23, L, 0));
    }
    {
        Su3Label t = L;
        t.l12 += 1;
        t.l21 -= 1;
        t.l31 += 1;
        t.l32 -= 1;
        Rational pre = rat(-L.l32 * L.l21, N2 + 1);
        b.add("d2(12)", t, pre, fbar12_at(L, +1) * rfp(RestrictedChannel::L31, L, +1),
              rfp(RestrictedChannel::L21, L, 0) * rfp(RestrictedChannel::L32, L, 0));
    }
    return std::move(b.out);
}

std::vector<Coefficient> printed_move_b(const Su3Label& L) {
    Builder b{L};
    const int N2 = L.big_n(2);
    {
        Su3Label t = L;
        t.l31 += 1;
        t.l32 -= 1;
        Rational pre = rat(L.l32 * (L.n2() + L.m2() + L.abs_p() - L.l21 + 1), N2 + 1);
        b.add("e1(12)", t, pre, rfp(RestrictedChannel::L31, L, +1), rfp(RestrictedChannel::L32, L, 0));
    }
    {
        Su3Label t = L;
        t.l21 += 1;
        t.l12 -= 1;
        t.l13 += 1;
        t.l23 -= 1;
        Rational pre = rat(-L.l23 * L.l12, N2 + 1);
        b.add("e2(12)", t, pre, rfp(RestrictedChannel::L21, L, +1) * rfp(RestrictedChannel::L13, L, +1),
              fbar12_at(L, 0) * rfp(RestrictedChannel::L23, L, 0));
    }
    return std::move(b.out);
}

std::vector<Coefficient> printed_annihilate_pair(const Su3Label& L) {
    Builder b{L};
    const int N1 = L.big_n(1);
    const int N2 = L.big_n(2);
    {
        Su3Label t = L;
        t.l12 -= 1;
        if (L.l12 > 0) b.add("f1(12)", t, 1, fbar12_at(L, 0), 1);
    }
    {
        Su3Label t = L;
        t.l21 -= 1;
        t.l23 += 1;
        t.l32 -= 1;
        t.l31 += 1;
        t.l13 -= 1;
        Rational pre = Rational(-L.l32 * L.l13 * L.l21) * rat(N1 + N2 + 3 - L.l21, (N1 + 1) * (N2 + 1));
        b.add("f2(12)", t, pre, rfp(RestrictedChannel::L23, L, +1) * rfp(RestrictedChannel::L31, L, +1),
              rfp(RestrictedChannel::L21, L, 0) * rfp(RestrictedChannel::L32, L, 0) *
                  rfp(RestrictedChannel::L13, L, 0));
    }
    {
        Su3Label t = L;
        t.l21 += 1;
        t.l12 -= 2;
        t.l13 += 1;
        t.l31 -= 1;
        t.l32 += 1;
        t.l23 -= 1;
        Rational pre = rat(L.l23 * L.l31 * L.l12 * (L.l12 - 1), (N1 + 1) * (N2 + 1));
        b.add("f3(12)", t, pre,
              rfp(RestrictedChannel::L32, L, +1) * rfp(RestrictedChannel::L13, L, +1) *
                  rfp(RestrictedChannel::L21, L, 0),
              fbar12_at(L, 0) * fbar12_at(L, -1) * rfp(RestrictedChannel::L31, L, 0) *
                  rfp(RestrictedChannel::L23, L, 0));
    }
    return std::move(b.out);
}

std::vector<Coefficient> printed_eps_mixed(const Su3Label& L) {
    Builder b{L};
    const int ap = L.abs_p();
    if (L.p >= 0) {
        Su3Label t = L;
        t.l12 -= 1;
        t.p += 1;
        b.add("g1(322)", t, L.l12, cube(ap + 3), fbar12_at(L, 0));
        return std::move(b.out);
    }
    {
        Su3Label t = L;
        t.l31 += 1;
        t.l23 += 1;
        t.p += 1;
        b.add("h1(322)", t, ap + L.l12,
              rfp(RestrictedChannel::L31, L, +1) * rfp(RestrictedChannel::L23, L, +1), cube(ap + 2));
    }
    {
        Su3Label t = L;
        t.l12 -= 1;
        t.l21 += 1;
        t.l13 += 1;
        t.l32 += 1;
        t.p += 1;
        b.add("h2(322)", t, L.l12,
              rfp(RestrictedChannel::L21, L, +1) * rfp(RestrictedChannel::L13, L, +1) *
                  rfp(RestrictedChannel::L32, L, +1),
              cube(ap + 2) * fbar12_zeroed(L));
    }
    return std::move(b.out);
}

std::vector<Coefficient> printed_eps_bb(const Su3Label& L) {
    Builder b{L};
    const int ap = L.abs_p();
    const int N3 = L.big_n(3);
    if (L.p >= 0) {
        {
            Su3Label t = L;
            t.l12 -= 1;
            t.l21 += 1;
            t.l23 -= 1;
            t.l31 -= 1;
            t.p += 1;
            Rational pre = rat(-L.l12 * L.l23 * L.l31, N3 + 1);
            b.add("i1(322)", t, pre, rfp(RestrictedChannel::L21, L, +1) * cube(ap + 3),
                  fbar12_at(L, 0) * rfp(RestrictedChannel::L23, L, 0) *
                      rfp(RestrictedChannel::L31, L, 0));
        }
        {
            Su3Label t = L;
            t.l13 -= 1;
            t.l32 -= 1;
            t.p += 1;
            Rational pre = Rational(-L.l13 * L.l32) * rat(N3 + 2, N3 + 1);
            b.add("i2(322)", t, pre, cube(ap + 3),
                  rfp(RestrictedChannel::L13, L, 0) * rfp(RestrictedChannel::L32, L, 0));
        }
        return std::move(b.out);
    }
    {
        Su3Label t = L;
        t.l21 += 1;
        t.p += 1;
        Rational pre = Rational(L.l12 * (L.l13 + 1) * (L.l32 + 1)) -
                       rat(N3 + 2, N3 + 1) * Rational(L.l13 * L.l32 * (L.l12 + 1)) -
                       rat((ap + L.l12) * (N3 - L.l23 + 1) * (N3 - L.l31 + 1), N3 + 1);
        b.add("j1(322)", t, pre, rfp(RestrictedChannel::L21, L, +1), cube(ap + 2));
    }
    {
        Su3Label t = L;
        t.l13 -= 1;
        t.l31 += 1;
        t.l32 -= 1;
        t.l23 += 1;
        t.l12 += 1;
        t.p += 1;
        Rational pre = Rational(-L.l13 * L.l32) * rat(N3 + 2 * ap + L.l12 + 2 - ap, N3 + 1);
        b.add("j2(322)", t, pre,
              rfp(RestrictedChannel::L31, L, +1) * rfp(RestrictedChannel::L23, L, +1) *
                  fbar12_at(L, +1),
              rfp(RestrictedChannel::L13, L, 0) * rfp(RestrictedChannel::L32, L, 0) * cube(ap + 2));
    }
    {
        Su3Label t = L;
        t.l12 -= 1;
        t.l21 += 2;
        t.l23 -= 1;
        t.l32 += 1;
        t.l13 += 1;
        t.l31 -= 1;
        t.p += 1;
        Rational pre = rat(-L.l12 * L.l23 * L.l31, N3 + 1);
        b.add("j3(322)", t, pre,
              rfp(RestrictedChannel::L21, L, +2) * rfp(RestrictedChannel::L21, L, +1) *
                  rfp(RestrictedChannel::L13, L, +1) * rfp(RestrictedChannel::L32, L, +1),
              fbar12_at(L, 0) * rfp(RestrictedChannel::L23, L, 0) *
                  rfp(RestrictedChannel::L31, L, 0) * cube(ap + 3));
    }
    return std::move(b.out);
}

std::vector<Coefficient> printed_eps_aaa(const Su3Label& L) {
    Builder b{L};
    const int ap = L.abs_p();
    if (L.p >= 0) {
        Su3Label t = L;
        t.p += 1;
        b.add("n1(123)", t, 1, cube(ap + 3), 1);
        return std::move(b.out);
    }
    {
        Su3Label t = L;
        t.l12 += 1;
        t.l23 += 1;
        t.l31 += 1;
        t.p += 1;
        b.add("m1(123)", t, 1,
              fbar12_at(L, +1) * rfp(RestrictedChannel::L23, L, +1) *
                  rfp(RestrictedChannel::L31, L, +1),
              cube(ap + 2));
    }
    {
        Su3Label t = L;
        t.l21 += 1;
        t.l32 += 1;
        t.l13 += 1;
        t.p += 1;
        b.add("m2(123)", t, 1,
              rfp(RestrictedChannel::L21, L, +1) * rfp(RestrictedChannel::L32, L, +1) *
                  rfp(RestrictedChannel::L13, L, +1),
              cube(ap + 2));
    }
    return std::move(b.out);
}

// k/l families: the printed rule takes the bb-raiser result under the
// species swap (transpose labels, flip the sign of p, swap family letters).
std::vector<Coefficient> printed_eps_aa(const Su3Label& L) {
    std::vector<Coefficient> flipped = printed_eps_bb(conj_flip(L));
    for (auto& c : flipped) {
        c.target = conj_flip(c.target);
        for (auto& ch : c.formula) {
            if (ch == 'i') ch = 'l';
            else if (ch == 'j') ch = 'k';
        }
    }
    return flipped;
}

const InvariantOp& op_create_pair() {
    static const InvariantOp op = parse_op("a+(1).b+(2)");
    return op;
}

}  // namespace

std::vector<Coefficient> act_printed(const InvariantOp& op, const Su3Label& label) {
    if (op == op_create_pair()) return printed_create_pair(label);
    if (op == parse_op("a+(1).a(2)")) return printed_move_a(label);
    if (op == parse_op("b+(1).b(2)")) return printed_move_b(label);
    if (op == parse_op("a(1).b(2)")) return printed_annihilate_pair(label);
    if (op == parse_op("eps(a+(3),b(2),a+(2))")) return printed_eps_mixed(label);
    if (op == parse_op("eps(b(3),b(2),a+(2))")) return printed_eps_bb(label);
    if (op == parse_op("eps(a(3),a(2),b+(2))")) return printed_eps_aa(label);
    if (op == parse_op("eps(a+(1),a+(2),a+(3))")) return printed_eps_aaa(label);
    return {};
}

std::vector<Su2Coefficient> act_printed_su2(const InvariantOp& op, const Su2Label& label) {
    std::vector<Su2Coefficient> out;
    const int n1 = label.n1(), n2 = label.n2(), n3 = label.n3();
    const auto push = [&](const std::string& formula, int dn1, int dn2, int dn3, long fac1,
                          long fac2) {
        Su2Label target;
        if (!su2_label_from_counts(n1 + dn1, n2 + dn2, n3 + dn3, target)) return;
        if (fac1 <= 0 || fac2 <= 0) return;
        Rational radicand = rat(fac1 * fac2, 4);
        out.push_back({formula, target, SqrtRational(1, radicand)});
    };
    if (op == parse_op("a+(3).b+(1)"))
        push("raise(3,1)", +1, 0, +1, n3 + n1 + n2 + 4, n3 + n1 - n2 + 2);
    else if (op == parse_op("a+(3).b+(2)"))
        push("raise(3,2)", 0, +1, +1, n3 + n2 + n1 + 4, n3 + n2 - n1 + 2);
    else if (op == parse_op("a+(3).a(1)"))
        push("hop(3,1)", -1, 0, +1, n3 - n1 + n2 + 2, n1 - n3 + n2);
    else if (op == parse_op("a(3).b(1)"))
        push("lower(3,1)", -1, 0, -1, n3 + n1 + n2 + 2, n3 + n1 - n2);
    return out;
}

}  // namespace singlet::published
