#include "singlet/ops.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace singlet {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t i = 0;

    void skip_ws() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= text.size();
    }
    char peek() {
        skip_ws();
        return i < text.size() ? text[i] : '\0';
    }
    char take() {
        skip_ws();
        if (i >= text.size()) throw ParseError("unexpected end of input", i);
        return text[i++];
    }
    void expect(char c) {
        const char got = take();
        if (got != c)
            throw ParseError(std::string("expected '") + c + "', got '" + got + "'", i - 1);
    }
};

int parse_leg(Cursor& cur) {
    const std::size_t at = cur.i;
    const char c = cur.take();
    if (c < '1' || c > '3') throw ParseError("leg out of range (must be 1, 2 or 3)", at);
    return c - '0';
}

Factor parse_factor(Cursor& cur) {
    const std::size_t at = cur.i;
    const char c = cur.take();
    if (c != 'a' && c != 'b') throw ParseError("expected factor 'a' or 'b'", at);
    Factor f;
    f.species = c == 'a' ? Species::A : Species::B;
    if (cur.peek() == '+') {
        cur.take();
        f.dagger = true;
    }
    cur.expect('(');
    f.leg = parse_leg(cur);
    cur.expect(')');
    return f;
}

// Factors transforming like the fundamental (a+, b) vs the anti-fundamental
// (a, b+); invariant contractions pair delta across the two classes and
// epsilon within one class.
bool fundamental_like(const Factor& f) {
    return f.species == Species::A ? f.dagger : !f.dagger;
}

std::string factor_text(const Factor& f) {
    std::string s(1, f.species == Species::A ? 'a' : 'b');
    if (f.dagger) s += '+';
    s += '(';
    s += char('0' + f.leg);
    s += ')';
    return s;
}

}  // namespace

InvariantOp parse_op(const std::string& text) {
    Cursor cur{text};
    InvariantOp op;
    if (cur.peek() == 'e' || cur.peek() == 'N') {
        const char head = cur.take();
        if (head == 'N') {
            cur.expect('(');
            const int leg = parse_leg(cur);
            cur.expect(')');
            op = InvariantOp::number(leg);
        } else {
            cur.expect('p');
            cur.expect('s');
            cur.expect('(');
            Factor f1 = parse_factor(cur);
            cur.expect(',');
            Factor f2 = parse_factor(cur);
            cur.expect(',');
            Factor f3 = parse_factor(cur);
            cur.expect(')');
            if (!(fundamental_like(f1) == fundamental_like(f2) &&
                  fundamental_like(f2) == fundamental_like(f3)))
                throw ParseError(
                    "epsilon contraction requires all three factors from the same "
                    "transformation class ({a+, b} or {a, b+})",
                    0);
            op = InvariantOp::trilinear(f1, f2, f3);
        }
    } else {
        Factor f1 = parse_factor(cur);
        cur.expect('.');
        Factor f2 = parse_factor(cur);
        if (fundamental_like(f1) == fundamental_like(f2))
            throw ParseError(
                "dot contraction requires one factor from each transformation "
                "class ({a+, b} x {a, b+})",
                0);
        op = InvariantOp::bilinear(f1, f2);
    }
    if (!cur.eof()) throw ParseError("trailing input", cur.i);
    return op;
}

std::string print_op(const InvariantOp& op) {
    switch (op.kind) {
        case InvariantOp::Kind::Number:
            return "N(" + std::string(1, char('0' + op.leg)) + ")";
        case InvariantOp::Kind::Bilinear:
            return factor_text(op.factors[0]) + "." + factor_text(op.factors[1]);
        case InvariantOp::Kind::TrilinearEps:
            return "eps(" + factor_text(op.factors[0]) + "," + factor_text(op.factors[1]) + "," +
                   factor_text(op.factors[2]) + ")";
    }
    throw std::logic_error("unreachable");
}

InvariantOp conj_flip(const InvariantOp& op) {
    InvariantOp out = op;
    for (auto& f : out.factors) f.species = f.species == Species::A ? Species::B : Species::A;
    return out;
}

InvariantOp cycle(const InvariantOp& op) {
    const auto rotate = [](int leg) { return leg % 3 + 1; };
    InvariantOp out = op;
    for (auto& f : out.factors) f.leg = rotate(f.leg);
    if (out.kind == InvariantOp::Kind::Number) out.leg = rotate(out.leg);
    return out;
}

std::pair<InvariantOp, int> adjoint_op(const InvariantOp& op) {
    switch (op.kind) {
        case InvariantOp::Kind::Number:
            return {op, 1};
        case InvariantOp::Kind::Bilinear: {
            Factor f = op.factors[1];
            Factor g = op.factors[0];
            f.dagger = !f.dagger;
            g.dagger = !g.dagger;
            return {InvariantOp::bilinear(f, g), 1};
        }
        case InvariantOp::Kind::TrilinearEps: {
            Factor f = op.factors[2];
            Factor g = op.factors[1];
            Factor h = op.factors[0];
            f.dagger = !f.dagger;
            g.dagger = !g.dagger;
            h.dagger = !h.dagger;
            return {InvariantOp::trilinear(f, g, h), -1};
        }
    }
    throw std::logic_error("unreachable");
}

InvariantOp apply_word(const SymmetryWord& w, const InvariantOp& op) {
    InvariantOp out = op;
    for (int k = 0; k < w.cycles; ++k) out = cycle(out);
    if (w.flip) out = conj_flip(out);
    return out;
}

namespace {

// Words searched shortest-first; the first match is the canonical one.
constexpr std::array<SymmetryWord, 6> kWords = {
    SymmetryWord{0, false}, SymmetryWord{1, false}, SymmetryWord{0, true},
    SymmetryWord{2, false}, SymmetryWord{1, true},  SymmetryWord{2, true},
};

// Same-leg pairs with one dagger fail to commute under the constrained
// algebra; everything else commutes.
bool factors_commute(const Factor& a, const Factor& b) {
    return a.leg != b.leg || a.dagger == b.dagger;
}

// Stable sort of epsilon slots by leg, tracking the permutation sign; fails
// (returns false) if a non-commuting pair would have to cross.
bool normal_form(std::vector<Factor> slots, std::vector<Factor>& out, int& sign) {
    sign = 1;
    for (std::size_t pass = 0; pass + 1 < slots.size(); ++pass)
        for (std::size_t k = 0; k + 1 < slots.size() - pass; ++k) {
            if (slots[k].leg <= slots[k + 1].leg) continue;
            if (!factors_commute(slots[k], slots[k + 1])) return false;
            std::swap(slots[k], slots[k + 1]);
            sign = -sign;
        }
    out = std::move(slots);
    return true;
}

InvariantOp base_op(Su3Base base, int leg) {
    const auto A = [](bool dag, int l) { return Factor{Species::A, dag, l}; };
    const auto B = [](bool dag, int l) { return Factor{Species::B, dag, l}; };
    switch (base) {
        case Su3Base::CreatePair: return InvariantOp::bilinear(A(true, 1), B(true, 2));
        case Su3Base::CreatePairZero: return InvariantOp::bilinear(A(true, leg), B(true, leg));
        case Su3Base::AnnihilatePair: return InvariantOp::bilinear(A(false, 1), B(false, 2));
        case Su3Base::AnnihilatePairZero: return InvariantOp::bilinear(A(false, leg), B(false, leg));
        case Su3Base::MoveA: return InvariantOp::bilinear(A(true, 1), A(false, 2));
        case Su3Base::MoveAAdj: return InvariantOp::bilinear(A(true, 2), A(false, 1));
        case Su3Base::NumberA: return InvariantOp::bilinear(A(true, leg), A(false, leg));
        case Su3Base::NumberB: return InvariantOp::bilinear(B(true, leg), B(false, leg));
        case Su3Base::NumberTotal: return InvariantOp::number(leg);
        case Su3Base::EpsMixedRaise:
            return InvariantOp::trilinear(A(true, 3), B(false, 2), A(true, 2));
        case Su3Base::EpsBBRaise:
            return InvariantOp::trilinear(B(false, 3), B(false, 2), A(true, 2));
        case Su3Base::EpsAAALower:
            return InvariantOp::trilinear(A(false, 1), A(false, 2), A(false, 3));
        case Su3Base::EpsAAARaise:
            return InvariantOp::trilinear(A(true, 1), A(true, 2), A(true, 3));
    }
    throw std::logic_error("unreachable");
}

// Dot factors of equal dagger parity commute; compare them order-blind.
InvariantOp oriented_bilinear(const InvariantOp& op) {
    Factor f = op.factors[0];
    Factor g = op.factors[1];
    if (f.dagger == g.dagger && f.species == Species::B) std::swap(f, g);
    return InvariantOp::bilinear(f, g);
}

CanonicalForm canonicalize_bilinear(const InvariantOp& op) {
    Factor f = op.factors[0];
    Factor g = op.factors[1];
    const bool same_leg = f.leg == g.leg;

    CanonicalForm form;
    form.sign = 1;
    form.leg = same_leg ? f.leg : 0;

    const auto match = [&](Su3Base b) {
        const InvariantOp target = InvariantOp::bilinear(f, g);
        for (const auto& w : kWords) {
            if (oriented_bilinear(apply_word(w, base_op(b, form.leg))) == target) {
                form.base = b;
                form.word = w;
                return true;
            }
        }
        return false;
    };

    if (f.dagger && g.dagger) {
        if (f.species == Species::B) std::swap(f, g);  // commuting; write a+ first
        if (!match(same_leg ? Su3Base::CreatePairZero : Su3Base::CreatePair))
            throw std::logic_error("pair-creation closure incomplete");
        return form;
    }
    if (!f.dagger && !g.dagger) {
        if (f.species == Species::B) std::swap(f, g);
        if (!match(same_leg ? Su3Base::AnnihilatePairZero : Su3Base::AnnihilatePair))
            throw std::logic_error("pair-annihilation closure incomplete");
        return form;
    }
    // Mixed dagger; the parse step guarantees equal species here.
    if (!f.dagger) {
        if (!factors_commute(f, g))
            throw CatalogMiss("bilinear " + print_op(op) +
                              " is not normal-ordered; only the dagger-first form has a "
                              "closed-form action");
        std::swap(f, g);
    }
    if (same_leg) {
        form.base = f.species == Species::A ? Su3Base::NumberA : Su3Base::NumberB;
        form.word = kWords[0];
        return form;
    }
    if (!match(Su3Base::MoveA) && !match(Su3Base::MoveAAdj))
        throw std::logic_error("mover closure incomplete");
    return form;
}

CanonicalForm canonicalize_trilinear(const InvariantOp& op) {
    // Two identical slots under the epsilon vanish by antisymmetry.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (op.factors[i] == op.factors[j]) {
                CanonicalForm form;
                form.base = op.factors[0].dagger || op.factors[1].dagger || op.factors[2].dagger
                                ? Su3Base::EpsAAARaise
                                : Su3Base::EpsAAALower;
                form.word = kWords[0];
                form.sign = 0;
                return form;
            }

    std::vector<Factor> norm_in;
    int sign_in = 1;
    if (!normal_form(op.factors, norm_in, sign_in))
        throw CatalogMiss("trilinear " + print_op(op) +
                          " has a same-leg annihilator/creator pair in an order with no "
                          "closed-form action");

    constexpr std::array<Su3Base, 4> kTrilinearBases = {
        Su3Base::EpsMixedRaise, Su3Base::EpsBBRaise, Su3Base::EpsAAARaise, Su3Base::EpsAAALower};
    for (const auto b : kTrilinearBases)
        for (const auto& w : kWords) {
            const InvariantOp image = apply_word(w, base_op(b, 0));
            std::vector<Factor> norm_img;
            int sign_img = 1;
            if (!normal_form(image.factors, norm_img, sign_img)) continue;
            if (norm_img != norm_in) continue;
            CanonicalForm form;
            form.base = b;
            form.word = w;
            form.sign = sign_in * sign_img;
            return form;
        }
    throw CatalogMiss("trilinear " + print_op(op) + " is outside the closed-form catalog");
}

}  // namespace

CanonicalForm canonicalize_su3(const InvariantOp& op) {
    switch (op.kind) {
        case InvariantOp::Kind::Number: {
            CanonicalForm form;
            form.base = Su3Base::NumberTotal;
            form.word = kWords[0];
            form.sign = 1;
            form.leg = op.leg;
            return form;
        }
        case InvariantOp::Kind::Bilinear:
            return canonicalize_bilinear(op);
        case InvariantOp::Kind::TrilinearEps:
            return canonicalize_trilinear(op);
    }
    throw std::logic_error("unreachable");
}

InvariantOp realize_su3(const CanonicalForm& form) {
    return apply_word(form.word, base_op(form.base, form.leg));
}

std::vector<InvariantOp> su3_catalog() {
    std::vector<InvariantOp> out;
    const auto A = [](bool dag, int l) { return Factor{Species::A, dag, l}; };
    const auto B = [](bool dag, int l) { return Factor{Species::B, dag, l}; };
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            out.push_back(InvariantOp::bilinear(A(true, i), B(true, j)));
            out.push_back(InvariantOp::bilinear(A(false, i), B(false, j)));
            out.push_back(InvariantOp::bilinear(A(true, i), A(false, j)));
            out.push_back(InvariantOp::bilinear(B(true, i), B(false, j)));
        }
    for (int leg = 1; leg <= 3; ++leg) out.push_back(InvariantOp::number(leg));
    const auto G = InvariantOp::trilinear(A(true, 3), B(false, 2), A(true, 2));
    const auto I = InvariantOp::trilinear(B(false, 3), B(false, 2), A(true, 2));
    for (const auto& seed : {G, I}) {
        InvariantOp o = seed;
        for (int k = 0; k < 3; ++k, o = cycle(o)) {
            out.push_back(o);
            out.push_back(conj_flip(o));
        }
    }
    out.push_back(InvariantOp::trilinear(A(true, 1), A(true, 2), A(true, 3)));
    out.push_back(InvariantOp::trilinear(B(true, 1), B(true, 2), B(true, 3)));
    out.push_back(InvariantOp::trilinear(A(false, 1), A(false, 2), A(false, 3)));
    out.push_back(InvariantOp::trilinear(B(false, 1), B(false, 2), B(false, 3)));
    return out;
}

}  // namespace singlet
