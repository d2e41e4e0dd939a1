#include <doctest.h>

#include <random>

#include "singlet/ops.hpp"
#include "singlet/su3_engine.hpp"

using namespace singlet;

namespace {

std::mt19937 rng(20240811);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 12);
    return make_rational(num(rng), den(rng));
}

Su3Label random_label(int max_l, int max_p) {
    std::uniform_int_distribution<int> l(0, max_l);
    std::uniform_int_distribution<int> p(-max_p, max_p);
    return Su3Label{l(rng), l(rng), l(rng), l(rng), l(rng), l(rng), p(rng)};
}

Factor random_factor(bool fundamental) {
    std::uniform_int_distribution<int> leg(1, 3);
    std::uniform_int_distribution<int> pick(0, 1);
    // fundamental class: {a+, b}; anti-fundamental: {a, b+}
    const bool use_a = pick(rng) == 0;
    Factor f;
    f.species = use_a ? Species::A : Species::B;
    f.dagger = fundamental == use_a;
    f.leg = leg(rng);
    return f;
}

InvariantOp random_op() {
    std::uniform_int_distribution<int> kind(0, 2);
    switch (kind(rng)) {
        case 0: return InvariantOp::bilinear(random_factor(true), random_factor(false));
        case 1: {
            std::uniform_int_distribution<int> cls(0, 1);
            const bool fundamental = cls(rng) == 0;
            return InvariantOp::trilinear(random_factor(fundamental), random_factor(fundamental),
                                          random_factor(fundamental));
        }
        default: {
            std::uniform_int_distribution<int> leg(1, 3);
            return InvariantOp::number(leg(rng));
        }
    }
}

}  // namespace

TEST_CASE("sqrt-rational algebra within one radicand family") {
    for (int trial = 0; trial < 200; ++trial) {
        const Rational q = make_rational(std::uniform_int_distribution<int>(1, 20)(rng));
        const auto member = [&] {
            return SqrtRational::scaled_sqrt(random_rational(), q);
        };
        const SqrtRational x = member(), y = member(), z = member();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(x + (-x) == SqrtRational());
        // multiplication by an exact rational distributes
        const SqrtRational r = SqrtRational::from_rational(random_rational());
        CHECK(r * (x + y) == r * x + r * y);
    }
}

TEST_CASE("label symmetry group relations on random labels") {
    for (int trial = 0; trial < 300; ++trial) {
        const Su3Label l = random_label(4, 3);
        CHECK(conj_flip(conj_flip(l)) == l);
        CHECK(cycle(cycle(cycle(l))) == l);
        CHECK(cycle(conj_flip(l)) == conj_flip(cycle(l)));
        CHECK(cycle(l).weight() == l.weight());
        for (int leg = 1; leg <= 3; ++leg) {
            // flip exchanges the two irrep labels of every leg
            const IrrepPQ pq = leg_irrep(l, leg);
            const IrrepPQ qp = leg_irrep(conj_flip(l), leg);
            CHECK(pq.p == qp.q);
            CHECK(pq.q == qp.p);
        }
    }
}

TEST_CASE("random operator expressions round-trip through the grammar") {
    for (int trial = 0; trial < 300; ++trial) {
        const InvariantOp op = random_op();
        CHECK(parse_op(print_op(op)) == op);
        CHECK(conj_flip(conj_flip(op)) == op);
        CHECK(cycle(cycle(cycle(op))) == op);
    }
}

TEST_CASE("malformed input never crashes the parser") {
    const std::string alphabet = "ab+().,eps123 N";
    std::uniform_int_distribution<std::size_t> len(0, 14);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string text;
        const std::size_t n = len(rng);
        for (std::size_t k = 0; k < n; ++k) text += alphabet[pick(rng)];
        try {
            const InvariantOp op = parse_op(text);
            CHECK(parse_op(print_op(op)) == op);  // anything accepted must round-trip
        } catch (const ParseError&) {
            // rejection is fine; crashing is not
        }
    }
}

TEST_CASE("weight bookkeeping of random transitions") {
    // every creator adds one oscillator quantum, every annihilator removes one
    for (int trial = 0; trial < 150; ++trial) {
        const Su3Label l = random_label(2, 1);
        const InvariantOp op = random_op();
        int expected_dw = 0;
        for (const auto& f : op.factors) expected_dw += f.dagger ? 1 : -1;
        std::vector<su3::RatTransition> ts;
        try {
            ts = su3::unnormalized_act(op, l);
        } catch (const CatalogMiss&) {
            continue;
        }
        for (const auto& t : ts) {
            CHECK(t.target.weight() - l.weight() == expected_dw);
            CHECK(t.coeff != 0);
            CHECK(t.target.valid());
        }
    }
}

TEST_CASE("norm-ratio shell on random heavier labels") {
    for (int trial = 0; trial < 60; ++trial) {
        const Su3Label l = random_label(2, 2);
        if (l.weight() > 10) continue;
        for (const InvariantOp& op :
             {parse_op("a(1).b(2)"), parse_op("eps(b(3),b(2),a+(2))"), parse_op("a+(2).a(1)")}) {
            for (const auto& t : su3::act(op, l)) {
                Rational ratio = t.coeff.radicand() * su3::norm_sq(l) / su3::norm_sq(t.target);
                Rational root;
                CHECK(rational_sqrt(ratio, root));
            }
        }
    }
}
