#include <doctest.h>

#include "singlet/oracle_su3.hpp"
#include "singlet/su3_engine.hpp"

using namespace singlet;

namespace {

const su3::Transition& single(const std::vector<su3::Transition>& ts) {
    REQUIRE(ts.size() == 1);
    return ts[0];
}

}  // namespace

TEST_CASE("pair creation from the vacuum") {
    const auto ts = su3::act(parse_op("a+(1).b+(2)"), Su3Label{});
    const auto& t = single(ts);
    CHECK(t.target == Su3Label{1, 0, 0, 0, 0, 0, 0});
    CHECK(t.coeff == SqrtRational(1, Rational(3)));
}

TEST_CASE("triplet transfer on the vacuum is empty") {
    CHECK(su3::act(parse_op("a+(1).a(2)"), Su3Label{}).empty());
    CHECK(su3::unnormalized_act(parse_op("b+(1).b(2)"),
                                Su3Label{0, 0, 0, 0, 0, 0, 1}).empty());
}

TEST_CASE("same-leg pairs vanish, numbers are diagonal") {
    const Su3Label l{1, 0, 0, 0, 0, 0, 0};
    CHECK(su3::act(parse_op("a+(2).b+(2)"), l).empty());
    CHECK(su3::act(parse_op("a(1).b(1)"), l).empty());
    auto ts = su3::unnormalized_act(parse_op("a+(1).a(1)"), l);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].coeff == 1);
    ts = su3::unnormalized_act(parse_op("b+(2).b(2)"), l);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].coeff == 1);
    // N(i) counts a and b quanta including the baryon contribution
    ts = su3::unnormalized_act(parse_op("N(3)"), Su3Label{0, 0, 0, 0, 0, 0, -2});
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].coeff == 2);
}

TEST_CASE("pair annihilation recovers the norm ratio") {
    const Su3Label l{1, 0, 0, 0, 0, 0, 0};
    auto ts = su3::unnormalized_act(parse_op("a(1).b(2)"), l);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].target == Su3Label{});
    CHECK(ts[0].coeff == 3);
}

TEST_CASE("mixed epsilon raiser: both p branches") {
    // p >= 0: single transition with the norm-ratio coefficient sqrt(6/3)
    const auto pos = su3::act(parse_op("eps(a+(3),b(2),a+(2))"), Su3Label{1, 0, 0, 0, 0, 0, 0});
    const auto& t = single(pos);
    CHECK(t.target == Su3Label{0, 0, 0, 0, 0, 0, 1});
    CHECK(t.coeff == SqrtRational(1, Rational(2)));

    // p < 0 (spec'd corner): single target with unnormalized coefficient 1
    const auto neg =
        su3::unnormalized_act(parse_op("eps(a+(3),b(2),a+(2))"), Su3Label{0, 0, 0, 0, 0, 0, -1});
    REQUIRE(neg.size() == 1);
    CHECK(neg[0].target == Su3Label{0, 0, 0, 1, 1, 0, 0});
    CHECK(neg[0].coeff == 1);
}

TEST_CASE("baryon raiser and its branches") {
    auto ts = su3::unnormalized_act(parse_op("eps(a+(1),a+(2),a+(3))"), Su3Label{});
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].target.p == 1);
    CHECK(ts[0].coeff == 1);
    ts = su3::unnormalized_act(parse_op("eps(a+(1),a+(2),a+(3))"), Su3Label{0, 0, 0, 0, 0, 0, -1});
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].coeff == 1);
    CHECK(ts[1].coeff == 1);
}

TEST_CASE("composed triple annihilator matches the oracle at a degenerate target") {
    const Su3Label t1{1, 0, 0, 1, 1, 0, 0};
    const auto ts = su3::unnormalized_act(parse_op("eps(a(1),a(2),a(3))"), t1);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].target == Su3Label{0, 0, 0, 0, 0, 0, -1});
    CHECK(ts[0].coeff == make_rational(20, 9));
}

TEST_CASE("reverse-orientation movers cross the degenerate sector correctly") {
    // (a+_2 . a_1) maps the cycled triangle onto both weight-6 hexagon states
    const Su3Label source{1, 0, 1, 1, 0, 0, 0};
    auto ts = su3::unnormalized_act(parse_op("a+(2).a(1)"), source);
    REQUIRE(ts.size() == 2);
    su3::sort_transitions(ts);
    CHECK(ts[0].target == Su3Label{0, 1, 1, 0, 0, 1, 0});
    CHECK(ts[0].coeff == make_rational(-1, 4));
    CHECK(ts[1].target == Su3Label{1, 0, 0, 1, 1, 0, 0});
    CHECK(ts[1].coeff == 1);
}

TEST_CASE("symmetry closure is exact at the transition level") {
    const auto ops = su3_catalog();
    for (const auto& l : enumerate_su3(4))
        for (const auto& op : {ops[0], ops[14], ops[40], ops[46], ops[51]}) {
            auto direct = su3::unnormalized_act(op, l);
            auto flipped = su3::unnormalized_act(conj_flip(op), conj_flip(l));
            for (auto& t : flipped) t.target = conj_flip(t.target);
            su3::sort_transitions(direct);
            su3::sort_transitions(flipped);
            REQUIRE(direct.size() == flipped.size());
            for (std::size_t k = 0; k < direct.size(); ++k) {
                CHECK(direct[k].target == flipped[k].target);
                CHECK(direct[k].coeff == flipped[k].coeff);
            }
        }
}

TEST_CASE("commutator helper reproduces the scaled-ladder identity") {
    const InvariantOp lhs_a = parse_op("b+(3).b(2)");
    const InvariantOp lhs_b = parse_op("a+(2).a(1)");
    for (const auto& l : enumerate_su3(4)) {
        auto lhs = su3::unnormalized_commutator(lhs_a, lhs_b, l);
        auto rhs = su3::unnormalized_compose(parse_op("a+(2).b+(3)"), parse_op("a(1).b(2)"), l);
        for (auto& t : rhs) {
            Rational scale = make_rational(-1, t.target.big_n(2) + 2);
            t.coeff *= scale;
        }
        su3::sort_transitions(lhs);
        su3::sort_transitions(rhs);
        REQUIRE(lhs.size() == rhs.size());
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            CHECK(lhs[k].target == rhs[k].target);
            CHECK(lhs[k].coeff == rhs[k].coeff);
        }
    }
}

TEST_CASE("normalized coefficients stay on the norm-ratio shell") {
    // coeff^2 * S(source) / S(target) must be the square of a rational
    for (const auto& l : enumerate_su3(4))
        for (const auto& op : su3_catalog())
            for (const auto& t : su3::act(op, l)) {
                Rational ratio =
                    t.coeff.radicand() * su3::norm_sq(l) / su3::norm_sq(t.target);
                Rational root;
                CHECK(rational_sqrt(ratio, root));
            }
}

TEST_CASE("catalog misses surface as typed errors") {
    CHECK_THROWS_AS(su3::act(parse_op("eps(a+(3),b(1),a+(1))"), Su3Label{}), CatalogMiss);
}

