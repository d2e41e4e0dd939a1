#include <doctest.h>

#include "singlet/oracle_su3.hpp"
#include "singlet/su3_engine.hpp"

using namespace singlet;
using namespace singlet::oracle;

TEST_CASE("raw oscillator bookkeeping") {
    Su3Vector vac = Su3Vector::vacuum();
    CHECK(raw_annihilate(1, Species::A, 0, vac).empty());
    Su3Vector one = raw_create(1, Species::A, 0, vac);
    Su3Vector two = raw_create(1, Species::A, 0, one);
    // (a+)^2 |0> carries weight 2! in the unnormalized number basis
    CHECK(inner(two, two).re == 2);
    CHECK(inner(vac, vac).re == 1);
    CHECK(inner(one, two).is_zero());
}

TEST_CASE("irreducible oscillators on the vacuum reduce to raw ones") {
    Su3Vector vac = Su3Vector::vacuum();
    CHECK(irr_a_dag(1, 2, vac) == raw_create(1, Species::A, 2, vac));
    CHECK(irr_b_dag(2, 0, vac) == raw_create(2, Species::B, 0, vac));
    CHECK(irr_a(1, 0, vac).empty());
}

TEST_CASE("multiplicity constraint forced the printed operator ordering") {
    // k- annihilates irreducible two-quantum states only with the leftmost
    // placement of the 1/(n+m+1) factor.
    Su3Vector vac = Su3Vector::vacuum();
    for (int alpha = 0; alpha < 3; ++alpha)
        for (int beta = 0; beta < 3; ++beta) {
            Su3Vector v = irr_a_dag(1, alpha, irr_b_dag(1, beta, vac));
            CHECK(k_minus(1, v).empty());
        }
}

TEST_CASE("k0 eigenvalues") {
    Su3Vector vac = Su3Vector::vacuum();
    CHECK(k_zero(1, vac) == vac * make_rational(3, 2));
    Su3Vector v = irr_a_dag(1, 0, vac);
    CHECK(k_zero(1, v) == v * make_rational(4, 2));
}

TEST_CASE("built states obey all constraints") {
    const Su3Label l{1, 0, 0, 0, 0, 1, 0};
    const Su3Vector v = build_state(l);
    for (int a = 1; a <= 8; ++a) CHECK(gauss_total(a, v).empty());
    for (int leg = 1; leg <= 3; ++leg) {
        CHECK(k_minus(leg, v).empty());
        Su3Vector pair;
        for (int c = 0; c < 3; ++c) pair += irr_a_dag(leg, c, irr_b_dag(leg, c, v));
        CHECK(pair.empty());
    }
}

TEST_CASE("leg casimir matches the irrep formula") {
    const Su3Label l{1, 0, 0, 0, 0, 0, 0};
    const Su3Vector v = build_state(l);
    // leg 1 carries (1,0): C1 = 4/3
    CHECK(casimir_leg(1, v) == v * make_rational(4, 3));
    CHECK(casimir_leg(3, v).empty());
}

TEST_CASE("dirac bracket sample") {
    const Su3Vector v = build_state(Su3Label{1, 0, 0, 0, 1, 0, 0});
    const int leg = 2;
    for (int alpha = 0; alpha < 3; ++alpha)
        for (int beta = 0; beta < 3; ++beta) {
            Su3Vector r = irr_a(leg, alpha, irr_a_dag(leg, beta, v));
            r -= irr_a_dag(leg, beta, irr_a(leg, alpha, v));
            if (alpha == beta) r -= v;
            Su3Vector corr = irr_b_dag(leg, alpha, irr_b(leg, beta, v));
            r += corr.scale_by([](const Su3State& s) {
                return make_rational(1, leg_count(s, 2) + 2);
            });
            CHECK(r.empty());
        }
}

TEST_CASE("factor order does not matter") {
    const Su3Label l{1, 1, 0, 0, 1, 0, 1};
    const Su3Vector canonical = build_state(l);
    const Su3Vector shuffled =
        build_state_ordered(l, {{3, 2}, {1, 2}, {2, 3}, {3, 1}, {2, 1}, {1, 3}});
    CHECK(canonical == shuffled);
}

TEST_CASE("decomposition solves the degenerate Gram sector") {
    StateCache cache;
    const Su3Label l{0, 0, 0, 0, 0, 0, -1};
    const Su3Vector image = apply_op(parse_op("eps(a+(1),a+(2),a+(3))"), cache.get(l));
    const auto parts = decompose(image, cache);
    REQUIRE(parts.size() == 2);
    // both weight-6 targets appear with unit coefficient even though they
    // overlap each other
    CHECK(parts[0].second == 1);
    CHECK(parts[1].second == 1);
    CHECK(inner(cache.get(parts[0].first), cache.get(parts[1].first)).re ==
          make_rational(-16, 3));
}

TEST_CASE("operator application matches the closed forms by residual") {
    StateCache cache;
    for (const auto& l : enumerate_su3(3))
        for (const auto& op : su3_catalog()) {
            Su3Vector residual = apply_op(op, cache.get(l));
            for (const auto& t : su3::unnormalized_act(op, l))
                residual -= cache.get(t.target) * t.coeff;
            CHECK(residual.empty());
        }
}

TEST_CASE("closed forms stay exact deep in the degenerate sectors") {
    // weight-8 sources whose transitions thread through the non-orthogonal
    // weight-6 pair; the residual computation does not assume orthogonality
    StateCache cache;
    for (const Su3Label& l : {Su3Label{1, 1, 1, 1, 0, 0, 0}, Su3Label{2, 1, 0, 0, 1, 0, 0}})
        for (const char* text : {"eps(b(3),b(2),a+(2))", "eps(a(1),a(2),a(3))", "a(1).b(2)",
                                 "a+(2).a(1)", "eps(a+(1),a+(2),a+(3))"}) {
            const InvariantOp op = parse_op(text);
            Su3Vector residual = apply_op(op, cache.get(l));
            for (const auto& t : su3::unnormalized_act(op, l))
                residual -= cache.get(t.target) * t.coeff;
            CHECK(residual.empty());
        }
}
