#include <doctest.h>

#include "singlet/validate.hpp"

using namespace singlet;

TEST_CASE("small verification sweeps are green") {
    const validate::Report su2 = validate::verify_su2(6);
    CHECK(su2.ok());
    CHECK(su2.claims_ok());  // no degenerate sectors exist for three doublets

    const validate::Report su3 = validate::verify_su3(4);
    CHECK(su3.ok());
    CHECK(su3.claims_ok());  // first degenerate sector sits at weight 6
    CHECK(!su3.checks.empty());
}

TEST_CASE("the weight-6 sweep flags the published orthogonality claim only") {
    const validate::Report su3 = validate::verify_su3(6);
    CHECK(su3.ok());          // engine matches the oracle
    CHECK(!su3.claims_ok());  // the published claim does not
    for (const auto& c : su3.checks) {
        if (c.passed) continue;
        CHECK(c.claim);
        CHECK(c.name == "su3 orthogonality (published claim)");
    }
    // the ledger documents the base case, the epsilon families, and the
    // non-orthogonal pair
    bool base = false, eps = false, overlap = false;
    for (const auto& r : su3.ledger) {
        if (r.formula.rfind("S0", 0) == 0) {
            base = true;
            Rational v;
            CHECK(r.paper.as_rational(v));
        }
        if (r.formula.rfind("n1", 0) == 0) eps = true;
        if (r.formula.rfind("orthogonality", 0) == 0) overlap = true;
        CHECK(!r.paper_ref.empty());
        CHECK(!r.note.empty());
    }
    CHECK(base);
    CHECK(eps);
    CHECK(overlap);
}

TEST_CASE("engine-vs-oracle record list stays empty across branches") {
    CHECK(validate::against_oracle_su3(4).empty());
}

TEST_CASE("thread budget honors the environment cap") {
    // the suite runs with whatever is configured; the cap only has to be >= 1
    CHECK(validate::thread_budget() >= 1);
}
