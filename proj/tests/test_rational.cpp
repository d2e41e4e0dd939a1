#include <doctest.h>

#include "singlet/rational.hpp"
#include "singlet/sqrt_rational.hpp"

using namespace singlet;

TEST_CASE("fraction strings round-trip") {
    CHECK(to_fraction_string(make_rational(3, 6)) == "1/2");
    CHECK(to_fraction_string(make_rational(-4)) == "-4/1");
    CHECK(rational_from_string("22/7") == make_rational(22, 7));
    CHECK(rational_from_string("-5") == make_rational(-5));
    CHECK_THROWS_AS(rational_from_string("x/y"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("rational square roots") {
    Rational root;
    CHECK(rational_sqrt(make_rational(49, 4), root));
    CHECK(root == make_rational(7, 2));
    CHECK(!rational_sqrt(make_rational(2), root));
    CHECK(!rational_sqrt(make_rational(-4), root));
}

TEST_CASE("square decomposition") {
    Rational root, sf;
    square_decompose(make_rational(72), root, sf);  // 72 = 6^2 * 2
    CHECK(root == 6);
    CHECK(sf == 2);
    square_decompose(make_rational(27, 50), root, sf);  // = (3/10)^2 * 6
    CHECK(root == make_rational(3, 10));
    CHECK(sf == 6);
}

TEST_CASE("sqrt-rational arithmetic") {
    const SqrtRational two = SqrtRational::from_rational(make_rational(2));
    CHECK(two.sign() == 1);
    CHECK(two.radicand() == 4);
    Rational back;
    CHECK(two.as_rational(back));
    CHECK(back == 2);

    const SqrtRational r8(1, make_rational(8));
    const SqrtRational r2(1, make_rational(2));
    CHECK(r8 + r2 == SqrtRational(1, make_rational(18)));  // 2*sqrt2 + sqrt2
    CHECK(r8 - r8 == SqrtRational());
    CHECK((r8 * r2) == SqrtRational(1, make_rational(16)));
    CHECK((-r2).sign() == -1);

    const SqrtRational r3(1, make_rational(3));
    CHECK_THROWS_AS((void)(r2 + r3), IncompatibleRadicand);

    CHECK(!r2.as_rational(back));
    CHECK(SqrtRational::scaled_sqrt(make_rational(-2), make_rational(3)) ==
          SqrtRational(-1, make_rational(12)));
}

TEST_CASE("sqrt-rational pretty printing") {
    CHECK(SqrtRational(1, make_rational(12)).pretty() == "2*sqrt(3)");
    CHECK(SqrtRational(-1, make_rational(5, 2)).pretty() == "-1/2*sqrt(10)");
    CHECK(SqrtRational::from_rational(make_rational(4)).pretty() == "4");
    CHECK(SqrtRational().pretty() == "0");
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i(make_rational(0), make_rational(1));
    CHECK((i * i) == GaussianRational(make_rational(-1), make_rational(0)));
    CHECK(i.conj() == GaussianRational(make_rational(0), make_rational(-1)));
    CHECK((i * i.conj()) == GaussianRational(make_rational(1)));
}
