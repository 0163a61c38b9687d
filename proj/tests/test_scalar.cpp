#include "doctest.h"

#include <random>
#include <vector>

#include "qlie/scalar.hpp"

using qlie::Rational;
using qlie::Scalar;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    auto part = [&]() { return Rational(num(rng), den(rng)); };
    return Scalar(part(), part(), part(), part());
}

} // namespace

TEST_CASE("basis multiplication table") {
    const Scalar one = Scalar::one();
    const Scalar r2 = Scalar::sqrt2();
    const Scalar i = Scalar::i();
    const Scalar ir2 = Scalar::i_sqrt2();

    CHECK(r2 * r2 == Scalar(2));
    CHECK(i * i == Scalar(-1));
    CHECK(ir2 * ir2 == Scalar(-2));
    CHECK(r2 * i == ir2);
    CHECK(i * r2 == ir2);
    CHECK(i * ir2 == -r2);
    CHECK(r2 * ir2 == 2 * i);
    CHECK(one * ir2 == ir2);
    CHECK(Scalar::inv_sqrt2() * r2 == one);
}

TEST_CASE("division frozen values") {
    const Scalar i = Scalar::i();
    // (1 + i) / (1 - i) = i
    CHECK((Scalar(1) + i) / (Scalar(1) - i) == i);
    // 1 / r2 = r2 / 2
    CHECK(Scalar(1) / Scalar::sqrt2() == Scalar(Rational(0), Rational(1, 2), Rational(0), Rational(0)));
    // Mixed element times its inverse.
    const Scalar x(Rational(1, 2), Rational(-3, 4), Rational(1), Rational(0));
    CHECK(x * x.inverse() == Scalar::one());
    CHECK_THROWS_AS(Scalar::zero().inverse(), qlie::DivisionByZeroError);
}

TEST_CASE("field axioms on seeded random triples") {
    std::mt19937_64 rng(20260815);
    for (int trial = 0; trial < 1000; ++trial) {
        const Scalar x = random_scalar(rng), y = random_scalar(rng), w = random_scalar(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + w == x + (y + w));
        CHECK((x * y) * w == x * (y * w));
        CHECK(x * (y + w) == x * y + x * w);
        CHECK(x + (-x) == Scalar::zero());
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == Scalar::one());
        }
        CHECK(x.conj_i() * y.conj_i() == (x * y).conj_i());
        CHECK(x.conj_sqrt2() * y.conj_sqrt2() == (x * y).conj_sqrt2());
    }
}

TEST_CASE("square roots of representable shapes") {
    Scalar root;
    REQUIRE(Scalar(Rational(9, 4)).try_sqrt(root));
    CHECK(root == Scalar(Rational(3, 2)));

    REQUIRE(Scalar(Rational(1, 2)).try_sqrt(root));
    CHECK(root * root == Scalar(Rational(1, 2)));
    CHECK(root == Scalar(Rational(0), Rational(1, 2), Rational(0), Rational(0)));

    REQUIRE(Scalar(-1).try_sqrt(root));
    CHECK(root == Scalar::i());

    REQUIRE(Scalar(Rational(-2, 9)).try_sqrt(root));
    CHECK(root == Scalar(Rational(0), Rational(0), Rational(0), Rational(1, 3)));
    CHECK(root * root == Scalar(Rational(-2, 9)));

    REQUIRE(Scalar(0).try_sqrt(root));
    CHECK(root.is_zero());

    CHECK_FALSE(Scalar(3).try_sqrt(root));
    CHECK_FALSE(Scalar(-3).try_sqrt(root));
    CHECK_FALSE((2 * Scalar::i()).try_sqrt(root));
    CHECK_FALSE(Scalar::sqrt2().try_sqrt(root));
}

TEST_CASE("render frozen strings") {
    CHECK(Scalar::zero().render() == "0");
    CHECK(Scalar(7).render() == "7");
    CHECK(Scalar(Rational(-1, 3)).render() == "-1/3");
    CHECK(Scalar(Rational(1, 2), Rational(-3, 4), Rational(0), Rational(1)).render() ==
          "1/2 - 3/4*r2 + 1*i*r2");
    CHECK(Scalar(Rational(0), Rational(0), Rational(5, 2), Rational(0)).render() == "5/2*i");
    CHECK((-Scalar::sqrt2()).render() == "-1*r2");
}

TEST_CASE("parse accepts the rendered grammar") {
    CHECK(Scalar::parse("0") == Scalar::zero());
    CHECK(Scalar::parse("-7/3") == Scalar(Rational(-7, 3)));
    CHECK(Scalar::parse("1/2 - 3/4*r2 + 1*i*r2") ==
          Scalar(Rational(1, 2), Rational(-3, 4), Rational(0), Rational(1)));
    CHECK(Scalar::parse("2*i + 1") == Scalar(Rational(1), Rational(0), Rational(2), Rational(0)));

    CHECK_THROWS_AS(Scalar::parse(""), qlie::ParseError);
    CHECK_THROWS_AS(Scalar::parse("1 +"), qlie::ParseError);
    CHECK_THROWS_AS(Scalar::parse("1 & 2"), qlie::ParseError);
    CHECK_THROWS_AS(Scalar::parse("q"), qlie::ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/0"), qlie::ParseError);
    CHECK_THROWS_AS(Scalar::parse("1*r3"), qlie::ParseError);
}

TEST_CASE("round trip parse(render(x)) == x on seeded samples") {
    std::mt19937_64 rng(77001);
    for (int trial = 0; trial < 500; ++trial) {
        const Scalar x = random_scalar(rng);
        CHECK(Scalar::parse(x.render()) == x);
    }
}
