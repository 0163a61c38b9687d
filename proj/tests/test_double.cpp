#include "doctest.h"

#include "qlie/drinfeld_double.hpp"

using qlie::DoubleAlgebra;
using qlie::Element;
using qlie::LieBialgebra;
using qlie::Rational;
using qlie::Scalar;

namespace {

qlie::DenseMatrix identity_with(int dim, int index, const Scalar& value) {
    qlie::DenseMatrix m(dim, std::vector<Scalar>(dim, Scalar::zero()));
    for (int k = 0; k < dim; ++k) m[k][k] = Scalar::one();
    m[index][index] = value;
    return m;
}

} // namespace

TEST_CASE("two generator half: structure and checks") {
    const LieBialgebra half = qlie::su2_t1_half();
    CHECK(half.bracket_coeff(0, 1, 1) == Scalar::inv_sqrt2());
    CHECK(half.cocom_coeff(1, 0, 1) == -Scalar::inv_sqrt2());
    CHECK(qlie::run_bialgebra_checks(half).all_ok());
    CHECK(qlie::is_self_dual_half(half));
}

TEST_CASE("double of the two generator half: frozen crossed bracket") {
    const DoubleAlgebra d = qlie::build_double(qlie::su2_t1_half(), {"z1", "z2"});
    REQUIRE(d.algebra.dim() == 4);
    CHECK(d.algebra.generators() == std::vector<std::string>{"Z1", "Z2", "z1", "z2"});

    // [Z2, z2] = (1/r2)(Z1 + z1)
    const Element br = d.algebra.bracket(Element{{1, Scalar::one()}}, Element{{3, Scalar::one()}});
    REQUIRE(br.size() == 2);
    CHECK(br.at(0) == Scalar::inv_sqrt2());
    CHECK(br.at(2) == Scalar::inv_sqrt2());

    // [Z1, z1] = 0: both cross terms vanish for the Cartan pair.
    CHECK(d.algebra.bracket(Element{{0, Scalar::one()}}, Element{{2, Scalar::one()}}).empty());

    // delta(Z2) = (1/r2)(Z1 (x) Z2 - Z2 (x) Z1), delta(z2) likewise on duals.
    CHECK(d.algebra.cocom_coeff(1, 0, 1) == Scalar::inv_sqrt2());
    CHECK(d.algebra.cocom_coeff(3, 2, 3) == Scalar::inv_sqrt2());
    CHECK(d.algebra.cocommutator_of(0).empty());
    CHECK(d.algebra.cocommutator_of(2).empty());

    CHECK(qlie::run_bialgebra_checks(d.algebra).all_ok());
    CHECK(qlie::check_pairing_invariance(d));

    // Default dual naming.
    const DoubleAlgebra d2 = qlie::build_double(qlie::su2_t1_half());
    CHECK(d2.algebra.generator_name(2) == "Z1^*");
}

TEST_CASE("mixed basis of the two generator double") {
    const DoubleAlgebra m = qlie::su2_t1_double_mixed();
    REQUIRE(m.algebra.generators() == std::vector<std::string>{"J3", "I", "J+", "J-"});

    // alpha = 1: [J+, J-] = J3 on the nose, no I component.
    const Element br = m.algebra.bracket(Element{{2, Scalar::one()}}, Element{{3, Scalar::one()}});
    REQUIRE(br.size() == 1);
    CHECK(br.at(0) == Scalar::one());

    // I is central.
    for (int x = 0; x < 4; ++x) {
        CHECK(m.algebra.bracket(Element{{1, Scalar::one()}}, Element{{x, Scalar::one()}}).empty());
    }

    // delta(J+) = 1/2 J3 /\ J+ + i/2 I /\ J+, delta(J-) mirrors with -i/2.
    const Scalar half(Rational(1, 2));
    const Scalar half_i = Scalar::i() * half;
    CHECK(m.algebra.cocom_coeff(2, 0, 2) == half);
    CHECK(m.algebra.cocom_coeff(2, 1, 2) == half_i);
    CHECK(m.algebra.cocom_coeff(3, 0, 3) == half);
    CHECK(m.algebra.cocom_coeff(3, 1, 3) == -half_i);
    CHECK(m.algebra.cocommutator_of(0).empty());
    CHECK(m.algebra.cocommutator_of(1).empty());

    // Pairing moved covariantly: <J3,J3> = <I,I> = <J+,J-> = 1, <J+,J+> = 0.
    CHECK(m.pairing[0][0] == Scalar::one());
    CHECK(m.pairing[1][1] == Scalar::one());
    CHECK(m.pairing[2][3] == Scalar::one());
    CHECK(m.pairing[2][2] == Scalar::zero());
    CHECK(m.pairing[0][1] == Scalar::zero());

    CHECK(qlie::run_bialgebra_checks(m.algebra).all_ok());
    CHECK(qlie::check_pairing_invariance(m));
}

TEST_CASE("dropping the central block recovers the builtin rotation bialgebra exactly") {
    const DoubleAlgebra m = qlie::su2_t1_double_mixed();
    const LieBialgebra reduced = qlie::drop_central_block(m.algebra, {1});
    const LieBialgebra su2 = qlie::builtin_su2();
    CHECK(reduced.generators() == su2.generators());
    CHECK(reduced.bracket_table() == su2.bracket_table());
    CHECK(reduced.cocom_table() == su2.cocom_table());
}

TEST_CASE("dropping non central or coalgebra active generators is refused") {
    const DoubleAlgebra m = qlie::su2_t1_double_mixed();
    CHECK_THROWS_AS(qlie::drop_central_block(m.algebra, {0}), qlie::NotCentralError);
    CHECK_THROWS_AS(qlie::drop_central_block(m.algebra, {2}), qlie::NotCentralError);

    LieBialgebra abelian({"X0", "X1", "X2"});
    abelian.set_cocommutator(0, 1, 2, Scalar(1));
    CHECK_THROWS_AS(qlie::drop_central_block(abelian, {0}), qlie::BadRequestError);
    CHECK(qlie::drop_central_block(abelian, {1, 2}).dim() == 1);
}

TEST_CASE("gl family halves are valid and self dual") {
    for (int N = 2; N <= 4; ++N) {
        CAPTURE(N);
        const LieBialgebra half = qlie::gl_tn_half(N);
        CHECK(half.dim() == N + N * (N - 1) / 2);
        CHECK(qlie::run_bialgebra_checks(half).all_ok());
        CHECK(qlie::is_self_dual_half(half));
    }
    CHECK_THROWS_AS(qlie::gl_tn_half(1), qlie::BadRequestError);
    CHECK_THROWS_AS(qlie::gl_tn_half(10), qlie::BadRequestError);

    // Frozen samples for N = 3: [Z1, Z12] = (1/r2) Z12, [Z12, Z23] = Z13,
    // [Z2, Z12] = -(1/r2) Z12.
    const LieBialgebra h3 = qlie::gl_tn_half(3);
    CHECK(h3.index_of("Z12") == 3);
    CHECK(h3.index_of("Z13") == 4);
    CHECK(h3.index_of("Z23") == 5);
    CHECK(h3.bracket_coeff(0, 3, 3) == Scalar::inv_sqrt2());
    CHECK(h3.bracket_coeff(1, 3, 3) == -Scalar::inv_sqrt2());
    CHECK(h3.bracket_coeff(2, 3, 3) == Scalar::zero());
    CHECK(h3.bracket_coeff(3, 5, 4) == Scalar::one());
    CHECK(h3.bracket_coeff(3, 4, 4) == Scalar::zero());
}

TEST_CASE("gl family doubles pass all checks and match the closed form cocommutator") {
    for (int N = 2; N <= 4; ++N) {
        CAPTURE(N);
        const DoubleAlgebra d = qlie::gl_tn_double_mixed(N);
        CHECK(d.algebra.dim() == N * N + N);
        CHECK(qlie::run_bialgebra_checks(d.algebra).all_ok());
        CHECK(qlie::check_pairing_invariance(d));
        CHECK(d.algebra.cocom_table() == qlie::canonical_gl_cocommutators(N));
    }
}

TEST_CASE("gl:2 mixed generator order and frozen entries") {
    const DoubleAlgebra d = qlie::gl_tn_double_mixed(2);
    CHECK(d.algebra.generators() ==
          std::vector<std::string>{"H1", "H2", "I1", "I2", "F12", "F21"});
    // delta(F12) = -1/2 F12 /\ (H1 - H2) - i/2 F12 /\ (I1 - I2):
    // on canonical pairs, w(H1 /\ F12) = +1/2, w(I1 /\ F12) = +i/2, ...
    const Scalar half(Rational(1, 2));
    const Scalar half_i = Scalar::i() * half;
    CHECK(d.algebra.cocom_coeff(4, 0, 4) == half);
    CHECK(d.algebra.cocom_coeff(4, 1, 4) == -half);
    CHECK(d.algebra.cocom_coeff(4, 2, 4) == half_i);
    CHECK(d.algebra.cocom_coeff(4, 3, 4) == -half_i);
    // delta(F21) = +1/2 F21 /\ (H2 - H1) - i/2 F21 /\ (I2 - I1):
    // w(H1 /\ F21) = +1/2, w(H2 /\ F21) = -1/2, w(I1 /\ F21) = -i/2, ...
    CHECK(d.algebra.cocom_coeff(5, 0, 5) == half);
    CHECK(d.algebra.cocom_coeff(5, 1, 5) == -half);
    CHECK(d.algebra.cocom_coeff(5, 2, 5) == -half_i);
    CHECK(d.algebra.cocom_coeff(5, 3, 5) == half_i);
    // [F12, F21] lies in the H/I span with real H coefficients.
    const Element br = d.algebra.bracket(Element{{4, Scalar::one()}}, Element{{5, Scalar::one()}});
    CHECK(!br.empty());
    for (const auto& [k, v] : br) CHECK(k < 4);
}

TEST_CASE("rescaling one root vector is incompatible with the double pairing") {
    const DoubleAlgebra d = qlie::gl_tn_double_mixed(2);
    REQUIRE(qlie::check_pairing_invariance(d));

    const auto m = identity_with(d.algebra.dim(), 4, Scalar(2)); // F12 -> 2 F12
    const LieBialgebra scaled = d.algebra.transformed(m, d.algebra.generators());
    // The rescaled structure is still a perfectly good bialgebra...
    CHECK(qlie::run_bialgebra_checks(scaled).all_ok());
    // ...but it no longer leaves the canonical pairing invariant.
    const DoubleAlgebra broken{scaled, d.pairing, d.half_dim};
    std::string detail;
    CHECK_FALSE(qlie::check_pairing_invariance(broken, &detail));
    CHECK(!detail.empty());
}

TEST_CASE("rescaling one root vector of a larger half destroys self duality") {
    const LieBialgebra half = qlie::gl_tn_half(3);
    REQUIRE(qlie::is_self_dual_half(half));

    const auto m = identity_with(half.dim(), 3, Scalar(2)); // Z12 -> 2 Z12
    const LieBialgebra scaled = half.transformed(m, half.generators());
    CHECK(qlie::run_bialgebra_checks(scaled).all_ok());
    CHECK_FALSE(qlie::is_self_dual_half(scaled));
    // Concretely: [Z12', Z23] = 2 Z13 while the cocommutator of Z13 only
    // carries 1/2 on the corresponding wedge.
    CHECK(scaled.bracket_coeff(3, 5, 4) == Scalar(2));
    CHECK(scaled.cocom_coeff(4, 3, 5) == Scalar(Rational(-1, 2)));
}

TEST_CASE("generic double of the builtin rotation bialgebra") {
    const DoubleAlgebra d = qlie::build_double(qlie::builtin_su2());
    CHECK(d.algebra.dim() == 6);
    CHECK(qlie::run_bialgebra_checks(d.algebra).all_ok());
    CHECK(qlie::check_pairing_invariance(d));
}

TEST_CASE("builtin registry") {
    CHECK(qlie::lookup_builtin("su2").dim() == 3);
    CHECK(qlie::lookup_builtin("su2+t1").dim() == 4);
    CHECK(qlie::lookup_builtin("su2+t1:half").dim() == 2);
    CHECK(qlie::lookup_builtin("gl:2").dim() == 6);
    CHECK(qlie::lookup_builtin("gl:3:half").dim() == 6);
    CHECK_THROWS_AS(qlie::lookup_builtin("gl:1"), qlie::UnknownBuiltinError);
    CHECK_THROWS_AS(qlie::lookup_builtin("gl:10"), qlie::UnknownBuiltinError);
    CHECK_THROWS_AS(qlie::lookup_builtin("so3"), qlie::UnknownBuiltinError);
    CHECK_FALSE(qlie::builtin_names().empty());
}
