#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "qlie/bialgebra.hpp"
#include "qlie/drinfeld_double.hpp"
#include "qlie/errors.hpp"
#include "qlie/linsolve.hpp"
#include "qlie/pbw.hpp"
#include "qlie/quantize.hpp"
#include "qlie/scalar.hpp"
#include "qlie/zseries.hpp"

using namespace qlie;

namespace {

constexpr int J3 = 0;
constexpr int JP = 1;
constexpr int JM = 2;

Scalar frac(long long n, long long d) { return Scalar::of_fraction(n, d); }

Monomial j3_power(int k) {
    Monomial m(3);
    for (int j = 0; j < k; ++j) m = m.times(J3);
    return m;
}

// Expected order-k coproduct layer of the raising/lowering generator:
//   (1/k!)(1/2)^k ( J3^k (x) Y + (-1)^k Y (x) J3^k )
std::map<PairMono, Scalar> expected_ladder_layer(int g, int k) {
    const Scalar c = factorial_scalar(k).inverse() * frac(1, 1LL << k);
    std::map<PairMono, Scalar> layer;
    layer.emplace(PairMono{j3_power(k), Monomial::generator(3, g)}, c);
    layer.emplace(PairMono{Monomial::generator(3, g), j3_power(k)}, (k % 2 == 0) ? c : -c);
    return layer;
}

// sinh(z J3)/z truncated: J3 + z^2 J3^3/3! + z^4 J3^5/5! + ...
UEAElement expected_sinh_entry(int zcap) {
    UEAElement e(3, zcap);
    e.add_term(0, j3_power(1), Scalar::one());
    for (int k = 2; k <= zcap; k += 2)
        e.add_term(k, j3_power(k + 1), factorial_scalar(k + 1).inverse());
    return e;
}

UEAElement gen_elem(int n, int g, int zcap) { return UEAElement::generator(n, g, zcap); }

int sign_weight(const Monomial& m) { return (m.exp(JP) + m.exp(JM)) % 2 ? -1 : 1; }

} // namespace

TEST_CASE("monomials_of_degree: counts and order") {
    CHECK(monomials_of_degree(3, 0).size() == 1);
    CHECK(monomials_of_degree(3, 1).size() == 3);
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(3, 3).size() == 10);
    CHECK(monomials_of_degree(3, 7).size() == 36);
    CHECK(monomials_of_degree(1, 5).size() == 1);

    const auto ms = monomials_of_degree(3, 2);
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(ms[i] < ms[i + 1]);
    for (const Monomial& m : ms) CHECK(m.degree() == 2);
    CHECK_THROWS_AS((void)monomials_of_degree(0, 2), BadRequestError);
}

TEST_CASE("gauge_tensor: mixed splits of low-degree monomials") {
    // P = J3 J+: Delta0(P) minus unit splits = J3 (x) J+ + J+ (x) J3.
    const Monomial p1 = j3_power(1).times(JP);
    const auto g1 = gauge_tensor(p1);
    CHECK(g1.size() == 2);
    CHECK(g1.at(PairMono{j3_power(1), Monomial::generator(3, JP)}) == Scalar::one());
    CHECK(g1.at(PairMono{Monomial::generator(3, JP), j3_power(1)}) == Scalar::one());

    // P = J3^2: the mixed split carries the binomial coefficient 2.
    const auto g2 = gauge_tensor(j3_power(2));
    CHECK(g2.size() == 1);
    CHECK(g2.at(PairMono{j3_power(1), j3_power(1)}) == Scalar(2));

    // P = J3^2 J+: four mixed coordinates with multinomial weights.
    const auto g3 = gauge_tensor(j3_power(2).times(JP));
    CHECK(g3.size() == 4);
    CHECK(g3.at(PairMono{j3_power(1), j3_power(1).times(JP)}) == Scalar(2));
    CHECK(g3.at(PairMono{j3_power(1).times(JP), j3_power(1)}) == Scalar(2));
    CHECK(g3.at(PairMono{j3_power(2), Monomial::generator(3, JP)}) == Scalar::one());
    CHECK(g3.at(PairMono{Monomial::generator(3, JP), j3_power(2)}) == Scalar::one());

    CHECK_THROWS_AS((void)gauge_tensor(j3_power(1)), BadRequestError);
}

TEST_CASE("quantize su(2) through z^6: closed-form coproduct and sinh bracket") {
    const LieBialgebra b = builtin_su2();
    const QuantizationResult r = quantize(b, 6);

    CHECK(r.order == 6);
    CHECK(r.degree_cap == 8);
    CHECK(r.warnings.empty());

    // The canonical correction is unique at every order.
    REQUIRE(r.residual_gauge_dims.size() == 6);
    for (int d : r.residual_gauge_dims) CHECK(d == 0);

    // Frozen second and third order layers of Delta(J+).
    {
        const auto layer2 = r.coproduct.image(JP).layer(2);
        REQUIRE(layer2.size() == 2);
        CHECK(layer2.at(PairMono{j3_power(2), Monomial::generator(3, JP)}) == frac(1, 8));
        CHECK(layer2.at(PairMono{Monomial::generator(3, JP), j3_power(2)}) == frac(1, 8));

        const auto layer3 = r.coproduct.image(JP).layer(3);
        REQUIRE(layer3.size() == 2);
        CHECK(layer3.at(PairMono{j3_power(3), Monomial::generator(3, JP)}) == frac(1, 48));
        CHECK(layer3.at(PairMono{Monomial::generator(3, JP), j3_power(3)}) == frac(-1, 48));
    }

    // Full ladder pattern at every order for both J+ and J-.
    for (int g : {JP, JM})
        for (int k = 1; k <= 6; ++k) CHECK(r.coproduct.image(g).layer(k) == expected_ladder_layer(g, k));

    // Delta(J3) stays primitive at every order.
    for (int k = 1; k <= 6; ++k) CHECK(r.coproduct.image(J3).layer(k).empty());

    // Deformed commutator table: [J3, J+/-] undeformed, [J+,J-] = sinh(z J3)/z.
    CHECK(r.algebra.table_entry(J3, JP) == gen_elem(3, JP, 6));
    CHECK(r.algebra.table_entry(J3, JM) == -gen_elem(3, JM, 6));
    CHECK(r.algebra.table_entry(JP, JM) == expected_sinh_entry(6));

    // Closed forms are recognized for every generator and bracket.
    REQUIRE(r.recognized_coproducts.count("J+") == 1);
    const FactoredCoproduct& fp = r.recognized_coproducts.at("J+");
    CHECK(fp.argument == J3);
    CHECK(fp.left.pattern == SeriesPattern::exponential);
    CHECK(fp.left.rate == frac(1, 2));
    CHECK(fp.right.pattern == SeriesPattern::exponential);
    CHECK(fp.right.rate == frac(-1, 2));
    CHECK(render_factored_coproduct(r.algebra, fp) ==
          "exp((1/2) z J3) (x) J+ + J+ (x) exp((-1/2) z J3)");

    REQUIRE(r.recognized_coproducts.count("J-") == 1);
    CHECK(r.recognized_coproducts.at("J-").left.rate == frac(1, 2));
    CHECK(r.recognized_coproducts.at("J-").right.rate == frac(-1, 2));

    REQUIRE(r.recognized_coproducts.count("J3") == 1);
    CHECK(r.recognized_coproducts.at("J3").left.pattern == SeriesPattern::polynomial);

    REQUIRE(r.recognized_commutators.count("[J+,J-]") == 1);
    const SeriesClosedForm& sf = r.recognized_commutators.at("[J+,J-]");
    CHECK(sf.argument == J3);
    CHECK(sf.form.pattern == SeriesPattern::sinh_over_arg);
    CHECK(sf.form.rate == Scalar::one());
    REQUIRE(r.recognized_commutators.count("[J3,J+]") == 1);
    CHECK(r.recognized_commutators.at("[J3,J+]").form.pattern == SeriesPattern::polynomial);
    CHECK(r.recognized_commutators.at("[J3,J+]").form.rate == Scalar::one());
    REQUIRE(r.recognized_commutators.count("[J3,J-]") == 1);
    CHECK(r.recognized_commutators.at("[J3,J-]").form.rate == Scalar(-1));
}

TEST_CASE("quantize su(2): sign involution J+/- -> -J+/- commutes with the deformation") {
    // The diagonal sign map is a bialgebra automorphism, so every computed
    // coproduct layer and table entry must be sign-homogeneous: coefficient
    // sign weight of each term matches the weight of its generator/bracket.
    const QuantizationResult r = quantize(builtin_su2(), 4);
    for (int g = 0; g < 3; ++g) {
        const int sg = (g == J3) ? 1 : -1;
        for (const auto& [key, v] : r.coproduct.image(g).terms()) {
            (void)v;
            CHECK(sign_weight(key.slots.left) * sign_weight(key.slots.right) == sg);
        }
    }
    for (int p = 0; p < 3; ++p)
        for (int q = p + 1; q < 3; ++q) {
            const int spq = ((p == J3) ? 1 : -1) * ((q == J3) ? 1 : -1);
            const UEAElement entry = r.algebra.table_entry(p, q);
            for (const auto& [key, v] : entry.terms()) {
                (void)v;
                CHECK(sign_weight(key.mono) == spq);
            }
        }
}

TEST_CASE("extract_cocommutator: round trip for builtin structures") {
    for (const std::string name : {"su2", "su2+t1", "su2+t1:half"}) {
        const LieBialgebra b = lookup_builtin(name);
        const QuantizationResult r = quantize(b, 2);
        CHECK(extract_cocommutator(r) == b.cocom_table());
    }
    for (const std::string name : {"gl:2", "gl:2:half", "gl:3"}) {
        const LieBialgebra b = lookup_builtin(name);
        const QuantizationResult r = quantize(b, 1);
        CHECK(extract_cocommutator(r) == b.cocom_table());
    }
}

TEST_CASE("quantize su2+t1 double: exact through z^3 with unique corrections") {
    const LieBialgebra b = lookup_builtin("su2+t1");
    const QuantizationResult r = quantize(b, 3);
    REQUIRE(r.residual_gauge_dims.size() == 3);
    for (int d : r.residual_gauge_dims) CHECK(d == 0);
    CHECK(extract_cocommutator(r) == b.cocom_table());
    // Order-0 normalization: the classical table is untouched.
    const UEA classical_u = UEA::classical(b, 3);
    for (int p = 0; p < b.dim(); ++p)
        for (int q = p + 1; q < b.dim(); ++q)
            CHECK(r.algebra.table_entry(p, q).layer(0) ==
                  classical_u.table_entry(p, q).layer(0));
}

TEST_CASE("quantize with zero cocommutator: nothing deforms") {
    LieBialgebra b({"X", "Y", "Z"});
    b.set_bracket(0, 1, 2, Scalar::one()); // [X,Y] = Z, Z central: Heisenberg
    const QuantizationResult r = quantize(b, 4);
    REQUIRE(r.residual_gauge_dims.size() == 4);
    for (int d : r.residual_gauge_dims) CHECK(d == 0);
    for (int g = 0; g < 3; ++g)
        for (const auto& [key, v] : r.coproduct.image(g).terms()) {
            (void)v;
            CHECK(key.zord == 0);
        }
    CHECK(r.algebra.table_entry(0, 1) == gen_elem(3, 2, 4));
    CHECK(r.algebra.table_entry(0, 2).is_zero());
    // Every generator is recognized as primitive (unit factors).
    CHECK(r.recognized_coproducts.size() == 3);
    for (const auto& [name, f] : r.recognized_coproducts) {
        (void)name;
        CHECK(f.left.pattern == SeriesPattern::polynomial);
        CHECK(f.left.rate == Scalar::one());
    }
    CHECK(extract_cocommutator(r).empty());
}

TEST_CASE("quantize: input validation and degree cap") {
    // su(2) brackets with a cocommutator that fails the cocycle identity.
    LieBialgebra bad({"J3", "J+", "J-"});
    bad.set_bracket(J3, JP, JP, Scalar::one());
    bad.set_bracket(J3, JM, JM, Scalar(-1));
    bad.set_bracket(JP, JM, J3, Scalar::one());
    bad.set_cocommutator(J3, JP, JM, Scalar::one());
    CHECK_THROWS_AS((void)quantize(bad, 2), BadRequestError);

    CHECK_THROWS_AS((void)quantize(builtin_su2(), -1), BadRequestError);
    CHECK_THROWS_AS((void)quantize(builtin_su2(), 2, 0), BadRequestError);

    // Degree cap 2 admits order 1 but blocks order 2.
    CHECK_THROWS_AS((void)quantize(builtin_su2(), 3, 2), NoSolutionError);
    const QuantizationResult ok = quantize(builtin_su2(), 1, 2);
    CHECK(ok.residual_gauge_dims.size() == 1);

    // Order 0 runs but holds no first-order data.
    const QuantizationResult r0 = quantize(builtin_su2(), 0);
    CHECK(r0.residual_gauge_dims.empty());
    CHECK_THROWS_AS((void)extract_cocommutator(r0), BadRequestError);
}

TEST_CASE("friedrichs_primitivize: frozen cubic perturbation of su(2)") {
    const UEA u = UEA::classical(builtin_su2(), 0);
    // Y3 = J3 + J3^2, Y+/- = J+/- + J3^2 J+/-.
    std::vector<UEAElement> basis;
    {
        UEAElement y3 = gen_elem(3, J3, 0);
        y3.add_term(0, j3_power(2), Scalar::one());
        UEAElement yp = gen_elem(3, JP, 0);
        yp.add_term(0, j3_power(2).times(JP), Scalar::one());
        UEAElement ym = gen_elem(3, JM, 0);
        ym.add_term(0, j3_power(2).times(JM), Scalar::one());
        basis = {y3, yp, ym};
    }
    const PrimitivizeResult res = friedrichs_primitivize(u, basis, 4);
    CHECK(res.recovered[0] == gen_elem(3, J3, 0));
    CHECK(res.recovered[1] == gen_elem(3, JP, 0));
    CHECK(res.recovered[2] == gen_elem(3, JM, 0));
    // One subtraction per element, at z^0 and the degree of the tail.
    REQUIRE(res.log.size() == 3);
    CHECK(res.log[0].generator == 0);
    CHECK(res.log[0].degree == 2);
    CHECK(res.log[1].generator == 1);
    CHECK(res.log[1].degree == 3);
    CHECK(res.log[0].zord == 0);
}

TEST_CASE("friedrichs_primitivize: seeded random scrambles recover the linear part") {
    const UEA u = UEA::classical(builtin_su2(), 0);
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coef(-3, 3);

    const auto deg23 = [&]() {
        std::vector<Monomial> ms;
        for (int d = 2; d <= 3; ++d)
            for (const Monomial& m : monomials_of_degree(3, d)) ms.push_back(m);
        return ms;
    }();

    for (int trial = 0; trial < 20; ++trial) {
        // Random invertible linear part.
        DenseMatrix a;
        while (true) {
            a.assign(3, std::vector<Scalar>(3, Scalar::zero()));
            for (auto& row : a)
                for (auto& x : row) x = Scalar(coef(rng));
            try {
                (void)dense_inverse(a);
                break;
            } catch (const NonInvertibleBasisError&) {
            }
        }
        std::vector<UEAElement> basis;
        std::vector<UEAElement> linear_parts;
        for (int i = 0; i < 3; ++i) {
            UEAElement lin(3, 0);
            for (int j = 0; j < 3; ++j)
                if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero())
                    lin.add_term(0, Monomial::generator(3, j),
                                 a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            UEAElement x = lin;
            // Random junk of degree 2..3 plus a constant.
            x.add_term(0, Monomial::unit(3), Scalar(coef(rng)));
            for (int t = 0; t < 4; ++t) {
                const Monomial& m = deg23[std::uniform_int_distribution<std::size_t>(
                    0, deg23.size() - 1)(rng)];
                x.add_term(0, m, Scalar(coef(rng)));
            }
            basis.push_back(std::move(x));
            linear_parts.push_back(std::move(lin));
        }
        const PrimitivizeResult res = friedrichs_primitivize(u, basis, 4);
        for (int i = 0; i < 3; ++i) CHECK(res.recovered[static_cast<std::size_t>(i)] ==
                                          linear_parts[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("friedrichs_primitivize: deformed coproduct variant") {
    const QuantizationResult r = quantize(builtin_su2(), 3);
    // Scramble with z-dependent tails; recovery must reach the exact
    // generators, whose coproducts are the stored analytic images.
    std::vector<UEAElement> basis;
    {
        UEAElement y3 = gen_elem(3, J3, 3);
        y3.add_term(1, j3_power(2), frac(1, 2));
        UEAElement yp = gen_elem(3, JP, 3);
        yp.add_term(0, j3_power(2).times(JP), Scalar::one());
        yp.add_term(1, j3_power(1).times(JP), Scalar(2));
        yp.add_term(2, j3_power(3), frac(-3, 4));
        UEAElement ym = gen_elem(3, JM, 3);
        ym.add_term(3, Monomial::unit(3), Scalar::one()); // constant tail
        basis = {y3, yp, ym};
    }
    const PrimitivizeResult res = friedrichs_primitivize(r.algebra, r.coproduct, basis, 4);
    CHECK(res.recovered[0] == gen_elem(3, J3, 3));
    CHECK(res.recovered[1] == gen_elem(3, JP, 3));
    CHECK(res.recovered[2] == gen_elem(3, JM, 3));
}

TEST_CASE("friedrichs_primitivize: rejects a singular linear part") {
    const UEA u = UEA::classical(builtin_su2(), 0);
    UEAElement y1 = gen_elem(3, J3, 0);
    UEAElement y2 = gen_elem(3, J3, 0); // same linear part twice
    y2.add_term(0, j3_power(2), Scalar::one());
    UEAElement y3 = gen_elem(3, JM, 0);
    CHECK_THROWS_AS((void)friedrichs_primitivize(u, {y1, y2, y3}, 4), NonInvertibleBasisError);
    CHECK_THROWS_AS((void)friedrichs_primitivize(u, {y1, y2}, 4), BadRequestError);
}
