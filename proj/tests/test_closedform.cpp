#include <optional>
#include <vector>

#include "doctest.h"
#include "qlie/bialgebra.hpp"
#include "qlie/closedform.hpp"
#include "qlie/errors.hpp"
#include "qlie/pbw.hpp"
#include "qlie/scalar.hpp"
#include "qlie/zseries.hpp"

using namespace qlie;

namespace {

constexpr int J3 = 0;
constexpr int JP = 1;
constexpr int JM = 2;

Scalar frac(long long n, long long d) { return Scalar::of_fraction(n, d); }

std::vector<Scalar> seq(std::initializer_list<Scalar> xs) { return std::vector<Scalar>(xs); }

// Deformed su(2) commutator table: [J+,J-] = sinh-type series in J3.
UEA deformed_su2(int zcap) {
    UEA u = UEA::classical(builtin_su2(), zcap);
    UEAElement sinh_entry(3, zcap);
    Monomial j3 = Monomial::generator(3, J3);
    sinh_entry.add_term(0, j3, Scalar::one());
    if (zcap >= 2) sinh_entry.add_term(2, j3.times(j3).times(j3), frac(1, 6));
    if (zcap >= 4)
        sinh_entry.add_term(4, j3.times(j3).times(j3).times(j3).times(j3), frac(1, 120));
    u.set_table_entry(JP, JM, sinh_entry);
    return u;
}

// The exp-pattern coproduct of the deformed su(2):
//   image(J+/-) layer k = (1/k!)(1/2)^k (J3^k (x) J+/- + (-1)^k J+/- (x) J3^k)
Coproduct exp_pattern_coproduct(int zcap) {
    Coproduct cop(3, zcap);
    for (int g : {JP, JM}) {
        Monomial y = Monomial::generator(3, g);
        for (int k = 1; k <= zcap; ++k) {
            Monomial h(3);
            for (int j = 0; j < k; ++j) h = h.times(J3);
            Scalar c = factorial_scalar(k).inverse() * frac(1, 1 << k);
            std::map<PairMono, Scalar> layer;
            layer.emplace(PairMono{h, y}, c);
            layer.emplace(PairMono{y, h}, (k % 2 == 0) ? c : -c);
            cop.add_image_layer(g, k, layer);
        }
    }
    return cop;
}

} // namespace

TEST_CASE("pattern coefficients: reference series") {
    const Scalar half = frac(1, 2);
    CHECK(pattern_coefficient(SeriesPattern::exponential, half, 0) == Scalar::one());
    CHECK(pattern_coefficient(SeriesPattern::exponential, half, 1) == half);
    CHECK(pattern_coefficient(SeriesPattern::exponential, half, 2) == frac(1, 8));
    CHECK(pattern_coefficient(SeriesPattern::exponential, half, 3) == frac(1, 48));

    CHECK(pattern_coefficient(SeriesPattern::sinh_over_arg, Scalar::one(), 0) == Scalar::one());
    CHECK(pattern_coefficient(SeriesPattern::sinh_over_arg, Scalar::one(), 1) == Scalar::zero());
    CHECK(pattern_coefficient(SeriesPattern::sinh_over_arg, Scalar::one(), 2) == frac(1, 6));
    CHECK(pattern_coefficient(SeriesPattern::sinh_over_arg, Scalar::one(), 4) == frac(1, 120));

    CHECK(pattern_coefficient(SeriesPattern::cosh, Scalar::one(), 2) == frac(1, 2));
    CHECK(pattern_coefficient(SeriesPattern::cosh, Scalar::one(), 4) == frac(1, 24));
    CHECK(pattern_coefficient(SeriesPattern::cosh, Scalar::one(), 3) == Scalar::zero());

    CHECK(pattern_coefficient(SeriesPattern::polynomial, frac(7, 3), 0) == frac(7, 3));
    CHECK(pattern_coefficient(SeriesPattern::polynomial, frac(7, 3), 5) == Scalar::zero());
}

TEST_CASE("recognize_factor: frozen examples") {
    auto exp_half = recognize_factor(seq({Scalar::one(), frac(1, 2), frac(1, 8), frac(1, 48)}));
    REQUIRE(exp_half.has_value());
    CHECK(exp_half->pattern == SeriesPattern::exponential);
    CHECK(exp_half->rate == frac(1, 2));
    CHECK(exp_half->verified_order == 3);

    auto sinh_one = recognize_factor(
        seq({Scalar::one(), Scalar::zero(), frac(1, 6), Scalar::zero(), frac(1, 120)}));
    REQUIRE(sinh_one.has_value());
    CHECK(sinh_one->pattern == SeriesPattern::sinh_over_arg);
    CHECK(sinh_one->rate == Scalar::one());
    CHECK(sinh_one->verified_order == 4);

    auto cosh_one = recognize_factor(
        seq({Scalar::one(), Scalar::zero(), frac(1, 2), Scalar::zero(), frac(1, 24)}));
    REQUIRE(cosh_one.has_value());
    CHECK(cosh_one->pattern == SeriesPattern::cosh);
    CHECK(cosh_one->rate == Scalar::one());

    auto constant = recognize_factor(seq({Scalar::one(), Scalar::zero(), Scalar::zero()}));
    REQUIRE(constant.has_value());
    CHECK(constant->pattern == SeriesPattern::polynomial);
    CHECK(constant->rate == Scalar::one());

    auto zero = recognize_factor(seq({Scalar::zero(), Scalar::zero(), Scalar::zero()}));
    REQUIRE(zero.has_value());
    CHECK(zero->pattern == SeriesPattern::polynomial);
    CHECK(zero->rate == Scalar::zero());

    auto five = recognize_factor(seq({Scalar(5), Scalar::zero(), Scalar::zero()}));
    REQUIRE(five.has_value());
    CHECK(five->rate == Scalar(5));
}

TEST_CASE("recognize_factor: irrational rates through restricted square roots") {
    // exp(r2 * x): 1, r2, 1, r2/3
    auto exp_r2 = recognize_factor(
        seq({Scalar::one(), Scalar::sqrt2(), Scalar::one(), Scalar::sqrt2() * frac(1, 3)}));
    REQUIRE(exp_r2.has_value());
    CHECK(exp_r2->pattern == SeriesPattern::exponential);
    CHECK(exp_r2->rate == Scalar::sqrt2());

    // sinh(r2 x)/(r2 x): even coefficients 2^k / (2k+1)!? -> c2 = 2/6 = 1/3, c4 = 4/120 = 1/30
    auto sinh_r2 = recognize_factor(
        seq({Scalar::one(), Scalar::zero(), frac(1, 3), Scalar::zero(), frac(1, 30)}));
    REQUIRE(sinh_r2.has_value());
    CHECK(sinh_r2->pattern == SeriesPattern::sinh_over_arg);
    CHECK(sinh_r2->rate * sinh_r2->rate == Scalar(2));

    // c2 = 1: sinh needs rate^2 = 6 (no root in the field), cosh rate^2 = 2 works.
    auto cosh_r2 = recognize_factor(
        seq({Scalar::one(), Scalar::zero(), Scalar::one(), Scalar::zero(), frac(1, 6)}));
    REQUIRE(cosh_r2.has_value());
    CHECK(cosh_r2->pattern == SeriesPattern::cosh);
    CHECK(cosh_r2->rate * cosh_r2->rate == Scalar(2));
}

TEST_CASE("recognize_factor: conservative rejection") {
    // One perturbed coefficient defeats the whole fit.
    CHECK(!recognize_factor(seq({Scalar::one(), frac(1, 2), frac(1, 8), frac(1, 49)})).has_value());
    CHECK(!recognize_factor(
               seq({Scalar::one(), Scalar::zero(), frac(1, 6), frac(1, 100), frac(1, 120)}))
               .has_value());
    // Tail coefficient without matching lower pattern.
    CHECK(!recognize_factor(seq({Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::one()}))
               .has_value());
    // Leading coefficient must be one for the analytic patterns.
    CHECK(!recognize_factor(seq({Scalar(2), Scalar(2), Scalar::one()})).has_value());
    // Too short to verify anything.
    CHECK(!recognize_factor(seq({Scalar::one(), frac(1, 2)})).has_value());
    CHECK(!recognize_factor({}).has_value());
    // Rate would need sqrt(6): not available in the scalar field.
    CHECK(!recognize_factor(seq({Scalar::one(), Scalar::zero(), Scalar::one(), Scalar::zero(),
                                 frac(1, 5)}))
               .has_value());
}

TEST_CASE("factor_coproduct: deformed su(2) raising and lowering generators") {
    UEA u = deformed_su2(4);
    Coproduct cop = exp_pattern_coproduct(4);

    auto fp = factor_coproduct(cop, JP);
    REQUIRE(fp.has_value());
    CHECK(fp->generator == JP);
    CHECK(fp->argument == J3);
    CHECK(fp->left.pattern == SeriesPattern::exponential);
    CHECK(fp->left.rate == frac(1, 2));
    CHECK(fp->right.pattern == SeriesPattern::exponential);
    CHECK(fp->right.rate == frac(-1, 2));
    CHECK(fp->verified_order == 4);
    CHECK(render_factored_coproduct(u, *fp) ==
          "exp((1/2) z J3) (x) J+ + J+ (x) exp((-1/2) z J3)");

    auto fm = factor_coproduct(cop, JM);
    REQUIRE(fm.has_value());
    CHECK(fm->argument == J3);
    CHECK(fm->left.rate == frac(1, 2));
    CHECK(fm->right.rate == frac(-1, 2));

    auto f3 = factor_coproduct(cop, J3);
    REQUIRE(f3.has_value());
    CHECK(f3->argument == J3);
    CHECK(f3->left.pattern == SeriesPattern::polynomial);
    CHECK(f3->left.rate == Scalar::one());
    CHECK(render_factored_coproduct(u, *f3) == "1 (x) J3 + J3 (x) 1");
}

TEST_CASE("factor_coproduct: rejects shapes outside the two-sided pattern") {
    // Mixed J3 (x) J3 term in the J+ image.
    {
        Coproduct cop = exp_pattern_coproduct(4);
        std::map<PairMono, Scalar> bad;
        bad.emplace(PairMono{Monomial::generator(3, J3), Monomial::generator(3, J3)},
                    Scalar::one());
        cop.add_image_layer(JP, 3, bad);
        CHECK(!factor_coproduct(cop, JP).has_value());
    }
    // Two different single-power arguments across layers.
    {
        Coproduct cop = exp_pattern_coproduct(2);
        std::map<PairMono, Scalar> other;
        other.emplace(PairMono{Monomial::generator(3, JM), Monomial::generator(3, JP)},
                      Scalar::one());
        cop.add_image_layer(JP, 1, other);
        CHECK(!factor_coproduct(cop, JP).has_value());
    }
    // The argument generator must itself stay primitive.
    {
        Coproduct cop = exp_pattern_coproduct(4);
        std::map<PairMono, Scalar> deform;
        deform.emplace(PairMono{Monomial::generator(3, JP), Monomial::generator(3, JM)},
                       Scalar::one());
        cop.add_image_layer(J3, 2, deform);
        CHECK(!factor_coproduct(cop, JP).has_value());
    }
    CHECK_THROWS_AS((void)factor_coproduct(exp_pattern_coproduct(2), 7), BadRequestError);
}

TEST_CASE("recognize_single_power_series: deformed bracket profiles") {
    UEA u = deformed_su2(4);

    auto sinh_form = recognize_single_power_series(u.table_entry(JP, JM));
    REQUIRE(sinh_form.has_value());
    CHECK(sinh_form->argument == J3);
    CHECK(sinh_form->form.pattern == SeriesPattern::sinh_over_arg);
    CHECK(sinh_form->form.rate == Scalar::one());
    CHECK(sinh_form->verified_order == 4);
    CHECK(render_series_closed_form(u, *sinh_form) == "sinh((1) z J3) / ((1) z)");

    auto plus = recognize_single_power_series(u.table_entry(J3, JP));
    REQUIRE(plus.has_value());
    CHECK(plus->argument == JP);
    CHECK(plus->form.pattern == SeriesPattern::polynomial);
    CHECK(plus->form.rate == Scalar::one());
    CHECK(render_series_closed_form(u, *plus) == "(1) J+");

    auto minus = recognize_single_power_series(u.table_entry(J3, JM));
    REQUIRE(minus.has_value());
    CHECK(minus->form.rate == Scalar(-1));
    CHECK(render_series_closed_form(u, *minus) == "(-1) J-");
}

TEST_CASE("recognize_single_power_series: rejection cases") {
    // Zero element: no base generator to anchor the profile.
    CHECK(!recognize_single_power_series(UEAElement(3, 4)).has_value());

    // Mixed monomial in a layer.
    {
        UEAElement e(3, 4);
        e.add_term(0, Monomial::generator(3, J3), Scalar::one());
        e.add_term(2, Monomial::generator(3, J3).times(JP).times(JP), frac(1, 6));
        CHECK(!recognize_single_power_series(e).has_value());
    }
    // Wrong power for the layer (z^2 layer must carry H^3).
    {
        UEAElement e(3, 4);
        e.add_term(0, Monomial::generator(3, J3), Scalar::one());
        e.add_term(2, Monomial::generator(3, J3).times(J3), frac(1, 6));
        CHECK(!recognize_single_power_series(e).has_value());
    }
    // Degree-0 leading layer.
    {
        UEAElement e(3, 4);
        e.add_term(0, Monomial::unit(3), Scalar::one());
        CHECK(!recognize_single_power_series(e).has_value());
    }
    // Too shallow to verify (needs z^2 at least).
    {
        UEAElement e(3, 1);
        e.add_term(0, Monomial::generator(3, J3), Scalar::one());
        CHECK(!recognize_single_power_series(e).has_value());
    }
}

TEST_CASE("closed-form rendering") {
    CHECK(pattern_name(SeriesPattern::exponential) == "exp");
    CHECK(pattern_name(SeriesPattern::sinh_over_arg) == "sinh_over_arg");

    ClosedForm exp_half{SeriesPattern::exponential, frac(1, 2), 4};
    CHECK(render_closed_form(exp_half, "J3") == "exp((1/2) z J3)");

    ClosedForm exp_neg{SeriesPattern::exponential, frac(-1, 2), 4};
    CHECK(render_closed_form(exp_neg, "J3") == "exp((-1/2) z J3)");

    ClosedForm sinh_one{SeriesPattern::sinh_over_arg, Scalar::one(), 4};
    CHECK(render_closed_form(sinh_one, "H") == "sinh((1) z H) / ((1) z H)");

    ClosedForm cosh_r2{SeriesPattern::cosh, Scalar::sqrt2(), 4};
    CHECK(render_closed_form(cosh_r2, "H") == "cosh((1*r2) z H)");

    ClosedForm unit_poly{SeriesPattern::polynomial, Scalar::one(), 4};
    CHECK(render_closed_form(unit_poly, "H") == "1");
    ClosedForm const_poly{SeriesPattern::polynomial, frac(-3, 2), 4};
    CHECK(render_closed_form(const_poly, "H") == "(-3/2)");
}
