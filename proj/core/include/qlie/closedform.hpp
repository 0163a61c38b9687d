#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlie/pbw.hpp"
#include "qlie/scalar.hpp"

namespace qlie {

// The fixed pattern library for coefficient-series recognition.  These are
// exactly the shapes that appear in the summed results of the deformation
// procedure; recognition verifies every coefficient and never fits loosely.
enum class SeriesPattern { polynomial, exponential, sinh_over_arg, cosh };

struct ClosedForm {
    SeriesPattern pattern = SeriesPattern::polynomial;
    // exponential / sinh_over_arg / cosh: the rate r; polynomial: the
    // constant term (the only polynomial shape recognized is a constant).
    Scalar rate = Scalar::zero();
    int verified_order = 0; // coefficients 0..verified_order matched exactly
};

// k-th coefficient of the reference series:
//   polynomial(c):    c, 0, 0, ...
//   exponential(r):   r^k / k!
//   sinh_over_arg(r): r^k / (k+1)!  (even k), 0 (odd k)   [sinh(rx)/(rx)]
//   cosh(r):          r^k / k!      (even k), 0 (odd k)
Scalar pattern_coefficient(SeriesPattern pattern, const Scalar& rate, int k);

// Recognize coeffs[k] (k = 0..K) as one of the patterns: constant series ->
// polynomial; c1 != 0 -> exponential with rate c1; c1 = 0 -> sinh_over_arg
// (rate^2 = 6 c2) then cosh (rate^2 = 2 c2), each only when the rate exists
// in the scalar field.  Every remaining coefficient must match exactly,
// otherwise nothing is returned.  Needs at least three coefficients.
std::optional<ClosedForm> recognize_factor(const std::vector<Scalar>& coeffs);

// Two-sided factored coproduct  F(z H) (x) Y  +  Y (x) G(z H)  where H is a
// generator whose coproduct stays primitive at every stored order.
struct FactoredCoproduct {
    int generator = 0;
    int argument = 0; // H; equals `generator` for a fully primitive image
    ClosedForm left, right;
    int verified_order = 0;
};

std::optional<FactoredCoproduct> factor_coproduct(const Coproduct& cop, int generator);

// Closed form of a z-series element whose z^k layer is c_k H^(k+1) for one
// fixed generator H (the shape of deformed brackets such as sinh(z H)/z).
struct SeriesClosedForm {
    int argument = 0;
    ClosedForm form;
    int verified_order = 0;
};

std::optional<SeriesClosedForm> recognize_single_power_series(const UEAElement& entry);

std::string pattern_name(SeriesPattern pattern);

// The scalar-function factor, e.g. "exp((1/2) z J3)",
// "sinh((1) z J3) / ((1) z J3)", "cosh((1) z J3)", "1", "(2)".
std::string render_closed_form(const ClosedForm& form, const std::string& argname);

// e.g. "exp((1/2) z J3) (x) J+ + J+ (x) exp((-1/2) z J3)"
std::string render_factored_coproduct(const UEA& u, const FactoredCoproduct& f);

// The element-valued series sum_k c_k z^k H^(k+1), e.g.
// "sinh((1) z J3) / ((1) z)" or "J+ exp((1/3) z J+)" or "(1) J+".
std::string render_series_closed_form(const UEA& u, const SeriesClosedForm& s);

} // namespace qlie
