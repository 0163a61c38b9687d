#include "qlie/closedform.hpp"

#include <cstddef>

#include "qlie/errors.hpp"
#include "qlie/zseries.hpp"

namespace qlie {

namespace {

Scalar scalar_pow(const Scalar& base, int k) {
    Scalar out = Scalar::one();
    for (int j = 0; j < k; ++j) out = out * base;
    return out;
}

} // namespace

Scalar pattern_coefficient(SeriesPattern pattern, const Scalar& rate, int k) {
    if (k < 0) throw BadRequestError("pattern_coefficient: negative index");
    switch (pattern) {
    case SeriesPattern::polynomial:
        return k == 0 ? rate : Scalar::zero();
    case SeriesPattern::exponential:
        return scalar_pow(rate, k) * factorial_scalar(k).inverse();
    case SeriesPattern::sinh_over_arg:
        if (k % 2 != 0) return Scalar::zero();
        return scalar_pow(rate, k) * factorial_scalar(k + 1).inverse();
    case SeriesPattern::cosh:
        if (k % 2 != 0) return Scalar::zero();
        return scalar_pow(rate, k) * factorial_scalar(k).inverse();
    }
    throw BadRequestError("pattern_coefficient: unknown pattern");
}

std::optional<ClosedForm> recognize_factor(const std::vector<Scalar>& coeffs) {
    if (coeffs.size() < 3) return std::nullopt;
    const int order = static_cast<int>(coeffs.size()) - 1;

    auto verified = [&](SeriesPattern pattern, const Scalar& rate) -> std::optional<ClosedForm> {
        for (int k = 0; k <= order; ++k) {
            if (coeffs[static_cast<std::size_t>(k)] != pattern_coefficient(pattern, rate, k))
                return std::nullopt;
        }
        return ClosedForm{pattern, rate, order};
    };

    // A constant series is a (degenerate) polynomial; the constant may be
    // anything, including zero or one.
    if (auto f = verified(SeriesPattern::polynomial, coeffs[0])) return f;

    // The analytic patterns are normalized with constant term one.
    if (coeffs[0] != Scalar::one()) return std::nullopt;

    if (!coeffs[1].is_zero()) return verified(SeriesPattern::exponential, coeffs[1]);

    // Even series: rate^2 = 6 c2 (sinh x / x) tried before rate^2 = 2 c2
    // (cosh x).  Both are even in the rate, so either square root works.
    Scalar rate = Scalar::zero();
    if ((coeffs[2] * Scalar::of_fraction(6, 1)).try_sqrt(rate)) {
        if (auto f = verified(SeriesPattern::sinh_over_arg, rate)) return f;
    }
    if ((coeffs[2] * Scalar::of_fraction(2, 1)).try_sqrt(rate)) {
        if (auto f = verified(SeriesPattern::cosh, rate)) return f;
    }
    return std::nullopt;
}

namespace {

// The generator when m = g^k with k >= 1, else -1.
int single_power_base(const Monomial& m) {
    if (!m.is_single_power() || m.is_unit()) return -1;
    for (int g = 0; g < m.num_gens(); ++g) {
        if (m.exp(g) > 0) return g;
    }
    return -1;
}

bool image_stays_primitive(const Coproduct& cop, int g) {
    for (const auto& [key, value] : cop.image(g).terms()) {
        (void)value;
        if (key.zord != 0) return false;
    }
    return true;
}

} // namespace

std::optional<FactoredCoproduct> factor_coproduct(const Coproduct& cop, int generator) {
    const int n = cop.num_gens();
    const int order = cop.zcap();
    if (generator < 0 || generator >= n)
        throw BadRequestError("factor_coproduct: generator index out of range");

    const UEATensor2 img = cop.image(generator);
    const Monomial y = Monomial::generator(n, generator);
    const Monomial unit = Monomial::unit(n);

    std::map<PairMono, Scalar> expected0;
    expected0.emplace(PairMono{y, unit}, Scalar::one());
    expected0.emplace(PairMono{unit, y}, Scalar::one());
    if (img.layer(0) != expected0) return std::nullopt;

    if (image_stays_primitive(cop, generator)) {
        ClosedForm unit_factor{SeriesPattern::polynomial, Scalar::one(), order};
        return FactoredCoproduct{generator, generator, unit_factor, unit_factor, order};
    }

    int argument = -1;
    std::vector<Scalar> left(static_cast<std::size_t>(order) + 1, Scalar::zero());
    std::vector<Scalar> right(static_cast<std::size_t>(order) + 1, Scalar::zero());
    left[0] = Scalar::one();
    right[0] = Scalar::one();

    for (int k = 1; k <= order; ++k) {
        for (const auto& [slots, value] : img.layer(k)) {
            int h = -1;
            bool on_left = false;
            if (slots.right == y && slots.left.degree() == k) {
                h = single_power_base(slots.left);
                on_left = true;
            } else if (slots.left == y && slots.right.degree() == k) {
                h = single_power_base(slots.right);
            }
            if (h < 0) return std::nullopt;
            if (argument < 0) argument = h;
            if (h != argument) return std::nullopt;
            (on_left ? left : right)[static_cast<std::size_t>(k)] = value;
        }
    }

    if (argument < 0 || !image_stays_primitive(cop, argument)) return std::nullopt;

    auto left_form = recognize_factor(left);
    auto right_form = recognize_factor(right);
    if (!left_form || !right_form) return std::nullopt;
    return FactoredCoproduct{generator, argument, *left_form, *right_form, order};
}

std::optional<SeriesClosedForm> recognize_single_power_series(const UEAElement& entry) {
    const int order = entry.zcap();

    const auto layer0 = entry.layer(0);
    if (layer0.size() != 1) return std::nullopt;
    const Monomial& base = layer0.begin()->first;
    if (base.degree() != 1) return std::nullopt;
    const int argument = single_power_base(base);

    std::vector<Scalar> coeffs(static_cast<std::size_t>(order) + 1, Scalar::zero());
    coeffs[0] = layer0.begin()->second;
    for (int k = 1; k <= order; ++k) {
        const auto layer = entry.layer(k);
        if (layer.empty()) continue;
        if (layer.size() != 1) return std::nullopt;
        const Monomial& m = layer.begin()->first;
        if (single_power_base(m) != argument || m.degree() != k + 1) return std::nullopt;
        coeffs[static_cast<std::size_t>(k)] = layer.begin()->second;
    }

    auto form = recognize_factor(coeffs);
    if (!form) return std::nullopt;
    return SeriesClosedForm{argument, *form, order};
}

std::string pattern_name(SeriesPattern pattern) {
    switch (pattern) {
    case SeriesPattern::polynomial: return "polynomial";
    case SeriesPattern::exponential: return "exp";
    case SeriesPattern::sinh_over_arg: return "sinh_over_arg";
    case SeriesPattern::cosh: return "cosh";
    }
    return "unknown";
}

std::string render_closed_form(const ClosedForm& form, const std::string& argname) {
    const std::string arg = "(" + form.rate.render() + ") z " + argname;
    switch (form.pattern) {
    case SeriesPattern::polynomial:
        if (form.rate == Scalar::one()) return "1";
        return "(" + form.rate.render() + ")";
    case SeriesPattern::exponential:
        return "exp(" + arg + ")";
    case SeriesPattern::sinh_over_arg:
        return "sinh(" + arg + ") / (" + arg + ")";
    case SeriesPattern::cosh:
        return "cosh(" + arg + ")";
    }
    return "?";
}

std::string render_factored_coproduct(const UEA& u, const FactoredCoproduct& f) {
    const std::string& yname = u.name(f.generator);
    const std::string& hname = u.name(f.argument);
    return render_closed_form(f.left, hname) + " (x) " + yname + " + " + yname + " (x) " +
           render_closed_form(f.right, hname);
}

std::string render_series_closed_form(const UEA& u, const SeriesClosedForm& s) {
    const std::string& hname = u.name(s.argument);
    const std::string arg = "(" + s.form.rate.render() + ") z " + hname;
    switch (s.form.pattern) {
    case SeriesPattern::polynomial:
        return "(" + s.form.rate.render() + ") " + hname;
    case SeriesPattern::exponential:
        return hname + " exp(" + arg + ")";
    case SeriesPattern::sinh_over_arg:
        return "sinh(" + arg + ") / ((" + s.form.rate.render() + ") z)";
    case SeriesPattern::cosh:
        return hname + " cosh(" + arg + ")";
    }
    return "?";
}

} // namespace qlie
