#include "qlie/zseries.hpp"

#include <algorithm>
#include <sstream>

namespace qlie {

namespace {
const Scalar k_zero_scalar = Scalar::zero();
}

ZSeries::ZSeries(int order) : order_(order) {
    if (order < 0) throw BadRequestError("series truncation order must be nonnegative");
}

ZSeries ZSeries::constant(const Scalar& value, int order) {
    ZSeries s(order);
    s.set_coeff(0, value);
    return s;
}

ZSeries ZSeries::monomial(const Scalar& value, int power, int order) {
    ZSeries s(order);
    if (power <= order) s.set_coeff(power, value);
    return s;
}

ZSeries ZSeries::from_coeffs(const std::vector<Scalar>& coeffs) {
    if (coeffs.empty()) throw BadRequestError("series needs at least the z^0 coefficient");
    ZSeries s(static_cast<int>(coeffs.size()) - 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        s.set_coeff(static_cast<int>(k), coeffs[k]);
    }
    return s;
}

const Scalar& ZSeries::coeff(int k) const {
    if (k < 0 || k > order_) {
        throw SeriesIncompleteError("coefficient of z^" + std::to_string(k) +
                                    " is not tracked at truncation order " + std::to_string(order_));
    }
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? k_zero_scalar : it->second;
}

void ZSeries::set_coeff(int k, const Scalar& value) {
    if (k < 0 || k > order_) {
        throw SeriesIncompleteError("coefficient of z^" + std::to_string(k) +
                                    " is outside truncation order " + std::to_string(order_));
    }
    if (value.is_zero()) {
        coeffs_.erase(k);
    } else {
        coeffs_[k] = value;
    }
}

int ZSeries::valuation() const {
    return coeffs_.empty() ? order_ + 1 : coeffs_.begin()->first;
}

ZSeries ZSeries::truncated(int new_order) const {
    if (new_order > order_) {
        throw SeriesIncompleteError("cannot extend truncation order " + std::to_string(order_) +
                                    " to " + std::to_string(new_order));
    }
    ZSeries s(new_order);
    for (const auto& [k, v] : coeffs_) {
        if (k <= new_order) s.coeffs_[k] = v;
    }
    return s;
}

ZSeries ZSeries::operator-() const {
    ZSeries s(order_);
    for (const auto& [k, v] : coeffs_) s.coeffs_[k] = -v;
    return s;
}

ZSeries ZSeries::operator+(const ZSeries& o) const {
    ZSeries s(std::min(order_, o.order_));
    for (const auto& [k, v] : coeffs_) {
        if (k <= s.order_) s.coeffs_[k] = v;
    }
    for (const auto& [k, v] : o.coeffs_) {
        if (k > s.order_) continue;
        auto [it, inserted] = s.coeffs_.try_emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) s.coeffs_.erase(it);
        }
    }
    return s;
}

ZSeries ZSeries::operator-(const ZSeries& o) const {
    return *this + (-o);
}

ZSeries ZSeries::operator*(const ZSeries& o) const {
    ZSeries s(std::min(order_, o.order_));
    for (const auto& [k1, v1] : coeffs_) {
        for (const auto& [k2, v2] : o.coeffs_) {
            const int k = k1 + k2;
            if (k > s.order_) break; // keys ascend, later k2 only grow
            auto [it, inserted] = s.coeffs_.try_emplace(k, v1 * v2);
            if (!inserted) it->second += v1 * v2;
        }
    }
    for (auto it = s.coeffs_.begin(); it != s.coeffs_.end();) {
        it = it->second.is_zero() ? s.coeffs_.erase(it) : std::next(it);
    }
    return s;
}

ZSeries ZSeries::operator*(const Scalar& v) const {
    ZSeries s(order_);
    if (v.is_zero()) return s;
    for (const auto& [k, c] : coeffs_) s.coeffs_[k] = c * v;
    return s;
}

std::string ZSeries::render() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << v.render() << ")";
        if (k == 1) {
            out << " z";
        } else if (k >= 2) {
            out << " z^" << k;
        }
    }
    if (first) out << "0";
    out << " + O(z^" << (order_ + 1) << ")";
    return out.str();
}

Scalar factorial_scalar(int k) {
    Rational f = 1;
    for (int m = 2; m <= k; ++m) f *= m;
    return Scalar(f);
}

} // namespace qlie
