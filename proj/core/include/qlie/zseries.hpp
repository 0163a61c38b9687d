#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlie/scalar.hpp"

namespace qlie {

// Power series in the deformation parameter z, truncated at a fixed order:
// coefficients are tracked exactly for z^0 .. z^order and unknown beyond.
// Binary operations truncate to the smaller of the two orders, so a
// coefficient is only ever reported when every contribution to it was known.
class ZSeries {
  public:
    explicit ZSeries(int order);

    static ZSeries constant(const Scalar& value, int order);
    static ZSeries monomial(const Scalar& value, int power, int order);
    static ZSeries from_coeffs(const std::vector<Scalar>& coeffs);

    int order() const { return order_; }

    // Coefficient of z^k; requesting k beyond the truncation order is a
    // logic error (the value is unknown, not zero) and throws.
    const Scalar& coeff(int k) const;
    void set_coeff(int k, const Scalar& value);

    bool is_zero() const { return coeffs_.empty(); }
    // Least k with nonzero coefficient, or order()+1 when the series is zero.
    int valuation() const;

    ZSeries truncated(int new_order) const;

    ZSeries operator-() const;
    ZSeries operator+(const ZSeries& o) const;
    ZSeries operator-(const ZSeries& o) const;
    ZSeries operator*(const ZSeries& o) const;
    ZSeries operator*(const Scalar& s) const;

    ZSeries& operator+=(const ZSeries& o) { *this = *this + o; return *this; }
    ZSeries& operator-=(const ZSeries& o) { *this = *this - o; return *this; }

    // Equality compares tracked coefficients on the common order range and
    // requires equal truncation orders.
    bool operator==(const ZSeries& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }
    bool operator!=(const ZSeries& o) const { return !(*this == o); }

    // e.g. "1 + 1/2 z + 1/8 z^2 + O(z^5)"
    std::string render() const;

  private:
    int order_;
    std::map<int, Scalar> coeffs_; // nonzero coefficients only, keys in [0, order_]
};

// k! as an exact scalar.
Scalar factorial_scalar(int k);

} // namespace qlie
