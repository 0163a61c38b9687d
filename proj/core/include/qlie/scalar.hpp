#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

#include "qlie/errors.hpp"

namespace qlie {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Element of the degree-4 field extension Q(r2, i) where r2^2 = 2 and
// i^2 = -1, stored on the basis {1, r2, i, i*r2} with exact rational
// coordinates.  Every coefficient appearing anywhere in the engine lives in
// this field, so all computations are exact: equality means equality.
class Scalar {
  public:
    Scalar() = default;
    Scalar(int v) : a_(v) {}
    Scalar(long long v) : a_(v) {}
    explicit Scalar(Rational r) : a_(std::move(r)) {}
    Scalar(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar of_fraction(long long num, long long den);
    static Scalar sqrt2() { return Scalar(0, 1, 0, 0); }
    static Scalar i() { return Scalar(0, 0, 1, 0); }
    static Scalar i_sqrt2() { return Scalar(0, 0, 0, 1); }
    // 1/r2 = r2/2, handy for the Z-basis change of the double construction.
    static Scalar inv_sqrt2() { return Scalar(0, Rational(1, 2), 0, 0); }

    const Rational& rat_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }
    const Rational& i_part() const { return c_; }
    const Rational& i_sqrt2_part() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_real() const { return c_ == 0 && d_ == 0; }

    Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_); }
    Scalar operator+(const Scalar& o) const { return Scalar(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_); }
    Scalar operator-(const Scalar& o) const { return Scalar(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_); }
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order used only for canonical map keys / deterministic pivoting.
    bool operator<(const Scalar& o) const;

    // Field inverse; throws DivisionByZeroError on zero.
    Scalar inverse() const;

    // i -> -i (complex conjugation restricted to the field).
    Scalar conj_i() const { return Scalar(a_, b_, -c_, -d_); }
    // r2 -> -r2 (the other generator of the Galois group).
    Scalar conj_sqrt2() const { return Scalar(a_, -b_, c_, -d_); }

    // Square root within the field when one exists (shapes q, 2q, -q, -2q
    // with q a square rational); returns false when no representable root.
    bool try_sqrt(Scalar& out) const;

    // Canonical text form, e.g. "1/2 + 1/2*r2", "-1 + 1*i*r2", "0".
    // parse(render(x)) == x bit-exactly.
    std::string render() const;
    static Scalar parse(const std::string& text);

  private:
    Rational a_, b_, c_, d_; // a + b*r2 + c*i + d*i*r2
};

Scalar operator*(int k, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace qlie
