#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "latgeom/error.hpp"

namespace latgeom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or a decimal literal such as "2.1547" into a reduced rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Integer floor_div(const Rational& r);
Integer ceil_div(const Rational& r);

/// Exact number a + b*sqrt(d) with a, b rational and d a squarefree integer.
///
/// A pure rational is stored with b = 0 and d = 0, so structural equality is
/// value equality. Arithmetic between two irrationals requires the same d;
/// rationals combine with anything. Comparisons also work across different
/// radicands.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : a_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value) : a_(value) { a_.canonicalize(); }  // NOLINT

  /// a + b*sqrt(radicand) with square factors pulled out of the radicand.
  static Scalar quadratic(const Rational& a, const Rational& b, const Integer& radicand);
  /// Exact square root of a nonnegative rational.
  static Scalar sqrt(const Rational& value);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_integer() const { return d_ == 0 && a_.get_den() == 1; }
  bool is_zero() const { return d_ == 0 && a_ == 0; }
  /// The rational value; throws IrrationalInput for a genuine quadratic irrational.
  const Rational& rational() const;

  int sign() const;
  double to_double() const;
  Integer floor() const;
  Integer ceil() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  /// a - b*sqrt(d)
  Scalar conjugate() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  /// "p/q", or "a + (p/q)√d" for irrationals.
  std::string to_string() const;

 private:
  std::int64_t common_radicand(const Scalar& rhs) const;
  void normalize();

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Div };

Scalar quad_arith(const Scalar& lhs, const Scalar& rhs, ArithOp op);
int quad_sign(const Scalar& x);
double to_float(const Scalar& x);
/// Exact three-way comparison, valid across different radicands.
int compare(const Scalar& x, const Scalar& y);

inline const Scalar& min(const Scalar& x, const Scalar& y) { return y < x ? y : x; }
inline const Scalar& max(const Scalar& x, const Scalar& y) { return x < y ? y : x; }

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace latgeom
