#pragma once

#include <string>

#include "scoreseq/exact.hpp"

namespace scoreseq {

/// Closed decimal interval [lo, hi] certifying a real value.
///
/// Endpoints are fixed-point decimals with `precision()` fractional digits,
/// stored as scaled integers lo_units / 10^precision. Every operation rounds
/// outward, so the result contains the exact result of the same operation on
/// any values contained in the operands. Binary operations work at the larger
/// of the two operand precisions.
class Enclosure {
 public:
  Enclosure() = default;

  // Exact decimal point value; throws DomainError when q is not representable
  // with `precision` digits.
  static Enclosure exact(const BigRat& q, int precision);
  // Tightest enclosure of [lo, hi] on the 10^-precision grid.
  static Enclosure from_bounds(const BigRat& lo, const BigRat& hi, int precision);
  static Enclosure from_units(BigInt lo_units, BigInt hi_units, int precision);

  int precision() const { return precision_; }
  const BigInt& lo_units() const { return lo_; }
  const BigInt& hi_units() const { return hi_; }

  BigRat lo() const;
  BigRat hi() const;
  BigRat width() const;
  BigRat midpoint() const;

  std::string lo_string() const;
  std::string hi_string() const;

  bool contains(const BigRat& q) const;
  // True when `inner` lies within this interval.
  bool contains(const Enclosure& inner) const;
  bool strictly_below(const BigRat& q) const { return hi() < q; }
  bool strictly_above(const BigRat& q) const { return lo() > q; }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }

  // Re-rounds outward onto a different grid. Coarsening can only widen;
  // refining is exact.
  Enclosure with_precision(int precision) const;

  // True when every point of the interval has the given leading decimal
  // digits, i.e. the interval lies in [prefix, prefix + 10^-digits) for
  // nonnegative prefixes.
  bool truncates_to(const std::string& prefix) const;
  // True when every point rounds to nearest to `value` at its digit count.
  bool rounds_to(const std::string& value) const;

  Enclosure operator-() const;

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  // Throws DomainError when the divisor contains zero.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);

  friend bool operator==(const Enclosure&, const Enclosure&) = default;

 private:
  Enclosure(BigInt lo, BigInt hi, int precision);

  BigInt lo_ = 0;
  BigInt hi_ = 0;
  int precision_ = 0;
};

// Outward-rounded enclosure of a rational.
Enclosure rat_to_enclosure(const BigRat& q, int precision);

// Certified enclosure of pi from an embedded 40-digit literal.
Enclosure pi_enclosure();
constexpr int kMaxConstantPrecision = 38;

// Enclosure of sqrt(x) for x >= 0 (lower endpoint clamped at 0).
Enclosure sqrt_enclosure(const Enclosure& x, int precision);

// sqrt(pi); precision in [10, 38].
Enclosure sqrt_pi_enclosure(int precision);

// e^x for |x| <= 10, by truncated Taylor series with a Lagrange remainder
// bound below 10^(-precision-2).
Enclosure exp_enclosure(const Enclosure& x, int precision);

// x^k for k >= 0.
Enclosure pow(const Enclosure& x, unsigned k);

}  // namespace scoreseq
