#include "scoreseq/enclosure.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "scoreseq/errors.hpp"

namespace scoreseq {

namespace {

// pi to 40 decimals, truncated; pi lies in [kPiDigits, kPiDigits + 10^-40].
constexpr const char* kPiDigits = "3.1415926535897932384626433832795028841971";
constexpr int kPiPrecision = 40;

// exp works on a fixed internal grid for all precisions up to this, so that
// results at different output precisions are roundings of the same interval.
constexpr int kExpWorkingPrecision = 40;

BigInt scale_units(const BigInt& units, int from, int to) {
  return units * pow10(to - from);
}

BigInt isqrt_floor(const BigInt& v) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

BigInt isqrt_ceil(const BigInt& v) {
  BigInt r = isqrt_floor(v);
  if (r * r < v) ++r;
  return r;
}

int digits_after_point(const std::string& text) {
  auto point = text.find('.');
  return point == std::string::npos ? 0 : static_cast<int>(text.size() - point - 1);
}

std::string units_string(const BigInt& units, int precision) {
  return to_decimal(ratio(units, pow10(precision)), precision);
}

// Taylor polynomial of e^q of minimal degree whose Lagrange remainder is at
// most 10^-(digits + 2). Returns (polynomial value, remainder bound).
std::pair<BigRat, BigRat> exp_taylor(const BigRat& q, int digits) {
  const BigRat target = ratio(1, pow10(digits + 2));
  BigRat magnitude = abs(q);
  // e^xi <= 3^ceil(q) for xi in [0, q]; <= 1 when q <= 0.
  BigInt growth = 1;
  if (q > 0) {
    BigInt ceil_q = ceil_div(q.get_num(), q.get_den());
    mpz_ui_pow_ui(growth.get_mpz_t(), 3, ceil_q.get_ui());
  }
  BigRat sum = 1;
  BigRat term = 1;
  for (unsigned long j = 1;; ++j) {
    term *= q;
    term /= j;
    sum += term;
    // |q|^(j+1)/(j+1)! = |term| * |q| / (j+1)
    BigRat remainder = abs(term) * magnitude / (j + 1) * growth;
    if (remainder <= target) return {sum, remainder};
  }
}

}  // namespace

Enclosure::Enclosure(BigInt lo, BigInt hi, int precision)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_(precision) {
  if (precision_ < 0) throw DomainError("enclosure precision must be nonnegative");
  if (lo_ > hi_) throw DomainError("enclosure requires lo <= hi");
}

Enclosure Enclosure::exact(const BigRat& q, int precision) {
  BigRat scaled = q * BigRat(pow10(precision));
  if (!is_integral(scaled)) throw DomainError("value not representable at this precision");
  return Enclosure(scaled.get_num(), scaled.get_num(), precision);
}

Enclosure Enclosure::from_bounds(const BigRat& lo, const BigRat& hi, int precision) {
  BigRat scale(pow10(precision));
  BigRat a = lo * scale;
  BigRat b = hi * scale;
  return Enclosure(floor_div(a.get_num(), a.get_den()), ceil_div(b.get_num(), b.get_den()),
                   precision);
}

Enclosure Enclosure::from_units(BigInt lo_units, BigInt hi_units, int precision) {
  return Enclosure(std::move(lo_units), std::move(hi_units), precision);
}

BigRat Enclosure::lo() const {
  BigRat r = ratio(lo_, pow10(precision_));
  r.canonicalize();
  return r;
}

BigRat Enclosure::hi() const {
  BigRat r = ratio(hi_, pow10(precision_));
  r.canonicalize();
  return r;
}

BigRat Enclosure::width() const {
  BigRat r = ratio(hi_ - lo_, pow10(precision_));
  r.canonicalize();
  return r;
}

BigRat Enclosure::midpoint() const {
  BigRat r = ratio(lo_ + hi_, 2 * pow10(precision_));
  r.canonicalize();
  return r;
}

std::string Enclosure::lo_string() const { return units_string(lo_, precision_); }
std::string Enclosure::hi_string() const { return units_string(hi_, precision_); }

bool Enclosure::contains(const BigRat& q) const { return lo() <= q && q <= hi(); }

bool Enclosure::contains(const Enclosure& inner) const {
  return lo() <= inner.lo() && inner.hi() <= hi();
}

Enclosure Enclosure::with_precision(int precision) const {
  if (precision >= precision_) {
    return Enclosure(scale_units(lo_, precision_, precision), scale_units(hi_, precision_, precision),
                     precision);
  }
  BigInt divisor = pow10(precision_ - precision);
  return Enclosure(floor_div(lo_, divisor), ceil_div(hi_, divisor), precision);
}

bool Enclosure::truncates_to(const std::string& prefix) const {
  BigRat value = parse_decimal(prefix);
  BigRat step = ratio(1, pow10(digits_after_point(prefix)));
  bool negative = !prefix.empty() && prefix.front() == '-';
  if (negative) return lo() > value - step && hi() <= value;
  return lo() >= value && hi() < value + step;
}

bool Enclosure::rounds_to(const std::string& value_text) const {
  BigRat value = parse_decimal(value_text);
  BigRat half = ratio(1, 2 * pow10(digits_after_point(value_text)));
  if (value >= 0) return lo() >= value - half && hi() < value + half;
  return lo() > value - half && hi() <= value + half;
}

Enclosure Enclosure::operator-() const { return Enclosure(-hi_, -lo_, precision_); }

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  int p = std::max(a.precision_, b.precision_);
  return Enclosure(scale_units(a.lo_, a.precision_, p) + scale_units(b.lo_, b.precision_, p),
                   scale_units(a.hi_, a.precision_, p) + scale_units(b.hi_, b.precision_, p), p);
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) { return a + (-b); }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  int p = std::max(a.precision_, b.precision_);
  BigInt al = scale_units(a.lo_, a.precision_, p);
  BigInt ah = scale_units(a.hi_, a.precision_, p);
  BigInt bl = scale_units(b.lo_, b.precision_, p);
  BigInt bh = scale_units(b.hi_, b.precision_, p);
  std::array<BigInt, 4> products = {al * bl, al * bh, ah * bl, ah * bh};
  auto [lo, hi] = std::minmax_element(products.begin(), products.end());
  BigInt scale = pow10(p);
  return Enclosure(floor_div(*lo, scale), ceil_div(*hi, scale), p);
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.contains_zero()) throw DomainError("division by an enclosure containing zero");
  int p = std::max(a.precision_, b.precision_);
  BigInt al = scale_units(a.lo_, a.precision_, p);
  BigInt ah = scale_units(a.hi_, a.precision_, p);
  BigInt bl = scale_units(b.lo_, b.precision_, p);
  BigInt bh = scale_units(b.hi_, b.precision_, p);
  std::array<BigRat, 4> quotients = {ratio(al, bl), ratio(al, bh), ratio(ah, bl),
                                     ratio(ah, bh)};
  for (auto& q : quotients) q.canonicalize();
  auto [lo, hi] = std::minmax_element(quotients.begin(), quotients.end());
  return Enclosure::from_bounds(*lo, *hi, p);
}

Enclosure rat_to_enclosure(const BigRat& q, int precision) {
  return Enclosure::from_bounds(q, q, precision);
}

Enclosure pi_enclosure() {
  BigRat lo = parse_decimal(kPiDigits);
  return Enclosure::from_bounds(lo, lo + ratio(1, pow10(kPiPrecision)), kPiPrecision);
}

Enclosure sqrt_enclosure(const Enclosure& x, int precision) {
  if (x.hi() < 0) throw DomainError("sqrt of a negative enclosure");
  // floor(sqrt(floor(y))) == floor(sqrt(y)) for y >= 0.
  BigRat scale(pow10(2 * precision));
  BigRat lo_scaled = std::max(x.lo(), BigRat(0)) * scale;
  BigRat hi_scaled = x.hi() * scale;
  BigInt lo = isqrt_floor(floor_div(lo_scaled.get_num(), lo_scaled.get_den()));
  BigInt hi = isqrt_ceil(ceil_div(hi_scaled.get_num(), hi_scaled.get_den()));
  return Enclosure::from_units(std::move(lo), std::move(hi), precision);
}

Enclosure sqrt_pi_enclosure(int precision) {
  if (precision < 10) throw DomainError("sqrt_pi_enclosure: precision must be at least 10");
  if (precision > kMaxConstantPrecision) {
    throw DomainError("sqrt_pi_enclosure: precision exceeds the embedded pi digits");
  }
  return sqrt_enclosure(pi_enclosure(), precision);
}

Enclosure exp_enclosure(const Enclosure& x, int precision) {
  if (abs(x.lo()) > 10 || abs(x.hi()) > 10) throw DomainError("exp_enclosure: |x| must be <= 10");
  int working = std::max(precision, kExpWorkingPrecision);
  auto [lo_sum, lo_rem] = exp_taylor(x.lo(), working);
  auto [hi_sum, hi_rem] = exp_taylor(x.hi(), working);
  return Enclosure::from_bounds(lo_sum - lo_rem, hi_sum + hi_rem, precision);
}

Enclosure pow(const Enclosure& x, unsigned k) {
  Enclosure result = Enclosure::exact(1, x.precision());
  for (unsigned i = 0; i < k; ++i) result = result * x;
  return result;
}

}  // namespace scoreseq
