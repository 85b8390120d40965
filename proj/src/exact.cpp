#include "scoreseq/exact.hpp"

#include <cctype>
#include <numeric>

#include "scoreseq/errors.hpp"

namespace scoreseq {

BigRat ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("ratio: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

unsigned long gcd(unsigned long a, unsigned long b) { return std::gcd(a, b); }

BigInt pow4(unsigned long n) {
  BigInt result = 1;
  mpz_mul_2exp(result.get_mpz_t(), result.get_mpz_t(), 2 * n);
  return result;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt pow10(int digits) {
  if (digits < 0) throw DomainError("pow10: negative exponent");
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return result;
}

bool is_integral(const BigRat& q) { return q.get_den() == 1; }

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string units_to_decimal(const BigInt& units, int digits) {
  BigInt magnitude = abs(units);
  std::string body = magnitude.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  return units < 0 ? "-" + body : body;
}

}  // namespace

std::string to_decimal(const BigRat& q, int digits) {
  BigRat scaled = q * BigRat(pow10(digits));
  BigInt units;
  if (scaled >= 0) {
    units = floor_div(scaled.get_num() * 2 + scaled.get_den(), scaled.get_den() * 2);
  } else {
    BigRat pos = -scaled;
    units = -floor_div(pos.get_num() * 2 + pos.get_den(), pos.get_den() * 2);
  }
  return units_to_decimal(units, digits);
}

BigRat parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  int fractional = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fractional;
    } else {
      throw DomainError("malformed decimal: " + text);
    }
  }
  if (digits.empty()) throw DomainError("malformed decimal: " + text);
  BigRat value = ratio(BigInt(digits, 10), pow10(fractional));
  return negative ? BigRat(-value) : value;
}

}  // namespace scoreseq
