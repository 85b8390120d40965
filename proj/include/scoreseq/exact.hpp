#pragma once

#include <gmpxx.h>

#include <string>

namespace scoreseq {

// Arbitrary precision integers and rationals. mpq_class arithmetic assumes
// canonical operands; build fractions with ratio(), never BigRat(num, den).
using BigInt = mpz_class;
using BigRat = mpq_class;

// num/den reduced; den != 0.
BigRat ratio(const BigInt& num, const BigInt& den);

// C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

unsigned long gcd(unsigned long a, unsigned long b);

// 4^n
BigInt pow4(unsigned long n);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

// 10^digits
BigInt pow10(int digits);

bool is_integral(const BigRat& q);

std::string to_string(const BigInt& v);
// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRat& q);

// Decimal string of q rounded to nearest (ties away from zero) with exactly
// `digits` fractional digits.
std::string to_decimal(const BigRat& q, int digits);

// Parses a decimal literal such as "-0.6604" or "12" exactly.
BigRat parse_decimal(const std::string& text);

}  // namespace scoreseq
