#pragma once

#include <cstddef>
#include <vector>

#include "scoreseq/exact.hpp"

namespace scoreseq {

/// Truncated power series a_0 + a_1 x + ... + a_{L-1} x^{L-1} with exact
/// rational coefficients.
///
/// Arithmetic treats coefficients past the stored length as zero; results are
/// truncated to the requested length (by default the shorter operand), which
/// is exact for the coefficients that are returned.
class ExactSeries {
 public:
  ExactSeries() = default;
  explicit ExactSeries(std::vector<BigRat> coeffs);
  static ExactSeries zeros(std::size_t length);
  static ExactSeries from_integers(const std::vector<BigInt>& values);

  std::size_t size() const { return coeffs_.size(); }
  const BigRat& operator[](std::size_t n) const { return coeffs_.at(n); }
  BigRat& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }

  bool all_integral() const;
  // Numerators; throws ConsistencyError if any coefficient is not an integer.
  std::vector<BigInt> to_integers() const;

  ExactSeries truncated(std::size_t length) const;

  friend bool operator==(const ExactSeries&, const ExactSeries&) = default;

 private:
  std::vector<BigRat> coeffs_;
};

ExactSeries operator*(const ExactSeries& a, const BigRat& c);

// Cauchy product truncated to `length` coefficients.
ExactSeries convolve(const ExactSeries& a, const ExactSeries& b, std::size_t length);
ExactSeries convolve(const ExactSeries& a, const ExactSeries& b);

// Coefficient n of a * b.
BigRat convolution_coefficient(const ExactSeries& a, const ExactSeries& b, std::size_t n);

// Solves n a_n = sum_{k=1..n} hat_k a_{n-k} for hat with hat_0 = 0.
// Requires a_0 = 1 (DomainError otherwise).
ExactSeries log_transform(const ExactSeries& a);

// Inverse of log_transform; requires hat_0 = 0.
ExactSeries exp_transform(const ExactSeries& hat);

// r-fold convolution b * ... * b, r >= 1, truncated to `length`
// (default b.size()).
ExactSeries convolution_power(const ExactSeries& b, unsigned r, std::size_t length);
ExactSeries convolution_power(const ExactSeries& b, unsigned r);

// Series c with c^{*r} = a, via exp_transform(log_transform(a) / r).
ExactSeries convolution_root(const ExactSeries& a, unsigned r);

}  // namespace scoreseq
