#include "scoreseq/series.hpp"

#include <algorithm>
#include <utility>

#include "scoreseq/errors.hpp"

namespace scoreseq {

namespace {

const BigRat& coeff_or_zero(const ExactSeries& a, std::size_t n, const BigRat& zero) {
  return n < a.size() ? a[n] : zero;
}

ExactSeries convolve_integral(const ExactSeries& a, const ExactSeries& b, std::size_t length) {
  std::vector<BigRat> out(length);
  BigInt acc;
  for (std::size_t n = 0; n < length; ++n) {
    acc = 0;
    std::size_t k_lo = n >= b.size() ? n - b.size() + 1 : 0;
    std::size_t k_hi = std::min(n, a.size() - 1);
    for (std::size_t k = k_lo; k <= k_hi && k < a.size(); ++k) {
      mpz_addmul(acc.get_mpz_t(), a[k].get_num_mpz_t(), b[n - k].get_num_mpz_t());
    }
    out[n] = acc;
  }
  return ExactSeries(std::move(out));
}

}  // namespace

ExactSeries::ExactSeries(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {}

ExactSeries ExactSeries::zeros(std::size_t length) {
  return ExactSeries(std::vector<BigRat>(length, BigRat(0)));
}

ExactSeries ExactSeries::from_integers(const std::vector<BigInt>& values) {
  std::vector<BigRat> coeffs;
  coeffs.reserve(values.size());
  for (const auto& v : values) coeffs.emplace_back(v);
  return ExactSeries(std::move(coeffs));
}

bool ExactSeries::all_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& q) { return is_integral(q); });
}

std::vector<BigInt> ExactSeries::to_integers() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!is_integral(coeffs_[n])) {
      throw ConsistencyError("series coefficient " + std::to_string(n) + " is not an integer");
    }
    out.push_back(coeffs_[n].get_num());
  }
  return out;
}

ExactSeries ExactSeries::truncated(std::size_t length) const {
  std::vector<BigRat> out(length, BigRat(0));
  std::copy_n(coeffs_.begin(), std::min(length, coeffs_.size()), out.begin());
  return ExactSeries(std::move(out));
}

ExactSeries operator*(const ExactSeries& a, const BigRat& c) {
  std::vector<BigRat> out = a.coeffs();
  for (auto& q : out) q *= c;
  return ExactSeries(std::move(out));
}

ExactSeries convolve(const ExactSeries& a, const ExactSeries& b, std::size_t length) {
  if (a.size() == 0 || b.size() == 0) return ExactSeries::zeros(length);
  if (a.all_integral() && b.all_integral()) return convolve_integral(a, b, length);
  std::vector<BigRat> out(length, BigRat(0));
  for (std::size_t n = 0; n < length; ++n) out[n] = convolution_coefficient(a, b, n);
  return ExactSeries(std::move(out));
}

ExactSeries convolve(const ExactSeries& a, const ExactSeries& b) {
  return convolve(a, b, std::min(a.size(), b.size()));
}

BigRat convolution_coefficient(const ExactSeries& a, const ExactSeries& b, std::size_t n) {
  const BigRat zero = 0;
  BigRat sum = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const BigRat& x = coeff_or_zero(a, k, zero);
    const BigRat& y = coeff_or_zero(b, n - k, zero);
    if (x == 0 || y == 0) continue;
    sum += x * y;
  }
  return sum;
}

ExactSeries log_transform(const ExactSeries& a) {
  if (a.size() == 0 || a[0] != 1) throw DomainError("log_transform requires a_0 = 1");
  std::vector<BigRat> hat(a.size(), BigRat(0));
  for (std::size_t n = 1; n < a.size(); ++n) {
    BigRat value = a[n] * static_cast<unsigned long>(n);
    for (std::size_t k = 1; k < n; ++k) {
      if (hat[k] != 0 && a[n - k] != 0) value -= hat[k] * a[n - k];
    }
    hat[n] = value;
  }
  return ExactSeries(std::move(hat));
}

ExactSeries exp_transform(const ExactSeries& hat) {
  if (hat.size() == 0 || hat[0] != 0) throw DomainError("exp_transform requires hat_0 = 0");
  std::vector<BigRat> a(hat.size(), BigRat(0));
  a[0] = 1;
  for (std::size_t n = 1; n < hat.size(); ++n) {
    BigRat sum = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (hat[k] != 0 && a[n - k] != 0) sum += hat[k] * a[n - k];
    }
    a[n] = sum / static_cast<unsigned long>(n);
  }
  return ExactSeries(std::move(a));
}

ExactSeries convolution_power(const ExactSeries& b, unsigned r, std::size_t length) {
  if (r < 1) throw DomainError("convolution_power requires r >= 1");
  ExactSeries base = b.truncated(length);
  ExactSeries result;
  bool have_result = false;
  // Binary powering; exact arithmetic makes the grouping irrelevant.
  while (r > 0) {
    if (r & 1U) {
      result = have_result ? convolve(result, base, length) : base;
      have_result = true;
    }
    r >>= 1U;
    if (r > 0) base = convolve(base, base, length);
  }
  return result;
}

ExactSeries convolution_power(const ExactSeries& b, unsigned r) {
  return convolution_power(b, r, b.size());
}

ExactSeries convolution_root(const ExactSeries& a, unsigned r) {
  if (r < 1) throw DomainError("convolution_root requires r >= 1");
  if (a.size() == 0 || a[0] != 1) throw DomainError("convolution_root requires a_0 = 1");
  return exp_transform(log_transform(a) * ratio(1, r));
}

}  // namespace scoreseq
