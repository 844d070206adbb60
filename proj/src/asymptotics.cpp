#include "onefold/asymptotics.hpp"

#include <algorithm>
#include <string>

namespace onefold {

namespace {

constexpr mp_bitcnt_t kPrecisionBits = 256;

mpf_class ratio(const BigNat& num, const BigNat& den) {
  mpf_class a(0, kPrecisionBits);
  mpf_class b(0, kPrecisionBits);
  a = num;
  b = den;
  mpf_class out(0, kPrecisionBits);
  out = a / b;
  return out;
}

}  // namespace

double ZinnEstimate::mu_spread() const {
  if (points.empty() || window == 0) return 0;
  const auto first = points.end() - static_cast<std::ptrdiff_t>(std::min(window, points.size()));
  auto [lo, hi] = std::minmax_element(first, points.end(), [](const ZinnPoint& a, const ZinnPoint& b) {
    return a.mu < b.mu;
  });
  return hi->mu - lo->mu;
}

ZinnEstimate zinn_estimate(std::span<const BigNat> terms, std::size_t window) {
  const std::size_t size = terms.size();
  if (size < kMinZinnLength) {
    throw SequenceError("sequence-too-short: need at least " + std::to_string(kMinZinnLength) +
                        " terms, got " + std::to_string(size));
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (sgn(terms[i]) <= 0) {
      throw SequenceError("nonpositive-entry: a(" + std::to_string(i + 1) + ") <= 0");
    }
  }
  if (window < 1 || window > size - 2) {
    throw SequenceError("window must be in 1.." + std::to_string(size - 2));
  }

  ZinnEstimate est;
  est.size = size;
  est.window = window;
  est.points.reserve(size - 2);

  auto a = [&](std::size_t n) -> const BigNat& { return terms[n - 1]; };
  mpf_class prev_ratio = ratio(a(2), a(1));
  mpf_class one(1, kPrecisionBits);
  for (std::size_t n = 3; n <= size; ++n) {
    mpf_class r = ratio(a(n), a(n - 1));
    mpf_class nn(static_cast<double>(n), kPrecisionBits);
    mpf_class g(0, kPrecisionBits);
    g = nn * (nn - one) * (one - r / prev_ratio);
    mpf_class mu(0, kPrecisionBits);
    mu = r / (one + g / nn);
    est.points.push_back({n, r.get_d(), g.get_d(), mu.get_d(), -g.get_d()});
    prev_ratio = r;
  }

  double mu_sum = 0;
  double exp_sum = 0;
  for (auto it = est.points.end() - static_cast<std::ptrdiff_t>(window); it != est.points.end(); ++it) {
    mu_sum += it->mu;
    exp_sum += it->exponent;
  }
  est.mu_hat = mu_sum / static_cast<double>(window);
  est.exponent_hat = exp_sum / static_cast<double>(window);
  return est;
}

}  // namespace onefold
