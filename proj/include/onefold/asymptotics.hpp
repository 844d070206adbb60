#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "onefold/bignat.hpp"

namespace onefold {

// Ratio-method diagnostics at one index n >= 3 for a sequence modelled as
// a(n) ~ c * mu^n * n^(-g).
struct ZinnPoint {
  std::size_t n;
  double ratio;     // r(n) = a(n) / a(n-1)
  double g;         // n(n-1)(1 - r(n)/r(n-1)); tends to -g
  double mu;        // r(n) / (1 + g(n)/n); tends to mu
  double exponent;  // -g(n); tends to g
};

struct ZinnEstimate {
  std::vector<ZinnPoint> points;  // n = 3..size
  std::size_t size = 0;           // N, the last index used
  std::size_t window = 0;
  double mu_hat = 0;        // mean of mu(n) over the last window points
  double exponent_hat = 0;  // mean of -g(n) over the last window points

  // max - min of mu(n) over the last window points.
  double mu_spread() const;
};

class SequenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultZinnWindow = 20;
inline constexpr std::size_t kMinZinnLength = 10;

// terms[0] is a(1). Ratios are formed at 256-bit precision before rounding to
// double. Throws SequenceError for fewer than kMinZinnLength terms, a
// non-positive term, or a window outside 1..N-2.
ZinnEstimate zinn_estimate(std::span<const BigNat> terms,
                           std::size_t window = kDefaultZinnWindow);

}  // namespace onefold
