#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace onefold {

// Arbitrary-precision non-negative integer. Every count and formula value in
// the library is a BigNat; nothing is ever narrowed silently.
using BigNat = mpz_class;

inline BigNat big(std::uint64_t v) {
  BigNat r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

inline std::string to_decimal(const BigNat& v) { return v.get_str(10); }

// Parses a canonical decimal rendering: digits only, no sign, no leading zeros
// (except "0" itself). Returns false on anything else.
bool parse_decimal(std::string_view text, BigNat& out);

inline std::size_t bit_length(const BigNat& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline bool fits_u64(const BigNat& v) {
  return sgn(v) >= 0 && bit_length(v) <= 64;
}

// Precondition: fits_u64(v).
inline std::uint64_t to_u64(const BigNat& v) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace onefold
