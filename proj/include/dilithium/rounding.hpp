#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "dilithium/polyvec.hpp"
#include "dilithium/reduce.hpp"

namespace dilithium {

// Splits a in [0, q) into a1 * 2^13 + a0 with a0 in (-4096, 4096].
constexpr std::pair<int32_t, int32_t> power2round(int32_t a) {
  const int32_t a1 = (a + (1 << (kD - 1)) - 1) >> kD;
  return {a1, a - (a1 << kD)};
}

// Splits r in [0, q) into r1 * 2*gamma2 + r0 with r0 = r mod± 2*gamma2 and
// r1 in [0, (q-1)/(2*gamma2)); the r - r0 = q - 1 corner folds to
// (0, r0 - 1). Arithmetic selects only; the lone branch keys on the public
// parameter gamma2, never on the value.
constexpr std::pair<int32_t, int32_t> decompose(int32_t r, int32_t gamma2) {
  int32_t a1 = (r + 127) >> 7;
  if (gamma2 == (kQ - 1) / 32) {
    a1 = (a1 * 1025 + (1 << 21)) >> 22;
    a1 &= 15;
  } else {  // gamma2 == (q - 1) / 88
    a1 = (a1 * 11275 + (1 << 23)) >> 24;
    a1 ^= ((43 - a1) >> 31) & a1;
  }
  int32_t a0 = r - a1 * 2 * gamma2;
  a0 -= (((kQ - 1) / 2 - a0) >> 31) & kQ;
  return {a1, a0};
}

constexpr int32_t highbits(int32_t r, int32_t gamma2) {
  return decompose(r, gamma2).first;
}

constexpr int32_t lowbits(int32_t r, int32_t gamma2) {
  return decompose(r, gamma2).second;
}

// Hint bit: does adding z move r across a decomposition boundary?
// Both inputs canonical in [0, q).
constexpr int make_hint(int32_t z, int32_t r, int32_t gamma2) {
  int32_t s = r + z;
  s -= (((kQ - 1) - s) >> 31) & kQ;
  return highbits(r, gamma2) != highbits(s, gamma2) ? 1 : 0;
}

// Recovers the high bits of r + z from r and the hint bit alone.
constexpr int32_t use_hint(int h, int32_t r, int32_t gamma2) {
  const int32_t m = (kQ - 1) / (2 * gamma2);
  const auto [r1, r0] = decompose(r, gamma2);
  if (h == 0) return r1;
  if (r0 > 0) return r1 + 1 == m ? 0 : r1 + 1;
  return r1 == 0 ? m - 1 : r1 - 1;
}

// True = reject: some coefficient has centered magnitude >= bound. The scan
// covers every coefficient with no value-dependent branch; only the final
// verdict (which the rejection loop publishes anyway) depends on the data.
inline bool chknorm(const NormalPoly& f, int32_t bound) {
  if (bound > (kQ - 1) / 8) throw std::invalid_argument("chknorm: bound exceeds (q-1)/8");
  int32_t hit = 0;
  for (int32_t c : f.c) {
    int32_t a = reduce_centered(c);
    const int32_t sign = a >> 31;
    a = (a ^ sign) - sign;  // |a|
    hit |= static_cast<int32_t>(a >= bound);
  }
  return hit != 0;
}

template <size_t Dim>
bool chknorm_vec(const PolyVec<Dim, Domain::Normal>& v, int32_t bound) {
  bool reject = false;
  for (const auto& f : v.p) reject = chknorm(f, bound) || reject;
  return reject;
}

// Total weight of a 0/1 hint vector.
template <size_t Dim>
size_t hint_weight(const PolyVec<Dim, Domain::Normal>& h) {
  size_t w = 0;
  for (const auto& f : h.p)
    for (int32_t c : f.c) w += static_cast<size_t>(c);
  return w;
}

}  // namespace dilithium
