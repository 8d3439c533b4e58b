#pragma once

#include <cassert>
#include <cstdint>

#include "dilithium/params.hpp"

namespace dilithium {

namespace detail {

// q^{-1} mod 2^32 via extended Euclid, evaluated at compile time so the
// hard-coded constant below cannot silently rot. Bezout coefficients for the
// pair (q, 2^32) stay below 2^32, so int64 arithmetic suffices.
constexpr uint32_t qinv_mod_2_32() {
  int64_t old_a = 1, a = 0;
  int64_t old_g = kQ, g = int64_t{1} << 32;
  while (g != 0) {
    const int64_t quot = old_g / g;
    int64_t tmp = old_a - quot * a;
    old_a = a;
    a = tmp;
    tmp = old_g - quot * g;
    old_g = g;
    g = tmp;
  }
  // old_a * q ≡ gcd = 1 (mod 2^32)
  return static_cast<uint32_t>(static_cast<uint64_t>(old_a));
}

}  // namespace detail

inline constexpr uint32_t kQInv = 58728449;                                    // q^{-1} mod 2^32
inline constexpr int32_t kMontR = static_cast<int32_t>((uint64_t{1} << 32) % kQ);  // 2^32 mod q
inline constexpr int32_t kMontR2 =
    static_cast<int32_t>(static_cast<uint64_t>(kMontR) * kMontR % kQ);  // 2^64 mod q

static_assert(detail::qinv_mod_2_32() == kQInv);
static_assert(static_cast<uint32_t>(kQInv * static_cast<uint32_t>(kQ)) == 1u);

// Montgomery reduction: returns c ≡ a * 2^{-32} (mod q) with |c| < q.
// Requires |a| < 2^31 * q; any product of a reduced coefficient (|x| < q)
// with an operand below 2^31 in magnitude satisfies this strictly.
constexpr int32_t mont_reduce(int64_t a) {
  assert(a < (int64_t{1} << 31) * kQ && -a < (int64_t{1} << 31) * kQ);
  int32_t t = static_cast<int32_t>(static_cast<uint32_t>(a) * kQInv);
  return static_cast<int32_t>((a - static_cast<int64_t>(t) * kQ) >> 32);
}

// Montgomery product a*b*2^{-32} mod q.
constexpr int32_t mont_mul(int32_t a, int32_t b) {
  return mont_reduce(static_cast<int64_t>(a) * b);
}

// Centered reduction: a mod± q in (-(q+1)/2, q/2] for any |a| < 2^31.
// Division-free; a shifted multiply estimates the quotient and two masked
// adjustments land the remainder in the canonical centered window.
constexpr int32_t reduce_centered(int32_t a) {
  constexpr int32_t half = (kQ - 1) / 2;
  int32_t t = static_cast<int32_t>((static_cast<int64_t>(a) + (1 << 22)) >> 23);
  t = a - t * kQ;  // |t| <= 6283008
  t -= ((half - t) >> 31) & kQ;
  t += ((t + half) >> 31) & kQ;
  return t;
}

// Adds q to negative inputs: maps (-q, q) onto [0, q).
constexpr int32_t caddq(int32_t a) {
  return a + ((a >> 31) & kQ);
}

// Canonical representative in [0, q) for a in (-q, 2q).
constexpr int32_t canon_mod_q(int32_t a) {
  a += (a >> 31) & kQ;
  a -= (((kQ - 1) - a) >> 31) & kQ;
  return a;
}

// x -> x * 2^32 mod q (Montgomery form).
constexpr int32_t to_mont(int32_t a) {
  return mont_reduce(static_cast<int64_t>(a) * kMontR2);
}

}  // namespace dilithium
