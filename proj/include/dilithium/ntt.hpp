#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "dilithium/poly.hpp"
#include "dilithium/reduce.hpp"

namespace dilithium {

// psi is the primitive 512-th root of unity generating the negacyclic
// transform: psi^256 ≡ -1 (mod q).
inline constexpr int32_t kPsi = 1753;

namespace detail {

constexpr int32_t pow_mod(int64_t base, uint32_t exp) {
  int64_t acc = 1;
  base %= kQ;
  while (exp != 0) {
    if (exp & 1) acc = acc * base % kQ;
    base = base * base % kQ;
    exp >>= 1;
  }
  return static_cast<int32_t>(acc);
}

constexpr uint32_t bit_rev8(uint32_t v) {
  uint32_t r = 0;
  for (int i = 0; i < 8; ++i) r |= ((v >> i) & 1u) << (7 - i);
  return r;
}

// psi must be the *smallest* g with g^256 ≡ -1; anything smaller would mean
// the table below was built from the wrong root.
constexpr bool smallest_negacyclic_root(int32_t psi) {
  for (int32_t g = 2; g < psi; ++g) {
    if (pow_mod(g, kN) == kQ - 1) return false;
  }
  return pow_mod(psi, kN) == kQ - 1;
}

static_assert(smallest_negacyclic_root(kPsi));

// Twiddles in Montgomery form, indexed in bit-reversed order so both
// transforms walk the table linearly.
constexpr std::array<int32_t, kN> make_zetas() {
  std::array<int32_t, kN> z{};
  for (uint32_t k = 0; k < kN; ++k) {
    int64_t v = pow_mod(kPsi, bit_rev8(k));
    z[k] = static_cast<int32_t>(v * kMontR % kQ);
  }
  return z;
}

}  // namespace detail

inline constexpr std::array<int32_t, kN> kZetas = detail::make_zetas();

// Scale constants for the inverse transform: multiplication by c via
// mont_mul needs c * 2^32 mod q. The last inverse level fuses n^{-1} into
// both butterfly outputs, so no separate scaling pass is required.
namespace detail {
inline constexpr int32_t kInvNMont =
    static_cast<int32_t>(static_cast<int64_t>(pow_mod(kN, kQ - 2)) * kMontR % kQ);
inline constexpr int32_t kInvNZetaMont = static_cast<int32_t>(
    static_cast<int64_t>(pow_mod(kN, kQ - 2)) * (kQ - pow_mod(kPsi, 128)) % kQ * kMontR % kQ);
}  // namespace detail

// In-place forward transform over reduced coefficients (|a_i| <= q suffices;
// values grow by at most q per level, staying far below 2^31). Eight
// Cooley-Tukey levels, fixed trip counts, no value-dependent control flow.
inline void ntt_inplace(std::span<int32_t, kN> a) {
  size_t k = 0;
  for (size_t len = 128; len > 0; len >>= 1) {
    for (size_t start = 0; start < kN; start += 2 * len) {
      const int32_t zeta = kZetas[++k];
      for (size_t j = start; j < start + len; ++j) {
        const int32_t t = mont_mul(zeta, a[j + len]);
        a[j + len] = a[j] - t;
        a[j] = a[j] + t;
      }
    }
  }
}

// In-place inverse transform. Requires |a_i| <= q on input (the all-sums path
// reaches 256*q, which still fits in 32 bits). The final Gentleman-Sande
// level multiplies both butterfly halves by n^{-1} alongside the last
// twiddle, so outputs are already scaled; every output satisfies |a_i| < q.
inline void intt_inplace(std::span<int32_t, kN> a) {
  size_t k = kN;
  for (size_t len = 1; len < 128; len <<= 1) {
    for (size_t start = 0; start < kN; start += 2 * len) {
      const int32_t zeta = kQ - kZetas[--k];
      for (size_t j = start; j < start + len; ++j) {
        const int32_t t = a[j];
        a[j] = t + a[j + len];
        a[j + len] = mont_mul(zeta, t - a[j + len]);
      }
    }
  }
  // len == 128: single group, twiddle -zetas[1] fused with n^{-1}
  for (size_t j = 0; j < 128; ++j) {
    const int32_t t = a[j];
    a[j] = mont_mul(detail::kInvNMont, t + a[j + 128]);
    a[j + 128] = mont_mul(detail::kInvNZetaMont, t - a[j + 128]);
  }
}

inline NttPoly ntt(const NormalPoly& f) {
  NttPoly out;
  out.c = f.c;
  ntt_inplace(out.c);
  return out;
}

// Typed inverse: output canonically centered.
inline NormalPoly intt(const NttPoly& f) {
  NormalPoly out;
  out.c = f.c;
  intt_inplace(out.c);
  reduce_poly(out);
  return out;
}

// c_i = mont_reduce(a_i * b_i): the product carries a 2^{-32} factor, so
// exactly one operand is expected in Montgomery form.
inline NttPoly pointwise_mont(const NttPoly& a, const NttPoly& b) {
  NttPoly r;
  for (size_t i = 0; i < kN; ++i) r.c[i] = mont_mul(a.c[i], b.c[i]);
  return r;
}

inline void to_mont_inplace(std::span<int32_t, kN> a) {
  for (auto& x : a) x = to_mont(x);
}

inline NttPoly to_mont_poly(NttPoly a) {
  to_mont_inplace(a.c);
  return a;
}

}  // namespace dilithium
