#pragma once

#include <cstdint>
#include <span>

#include "dilithium/keccak.hpp"
#include "dilithium/packing.hpp"
#include "dilithium/poly.hpp"

namespace dilithium {

// Order-preserving rejection compaction: appends the candidates accepted by
// `accept` to out[ctr..], stopping once out is full, and returns the updated
// count. This sequential form is the specification any batched or vectorised
// compaction has to match element for element.
template <class Accept>
constexpr size_t rej_compact(std::span<const int32_t> candidates, Accept&& accept,
                             std::span<int32_t> out, size_t ctr) {
  for (int32_t t : candidates) {
    if (ctr == out.size()) break;
    if (accept(t)) out[ctr++] = t;
  }
  return ctr;
}

namespace detail {

inline keccak::Xof seeded_xof(bool wide, std::span<const uint8_t> seed, uint16_t nonce) {
  keccak::Xof xof = wide ? keccak::Xof::shake128() : keccak::Xof::shake256();
  xof.absorb(seed);
  const uint8_t n[2] = {static_cast<uint8_t>(nonce), static_cast<uint8_t>(nonce >> 8)};
  xof.absorb(n);
  return xof;
}

}  // namespace detail

// Uniform matrix polynomial: SHAKE128(rho || nonce(i,j)) with 23-bit
// little-endian candidates accepted below q. One rate block yields exactly
// 168/3 = 56 candidates, so no candidate straddles a block boundary. The
// result is by definition in the NTT domain.
inline NttPoly expand_a(std::span<const uint8_t, kSeedBytes> rho, uint32_t i, uint32_t j) {
  auto xof = detail::seeded_xof(true, rho, static_cast<uint16_t>((i << 8) | j));
  NttPoly a;
  size_t ctr = 0;
  uint8_t block[keccak::kShake128Rate];
  int32_t cand[keccak::kShake128Rate / 3];
  while (ctr < kN) {
    xof.squeeze(block);
    for (size_t c = 0; c < std::size(cand); ++c) {
      cand[c] = (block[3 * c] | (block[3 * c + 1] << 8) | (block[3 * c + 2] << 16)) & 0x7FFFFF;
    }
    ctr = rej_compact(cand, [](int32_t t) { return t < kQ; }, a.c, ctr);
  }
  return a;
}

// Bounded secret polynomial: SHAKE256(rho' || nonce), nibble-wise rejection.
// eta = 2 keeps nibbles below 15 and folds them mod 5; eta = 4 keeps nibbles
// below 9. Nonces run 0..l-1 for s1 and l..l+k-1 for s2.
inline NormalPoly expand_s(std::span<const uint8_t, kCrhBytes> rho_prime, uint16_t nonce,
                           int32_t eta) {
  auto xof = detail::seeded_xof(false, rho_prime, nonce);
  NormalPoly s;
  size_t ctr = 0;
  uint8_t block[keccak::kShake256Rate];
  int32_t cand[2 * keccak::kShake256Rate];
  const int32_t limit = eta == 2 ? 15 : 9;
  while (ctr < kN) {
    xof.squeeze(block);
    for (size_t b = 0; b < std::size(block); ++b) {
      cand[2 * b] = block[b] & 0xF;
      cand[2 * b + 1] = block[b] >> 4;
    }
    ctr = rej_compact(cand, [limit](int32_t t) { return t < limit; }, s.c, ctr);
  }
  for (auto& c : s.c) c = eta == 2 ? 2 - c % 5 : 4 - c;
  return s;
}

// Mask polynomial: no rejection, gamma1-bit packed stream decoded exactly as
// the z codec, landing in [-gamma1 + 1, gamma1].
inline NormalPoly expand_mask(std::span<const uint8_t, kCrhBytes> rho_prime, uint16_t nonce,
                              int32_t gamma1, size_t z_bits) {
  auto xof = detail::seeded_xof(false, rho_prime, nonce);
  uint8_t buf[kN * 20 / 8];
  auto used = std::span<uint8_t>(buf, kN * z_bits / 8);
  xof.squeeze(used);
  NormalPoly y;
  unpack_z(used, y, gamma1, z_bits);
  return y;
}

// Sparse challenge with tau coefficients in {-1, +1}: the first eight
// squeezed bytes supply sign bits, then a Fisher-Yates walk places each sign
// at a position drawn by byte rejection against the loop index.
inline NormalPoly sample_in_ball(std::span<const uint8_t, kSeedBytes> c_tilde, int32_t tau) {
  keccak::Xof xof = keccak::Xof::shake256();
  xof.absorb(c_tilde);
  uint8_t block[keccak::kShake256Rate];
  xof.squeeze(block);
  uint64_t signs = 0;
  for (size_t i = 0; i < 8; ++i) signs |= static_cast<uint64_t>(block[i]) << (8 * i);
  size_t pos = 8;
  NormalPoly c{};
  for (size_t i = kN - static_cast<size_t>(tau); i < kN; ++i) {
    size_t b;
    do {
      if (pos == std::size(block)) {
        xof.squeeze(block);
        pos = 0;
      }
      b = block[pos++];
    } while (b > i);
    c.c[i] = c.c[b];
    c.c[b] = 1 - 2 * static_cast<int32_t>(signs & 1);
    signs >>= 1;
  }
  return c;
}

}  // namespace dilithium
