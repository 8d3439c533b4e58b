#pragma once

#include <cstddef>
#include <cstdint>

namespace dilithium {

inline constexpr int32_t kQ = 8380417;  // 2^23 - 2^13 + 1
inline constexpr size_t kN = 256;
inline constexpr int kD = 13;  // bits dropped from t by Power2Round

inline constexpr size_t kSeedBytes = 32;  // rho, K, tr, zeta, c-tilde
inline constexpr size_t kCrhBytes = 64;   // rho', mu

// One NIST security level. All wire-format byte sizes are derived here so the
// codecs, the scheme and the memory pool agree on a single source of truth.
struct Params {
  int level;
  size_t k;        // rows of A; dimension of t, s2, w, h
  size_t l;        // columns of A; dimension of s1, y, z
  int32_t eta;     // secret coefficient bound
  int32_t tau;     // nonzero coefficients of the challenge
  int32_t beta;    // tau * eta
  int32_t gamma1;  // mask coefficients lie in (-gamma1, gamma1]
  int32_t gamma2;  // low-order rounding range
  size_t omega;    // maximum total hint weight
  size_t eta_bits;
  size_t z_bits;
  size_t w1_bits;

  constexpr int32_t alpha() const { return 2 * gamma2; }
  // number of distinct high-bits values, (q-1)/alpha
  constexpr int32_t decomp_m() const { return (kQ - 1) / alpha(); }

  constexpr size_t poly_eta_bytes() const { return kN * eta_bits / 8; }
  constexpr size_t poly_z_bytes() const { return kN * z_bits / 8; }
  constexpr size_t poly_w1_bytes() const { return kN * w1_bits / 8; }
  static constexpr size_t poly_t1_bytes() { return kN * 10 / 8; }
  static constexpr size_t poly_t0_bytes() { return kN * kD / 8; }

  constexpr size_t pk_bytes() const { return kSeedBytes + k * poly_t1_bytes(); }
  constexpr size_t sk_bytes() const {
    return 3 * kSeedBytes + (k + l) * poly_eta_bytes() + k * poly_t0_bytes();
  }
  constexpr size_t hint_bytes() const { return omega + k; }
  constexpr size_t sig_bytes() const {
    return kSeedBytes + l * poly_z_bytes() + hint_bytes();
  }

  friend constexpr bool operator==(const Params&, const Params&) = default;
};

inline constexpr Params kDilithium2{2, 4, 4, 2, 39, 78, 1 << 17, (kQ - 1) / 88, 80, 3, 18, 6};
inline constexpr Params kDilithium3{3, 6, 5, 4, 49, 196, 1 << 19, (kQ - 1) / 32, 55, 4, 20, 4};
inline constexpr Params kDilithium5{5, 8, 7, 2, 60, 120, 1 << 19, (kQ - 1) / 32, 75, 3, 20, 4};

namespace detail {

constexpr bool params_consistent(const Params& p) {
  bool ok = p.beta == p.tau * p.eta;
  ok = ok && (kQ - 1) % (2 * p.gamma2) == 0;
  ok = ok && (p.decomp_m() == 44 || p.decomp_m() == 16);
  ok = ok && kN * p.eta_bits % 8 == 0 && kN * p.z_bits % 8 == 0 && kN * p.w1_bits % 8 == 0;
  ok = ok && (1u << p.z_bits) == 2u * static_cast<uint32_t>(p.gamma1);
  return ok;
}

}  // namespace detail

static_assert(kDilithium2.gamma2 == 95232 && kDilithium2.decomp_m() == 44);
static_assert(kDilithium3.gamma2 == 261888 && kDilithium3.decomp_m() == 16);
static_assert(kDilithium5.gamma2 == 261888 && kDilithium5.decomp_m() == 16);
static_assert(detail::params_consistent(kDilithium2));
static_assert(detail::params_consistent(kDilithium3));
static_assert(detail::params_consistent(kDilithium5));

static_assert(kDilithium2.pk_bytes() == 1312 && kDilithium2.sk_bytes() == 2528 &&
              kDilithium2.sig_bytes() == 2420);
static_assert(kDilithium3.pk_bytes() == 1952 && kDilithium3.sk_bytes() == 4000 &&
              kDilithium3.sig_bytes() == 3293);
static_assert(kDilithium5.pk_bytes() == 2592 && kDilithium5.sk_bytes() == 4864 &&
              kDilithium5.sig_bytes() == 4595);

template <Params P>
struct ParamsTag {
  static constexpr Params value = P;
};

// Dispatches a runtime level to the matching compile-time parameter set.
// fn receives a ParamsTag; returns false for unsupported levels.
template <class Fn>
bool with_params(int level, Fn&& fn) {
  switch (level) {
    case 2:
      fn(ParamsTag<kDilithium2>{});
      return true;
    case 3:
      fn(ParamsTag<kDilithium3>{});
      return true;
    case 5:
      fn(ParamsTag<kDilithium5>{});
      return true;
    default:
      return false;
  }
}

}  // namespace dilithium
