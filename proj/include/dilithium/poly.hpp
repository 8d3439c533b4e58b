#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "dilithium/reduce.hpp"

namespace dilithium {

enum class Domain { Normal, Ntt };

// Ring element of R_q = Z_q[X]/(X^256 + 1). The domain tag records whether
// the 256 coefficients are positional or NTT evaluations; the transforms move
// values between the two representations at the type level, so mixing domains
// is a compile error rather than a runtime check.
template <Domain Dom>
struct Poly {
  std::array<int32_t, kN> c{};

  friend bool operator==(const Poly&, const Poly&) = default;
};

using NormalPoly = Poly<Domain::Normal>;
using NttPoly = Poly<Domain::Ntt>;

// Lazy coefficient-wise sum: no reduction, |out| <= |a| + |b|.
template <Domain Dom>
constexpr Poly<Dom> add(const Poly<Dom>& a, const Poly<Dom>& b) {
  Poly<Dom> r;
  for (size_t i = 0; i < kN; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

// Lazy coefficient-wise difference: |out| <= |a| + |b|.
template <Domain Dom>
constexpr Poly<Dom> sub(const Poly<Dom>& a, const Poly<Dom>& b) {
  Poly<Dom> r;
  for (size_t i = 0; i < kN; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

// Multiplies every coefficient by 2^13. Used on t1 before transforming in
// verification; inputs must stay below 2^18 so the shift cannot overflow.
constexpr NormalPoly shiftl_d(const NormalPoly& a) {
  NormalPoly r;
  for (size_t i = 0; i < kN; ++i) r.c[i] = a.c[i] << kD;
  return r;
}

template <Domain Dom>
constexpr void reduce_poly(Poly<Dom>& a) {
  for (auto& x : a.c) x = reduce_centered(x);
}

template <Domain Dom>
constexpr void caddq_poly(Poly<Dom>& a) {
  for (auto& x : a.c) x = caddq(x);
}

}  // namespace dilithium
