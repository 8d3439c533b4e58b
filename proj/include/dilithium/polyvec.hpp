#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "dilithium/ntt.hpp"
#include "dilithium/poly.hpp"

namespace dilithium {

// Vector of ring elements sharing one domain (dimension k or l in practice).
template <size_t Dim, Domain Dom>
struct PolyVec {
  std::array<Poly<Dom>, Dim> p{};

  friend bool operator==(const PolyVec&, const PolyVec&) = default;
};

template <size_t Dim, Domain Dom>
constexpr PolyVec<Dim, Dom> add(const PolyVec<Dim, Dom>& a, const PolyVec<Dim, Dom>& b) {
  PolyVec<Dim, Dom> r;
  for (size_t i = 0; i < Dim; ++i) r.p[i] = add(a.p[i], b.p[i]);
  return r;
}

template <size_t Dim, Domain Dom>
constexpr void reduce_vec(PolyVec<Dim, Dom>& v) {
  for (auto& f : v.p) reduce_poly(f);
}

template <size_t Dim, Domain Dom>
constexpr void caddq_vec(PolyVec<Dim, Dom>& v) {
  for (auto& f : v.p) caddq_poly(f);
}

template <size_t Dim>
PolyVec<Dim, Domain::Ntt> ntt_vec(const PolyVec<Dim, Domain::Normal>& v) {
  PolyVec<Dim, Domain::Ntt> r;
  for (size_t i = 0; i < Dim; ++i) r.p[i] = ntt(v.p[i]);
  return r;
}

template <size_t Dim>
PolyVec<Dim, Domain::Normal> intt_vec(const PolyVec<Dim, Domain::Ntt>& v) {
  PolyVec<Dim, Domain::Normal> r;
  for (size_t i = 0; i < Dim; ++i) r.p[i] = intt(v.p[i]);
  return r;
}

template <size_t Dim>
void to_mont_vec(PolyVec<Dim, Domain::Ntt>& v) {
  for (auto& f : v.p) to_mont_inplace(f.c);
}

enum class MatOrder { RowMajor, ColMajor };

// acc_i += sum_j A_ij ∘ v_j with the matrix supplied one polynomial at a time
// in the declared traversal order; v must be in Montgomery form so the
// accumulated products come out in standard representation. Column order
// consumes one column against one v_j at a time, so a caller generating the
// matrix on the fly never holds more than a single polynomial of it.
// The supplier is drained exactly K*L times; early exhaustion throws.
// Outputs are centered on return.
template <size_t K, size_t L, class Supplier>
void matvec_accumulate(Supplier&& next, MatOrder order, const PolyVec<L, Domain::Ntt>& v,
                       PolyVec<K, Domain::Ntt>& acc) {
  auto take = [&]() -> NttPoly {
    std::optional<NttPoly> f = next();
    if (!f) throw std::runtime_error("matvec_accumulate: matrix supplier exhausted");
    return *f;
  };
  if (order == MatOrder::RowMajor) {
    for (size_t i = 0; i < K; ++i) {
      for (size_t j = 0; j < L; ++j) {
        const NttPoly a = take();
        for (size_t m = 0; m < kN; ++m) acc.p[i].c[m] += mont_mul(a.c[m], v.p[j].c[m]);
      }
    }
  } else {
    for (size_t j = 0; j < L; ++j) {
      for (size_t i = 0; i < K; ++i) {
        const NttPoly a = take();
        for (size_t m = 0; m < kN; ++m) acc.p[i].c[m] += mont_mul(a.c[m], v.p[j].c[m]);
      }
    }
  }
  reduce_vec(acc);
}

}  // namespace dilithium
