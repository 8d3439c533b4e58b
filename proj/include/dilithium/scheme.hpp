#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dilithium/keccak.hpp"
#include "dilithium/packing.hpp"
#include "dilithium/params.hpp"
#include "dilithium/polyvec.hpp"
#include "dilithium/rounding.hpp"
#include "dilithium/sampling.hpp"

namespace dilithium {

using CrhArray = std::array<uint8_t, kCrhBytes>;

// Per-key signing state, derived once and shared read-only by any number of
// workers: secret vectors transformed and in Montgomery form, plus the
// expanded matrix cached row-major since the rejection loop reuses it every
// attempt. Key generation and verification never materialise the matrix.
template <Params P>
struct SignPrecomp {
  SeedArray rho{}, key{}, tr{};
  PolyVec<P.l, Domain::Ntt> s1hat{};
  PolyVec<P.k, Domain::Ntt> s2hat{};
  PolyVec<P.k, Domain::Ntt> t0hat{};
  std::vector<NttPoly> mat;  // k*l polynomials, row-major
};

enum class RejectStage { ZNorm, R0Norm, VtNorm, HintWeight };

template <Params P>
struct AttemptResult {
  bool accepted = false;
  RejectStage stage = RejectStage::ZNorm;  // meaningful only when rejected
  SeedArray c_tilde{};
  PolyVec<P.l, Domain::Normal> z{};      // centered
  PolyVec<P.k, Domain::Normal> hints{};  // 0/1 coefficients
};

namespace detail {

// Column-order on-the-fly matrix supplier for keygen/verify.
template <Params P>
auto expand_a_col_supplier(const SeedArray& rho) {
  return [&rho, n = size_t{0}]() mutable -> std::optional<NttPoly> {
    if (n == P.k * P.l) return std::nullopt;
    const size_t j = n / P.k, i = n % P.k;
    ++n;
    return expand_a(rho, static_cast<uint32_t>(i), static_cast<uint32_t>(j));
  };
}

template <Params P>
auto cached_row_supplier(const std::vector<NttPoly>& mat) {
  return [&mat, n = size_t{0}]() mutable -> std::optional<NttPoly> {
    if (n == mat.size()) return std::nullopt;
    return mat[n++];
  };
}

}  // namespace detail

template <Params P>
std::pair<PkBytes<P>, SkBytes<P>> keygen(std::span<const uint8_t, kSeedBytes> zeta) {
  std::array<uint8_t, 2 * kSeedBytes + kCrhBytes> seedbuf;
  keccak::shake256(seedbuf, zeta);
  SeedArray rho, key;
  CrhArray rho_prime;
  std::copy_n(seedbuf.begin(), kSeedBytes, rho.begin());
  std::copy_n(seedbuf.begin() + kSeedBytes, kCrhBytes, rho_prime.begin());
  std::copy_n(seedbuf.begin() + kSeedBytes + kCrhBytes, kSeedBytes, key.begin());

  PolyVec<P.l, Domain::Normal> s1;
  PolyVec<P.k, Domain::Normal> s2;
  for (size_t i = 0; i < P.l; ++i) s1.p[i] = expand_s(rho_prime, static_cast<uint16_t>(i), P.eta);
  for (size_t i = 0; i < P.k; ++i)
    s2.p[i] = expand_s(rho_prime, static_cast<uint16_t>(P.l + i), P.eta);

  auto s1hat = ntt_vec(s1);
  to_mont_vec(s1hat);
  PolyVec<P.k, Domain::Ntt> that{};
  matvec_accumulate<P.k, P.l>(detail::expand_a_col_supplier<P>(rho), MatOrder::ColMajor, s1hat,
                              that);

  PolyVec<P.k, Domain::Normal> t1, t0;
  for (size_t i = 0; i < P.k; ++i) {
    NormalPoly t = intt(that.p[i]);
    for (size_t m = 0; m < kN; ++m) {
      const int32_t c = caddq(t.c[m] + s2.p[i].c[m]);
      const auto [hi, lo] = power2round(c);
      t1.p[i].c[m] = hi;
      t0.p[i].c[m] = lo;
    }
  }

  PkBytes<P> pk = pack_pk<P>(rho, t1);
  SeedArray tr = keccak::hash_h<kSeedBytes>({std::span<const uint8_t>(pk)});
  return {pk, pack_sk<P>(rho, key, tr, s1, s2, t0)};
}

template <Params P>
std::optional<SignPrecomp<P>> make_precomp(std::span<const uint8_t> sk_bytes) {
  auto sk = unpack_sk<P>(sk_bytes);
  if (!sk) return std::nullopt;
  SignPrecomp<P> pre;
  pre.rho = sk->rho;
  pre.key = sk->key;
  pre.tr = sk->tr;
  pre.s1hat = ntt_vec(sk->s1);
  to_mont_vec(pre.s1hat);
  pre.s2hat = ntt_vec(sk->s2);
  to_mont_vec(pre.s2hat);
  pre.t0hat = ntt_vec(sk->t0);
  to_mont_vec(pre.t0hat);
  pre.mat.reserve(P.k * P.l);
  for (size_t i = 0; i < P.k; ++i)
    for (size_t j = 0; j < P.l; ++j)
      pre.mat.push_back(expand_a(pre.rho, static_cast<uint32_t>(i), static_cast<uint32_t>(j)));
  return pre;
}

namespace detail {

// One rejection-loop iteration with injectable norm bounds (tests force
// individual reject stages through them). Norm checks run polynomial by
// polynomial and bail out at the first violation, so later pipeline stages
// are never computed for a doomed attempt.
template <Params P>
AttemptResult<P> sign_attempt_bounded(const SignPrecomp<P>& pre,
                                      std::span<const uint8_t, kCrhBytes> mu,
                                      std::span<const uint8_t, kCrhBytes> rho_prime,
                                      uint32_t kappa, int32_t z_bound, int32_t r0_bound,
                                      int32_t vt_bound) {
  AttemptResult<P> res;

  PolyVec<P.l, Domain::Normal> y;
  for (size_t j = 0; j < P.l; ++j)
    y.p[j] = expand_mask(rho_prime, static_cast<uint16_t>(kappa + j), P.gamma1, P.z_bits);
  auto yhat = ntt_vec(y);
  to_mont_vec(yhat);

  PolyVec<P.k, Domain::Ntt> what{};
  matvec_accumulate<P.k, P.l>(cached_row_supplier<P>(pre.mat), MatOrder::RowMajor, yhat, what);

  PolyVec<P.k, Domain::Normal> w;
  PolyVec<P.k, Domain::Normal> w1;
  for (size_t i = 0; i < P.k; ++i) {
    w.p[i] = intt(what.p[i]);
    caddq_poly(w.p[i]);
    for (size_t m = 0; m < kN; ++m) w1.p[i].c[m] = highbits(w.p[i].c[m], P.gamma2);
  }

  std::array<uint8_t, P.k * P.poly_w1_bytes()> w1_packed;
  for (size_t i = 0; i < P.k; ++i)
    pack_w1(std::span<uint8_t>(w1_packed).subspan(i * P.poly_w1_bytes(), P.poly_w1_bytes()),
            w1.p[i], P.w1_bits);
  keccak::hash_h({std::span<const uint8_t>(mu), std::span<const uint8_t>(w1_packed)},
                 res.c_tilde);

  const NttPoly chat = ntt(sample_in_ball(res.c_tilde, P.tau));

  for (size_t j = 0; j < P.l; ++j) {
    const NormalPoly cs1 = intt(pointwise_mont(chat, pre.s1hat.p[j]));
    for (size_t m = 0; m < kN; ++m) res.z.p[j].c[m] = reduce_centered(y.p[j].c[m] + cs1.c[m]);
    if (chknorm(res.z.p[j], z_bound)) {
      res.stage = RejectStage::ZNorm;
      return res;
    }
  }

  // w - c*s2 canonical in [0, q); its low bits carry the r0 norm check
  PolyVec<P.k, Domain::Normal> w_cs2;
  for (size_t i = 0; i < P.k; ++i) {
    const NormalPoly cs2 = intt(pointwise_mont(chat, pre.s2hat.p[i]));
    NormalPoly r0;
    for (size_t m = 0; m < kN; ++m) {
      const int32_t c = canon_mod_q(reduce_centered(w.p[i].c[m] - cs2.c[m]));
      w_cs2.p[i].c[m] = c;
      r0.c[m] = lowbits(c, P.gamma2);
    }
    if (chknorm(r0, r0_bound)) {
      res.stage = RejectStage::R0Norm;
      return res;
    }
  }

  PolyVec<P.k, Domain::Normal> vt;
  for (size_t i = 0; i < P.k; ++i) {
    vt.p[i] = intt(pointwise_mont(chat, pre.t0hat.p[i]));
    if (chknorm(vt.p[i], vt_bound)) {
      res.stage = RejectStage::VtNorm;
      return res;
    }
  }

  // h = MakeHint(-vt, w - c*s2 + vt), operands canonicalised per coefficient
  size_t weight = 0;
  for (size_t i = 0; i < P.k; ++i) {
    for (size_t m = 0; m < kN; ++m) {
      const int32_t zc = caddq(-vt.p[i].c[m]);
      const int32_t rc = canon_mod_q(w_cs2.p[i].c[m] + vt.p[i].c[m]);
      const int h = make_hint(zc, rc, P.gamma2);
      res.hints.p[i].c[m] = h;
      weight += static_cast<size_t>(h);
    }
  }
  if (weight > P.omega) {
    res.stage = RejectStage::HintWeight;
    return res;
  }

  res.accepted = true;
  return res;
}

}  // namespace detail

// One attempt of the rejection loop at nonce kappa (a multiple of l; the
// masks consume nonces kappa..kappa+l-1). Pure function of its arguments.
template <Params P>
AttemptResult<P> sign_attempt(const SignPrecomp<P>& pre, std::span<const uint8_t, kCrhBytes> mu,
                              std::span<const uint8_t, kCrhBytes> rho_prime, uint32_t kappa) {
  return detail::sign_attempt_bounded<P>(pre, mu, rho_prime, kappa, P.gamma1 - P.beta,
                                         P.gamma2 - P.beta, P.gamma2);
}

template <Params P>
struct SignOutput {
  SigBytes<P> sig;
  uint32_t attempts;  // accepted on attempt #attempts, kappa = (attempts-1)*l
};

inline constexpr uint32_t kMaxSignAttempts = 1u << 14;

template <Params P>
CrhArray message_digest(const SignPrecomp<P>& pre, std::span<const uint8_t> msg) {
  return keccak::hash_h<kCrhBytes>({std::span<const uint8_t>(pre.tr), msg});
}

template <Params P>
CrhArray deterministic_rho_prime(const SignPrecomp<P>& pre, const CrhArray& mu) {
  return keccak::hash_h<kCrhBytes>({std::span<const uint8_t>(pre.key), mu});
}

// Deterministic signing: loops kappa = 0, l, 2l, ... until a valid attempt.
// An explicit rho' may be supplied to randomise; the default derives it from
// (K, mu), making the signature a pure function of (sk, M).
template <Params P>
SignOutput<P> sign_with_precomp(const SignPrecomp<P>& pre, std::span<const uint8_t> msg,
                                const CrhArray* rho_prime_override = nullptr) {
  const CrhArray mu = message_digest<P>(pre, msg);
  const CrhArray rho_prime =
      rho_prime_override ? *rho_prime_override : deterministic_rho_prime<P>(pre, mu);
  for (uint32_t attempt = 0; attempt < kMaxSignAttempts; ++attempt) {
    auto r = sign_attempt<P>(pre, mu, rho_prime, attempt * static_cast<uint32_t>(P.l));
    if (r.accepted) {
      return {pack_sig<P>(r.c_tilde, r.z, r.hints), attempt + 1};
    }
  }
  throw std::runtime_error("sign: rejection loop did not terminate");
}

template <Params P>
SigBytes<P> sign(std::span<const uint8_t> sk_bytes, std::span<const uint8_t> msg) {
  auto pre = make_precomp<P>(sk_bytes);
  if (!pre) throw std::invalid_argument("sign: malformed secret key");
  return sign_with_precomp<P>(*pre, msg).sig;
}

// Strict verification: any decode failure rejects. Regenerates the matrix
// column by column, so no k*l buffer is ever allocated.
template <Params P>
bool verify(std::span<const uint8_t> pk_bytes, std::span<const uint8_t> msg,
            std::span<const uint8_t> sig_bytes) {
  const auto pk = unpack_pk<P>(pk_bytes);
  if (!pk) return false;
  const auto sig = unpack_sig<P>(sig_bytes);
  if (!sig) return false;
  if (chknorm_vec(sig.value().z, P.gamma1 - P.beta)) return false;
  if (hint_weight(sig.value().hints) > P.omega) return false;

  const SeedArray tr = keccak::hash_h<kSeedBytes>({pk_bytes});
  const CrhArray mu = keccak::hash_h<kCrhBytes>({std::span<const uint8_t>(tr), msg});

  const NttPoly chat = ntt(sample_in_ball(sig->c_tilde, P.tau));
  auto zhat = ntt_vec(sig->z);
  to_mont_vec(zhat);

  PolyVec<P.k, Domain::Ntt> acc{};
  matvec_accumulate<P.k, P.l>(detail::expand_a_col_supplier<P>(pk->rho), MatOrder::ColMajor,
                              zhat, acc);

  PolyVec<P.k, Domain::Normal> w1p;
  for (size_t i = 0; i < P.k; ++i) {
    NttPoly t1hat = ntt(shiftl_d(pk->t1.p[i]));
    to_mont_inplace(t1hat.c);
    const NttPoly ct1 = pointwise_mont(chat, t1hat);
    NttPoly diff = sub(acc.p[i], ct1);
    reduce_poly(diff);
    NormalPoly v = intt(diff);
    caddq_poly(v);
    for (size_t m = 0; m < kN; ++m)
      w1p.p[i].c[m] = use_hint(sig->hints.p[i].c[m], v.c[m], P.gamma2);
  }

  std::array<uint8_t, P.k * P.poly_w1_bytes()> w1_packed;
  for (size_t i = 0; i < P.k; ++i)
    pack_w1(std::span<uint8_t>(w1_packed).subspan(i * P.poly_w1_bytes(), P.poly_w1_bytes()),
            w1p.p[i], P.w1_bits);
  const SeedArray expected = keccak::hash_h<kSeedBytes>(
      {std::span<const uint8_t>(mu), std::span<const uint8_t>(w1_packed)});
  return expected == sig->c_tilde;
}

}  // namespace dilithium
