#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>

#include "dilithium/params.hpp"
#include "dilithium/polyvec.hpp"

namespace dilithium {

// All round-3 encodings are little-endian bit streams, LSB first, with a
// per-encoding map between signed coefficients and raw field values.
template <class Map>
constexpr void pack_bits(std::span<uint8_t> out, std::span<const int32_t, kN> coeffs,
                         size_t width, Map&& to_raw) {
  assert(out.size() == kN * width / 8);
  uint64_t acc = 0;
  unsigned nbits = 0;
  size_t o = 0;
  for (int32_t c : coeffs) {
    const uint32_t raw = to_raw(c);
    assert(raw < (uint64_t{1} << width));
    acc |= static_cast<uint64_t>(raw) << nbits;
    nbits += static_cast<unsigned>(width);
    while (nbits >= 8) {
      out[o++] = static_cast<uint8_t>(acc);
      acc >>= 8;
      nbits -= 8;
    }
  }
}

template <class Map>
constexpr void unpack_bits(std::span<const uint8_t> in, std::span<int32_t, kN> coeffs,
                           size_t width, Map&& from_raw) {
  assert(in.size() == kN * width / 8);
  const uint32_t mask = (uint32_t{1} << width) - 1;
  uint64_t acc = 0;
  unsigned nbits = 0;
  size_t ci = 0;
  for (uint8_t b : in) {
    acc |= static_cast<uint64_t>(b) << nbits;
    nbits += 8;
    while (nbits >= width && ci < kN) {
      coeffs[ci++] = from_raw(static_cast<uint32_t>(acc) & mask);
      acc >>= width;
      nbits -= static_cast<unsigned>(width);
    }
  }
}

// --- per-field encodings ---------------------------------------------------

inline void pack_t1(std::span<uint8_t> out, const NormalPoly& a) {
  pack_bits(out, a.c, 10, [](int32_t c) { return static_cast<uint32_t>(c); });
}

inline void unpack_t1(std::span<const uint8_t> in, NormalPoly& a) {
  unpack_bits(in, a.c, 10, [](uint32_t r) { return static_cast<int32_t>(r); });
}

inline void pack_t0(std::span<uint8_t> out, const NormalPoly& a) {
  pack_bits(out, a.c, kD,
            [](int32_t c) { return static_cast<uint32_t>((1 << (kD - 1)) - c); });
}

inline void unpack_t0(std::span<const uint8_t> in, NormalPoly& a) {
  unpack_bits(in, a.c, kD,
              [](uint32_t r) { return (1 << (kD - 1)) - static_cast<int32_t>(r); });
}

inline void pack_eta(std::span<uint8_t> out, const NormalPoly& a, int32_t eta, size_t bits) {
  pack_bits(out, a.c, bits, [eta](int32_t c) { return static_cast<uint32_t>(eta - c); });
}

// Raw values above 2*eta have no preimage: decode rejects them.
inline bool unpack_eta(std::span<const uint8_t> in, NormalPoly& a, int32_t eta, size_t bits) {
  bool ok = true;
  unpack_bits(in, a.c, bits, [&](uint32_t r) {
    ok = ok && r <= 2 * static_cast<uint32_t>(eta);
    return eta - static_cast<int32_t>(r);
  });
  return ok;
}

inline void pack_z(std::span<uint8_t> out, const NormalPoly& a, int32_t gamma1, size_t bits) {
  pack_bits(out, a.c, bits, [gamma1](int32_t c) { return static_cast<uint32_t>(gamma1 - c); });
}

inline void unpack_z(std::span<const uint8_t> in, NormalPoly& a, int32_t gamma1, size_t bits) {
  unpack_bits(in, a.c, bits, [gamma1](uint32_t r) { return gamma1 - static_cast<int32_t>(r); });
}

inline void pack_w1(std::span<uint8_t> out, const NormalPoly& a, size_t bits) {
  pack_bits(out, a.c, bits, [](int32_t c) { return static_cast<uint32_t>(c); });
}

// --- hint encoding ---------------------------------------------------------

// omega position bytes (set-bit indices, poly by poly, ascending) followed by
// k cumulative counts; unused position bytes must be zero.
template <Params P>
void encode_hint(std::span<uint8_t> out, const PolyVec<P.k, Domain::Normal>& h) {
  assert(out.size() == P.hint_bytes());
  for (auto& b : out) b = 0;
  size_t ctr = 0;
  for (size_t i = 0; i < P.k; ++i) {
    for (size_t j = 0; j < kN; ++j) {
      if (h.p[i].c[j] != 0) {
        assert(ctr < P.omega);
        out[ctr++] = static_cast<uint8_t>(j);
      }
    }
    out[P.omega + i] = static_cast<uint8_t>(ctr);
  }
}

// Strict inverse: rejects counts out of range, non-ascending positions and
// nonzero slack so that verification fails closed on malformed encodings.
template <Params P>
std::optional<PolyVec<P.k, Domain::Normal>> decode_hint(std::span<const uint8_t> in) {
  if (in.size() != P.hint_bytes()) return std::nullopt;
  PolyVec<P.k, Domain::Normal> h{};
  size_t ctr = 0;
  for (size_t i = 0; i < P.k; ++i) {
    const uint8_t cnt = in[P.omega + i];
    if (cnt < ctr || cnt > P.omega) return std::nullopt;
    for (size_t j = ctr; j < cnt; ++j) {
      if (j > ctr && in[j] <= in[j - 1]) return std::nullopt;
      h.p[i].c[in[j]] = 1;
    }
    ctr = cnt;
  }
  for (size_t j = ctr; j < P.omega; ++j) {
    if (in[j] != 0) return std::nullopt;
  }
  return h;
}

// --- whole objects ----------------------------------------------------------

template <Params P>
using PkBytes = std::array<uint8_t, P.pk_bytes()>;
template <Params P>
using SkBytes = std::array<uint8_t, P.sk_bytes()>;
template <Params P>
using SigBytes = std::array<uint8_t, P.sig_bytes()>;

using SeedArray = std::array<uint8_t, kSeedBytes>;

template <Params P>
struct PublicKeyView {
  SeedArray rho;
  PolyVec<P.k, Domain::Normal> t1;
};

template <Params P>
struct SecretKeyView {
  SeedArray rho, key, tr;
  PolyVec<P.l, Domain::Normal> s1;
  PolyVec<P.k, Domain::Normal> s2;
  PolyVec<P.k, Domain::Normal> t0;
};

template <Params P>
struct SignatureView {
  SeedArray c_tilde;
  PolyVec<P.l, Domain::Normal> z;
  PolyVec<P.k, Domain::Normal> hints;
};

template <Params P>
PkBytes<P> pack_pk(const SeedArray& rho, const PolyVec<P.k, Domain::Normal>& t1) {
  PkBytes<P> out;
  auto o = std::span<uint8_t>(out);
  std::copy(rho.begin(), rho.end(), o.begin());
  for (size_t i = 0; i < P.k; ++i)
    pack_t1(o.subspan(kSeedBytes + i * P.poly_t1_bytes(), P.poly_t1_bytes()), t1.p[i]);
  return out;
}

template <Params P>
std::optional<PublicKeyView<P>> unpack_pk(std::span<const uint8_t> in) {
  if (in.size() != P.pk_bytes()) return std::nullopt;
  PublicKeyView<P> pk;
  std::copy_n(in.begin(), kSeedBytes, pk.rho.begin());
  for (size_t i = 0; i < P.k; ++i)
    unpack_t1(in.subspan(kSeedBytes + i * P.poly_t1_bytes(), P.poly_t1_bytes()), pk.t1.p[i]);
  return pk;
}

template <Params P>
SkBytes<P> pack_sk(const SeedArray& rho, const SeedArray& key, const SeedArray& tr,
                   const PolyVec<P.l, Domain::Normal>& s1,
                   const PolyVec<P.k, Domain::Normal>& s2,
                   const PolyVec<P.k, Domain::Normal>& t0) {
  SkBytes<P> out;
  auto o = std::span<uint8_t>(out);
  size_t off = 0;
  for (const SeedArray* s : {&rho, &key, &tr}) {
    std::copy(s->begin(), s->end(), o.begin() + off);
    off += kSeedBytes;
  }
  for (size_t i = 0; i < P.l; ++i, off += P.poly_eta_bytes())
    pack_eta(o.subspan(off, P.poly_eta_bytes()), s1.p[i], P.eta, P.eta_bits);
  for (size_t i = 0; i < P.k; ++i, off += P.poly_eta_bytes())
    pack_eta(o.subspan(off, P.poly_eta_bytes()), s2.p[i], P.eta, P.eta_bits);
  for (size_t i = 0; i < P.k; ++i, off += P.poly_t0_bytes())
    pack_t0(o.subspan(off, P.poly_t0_bytes()), t0.p[i]);
  return out;
}

template <Params P>
std::optional<SecretKeyView<P>> unpack_sk(std::span<const uint8_t> in) {
  if (in.size() != P.sk_bytes()) return std::nullopt;
  SecretKeyView<P> sk;
  size_t off = 0;
  for (SeedArray* s : {&sk.rho, &sk.key, &sk.tr}) {
    std::copy_n(in.begin() + off, kSeedBytes, s->begin());
    off += kSeedBytes;
  }
  bool ok = true;
  for (size_t i = 0; i < P.l; ++i, off += P.poly_eta_bytes())
    ok = unpack_eta(in.subspan(off, P.poly_eta_bytes()), sk.s1.p[i], P.eta, P.eta_bits) && ok;
  for (size_t i = 0; i < P.k; ++i, off += P.poly_eta_bytes())
    ok = unpack_eta(in.subspan(off, P.poly_eta_bytes()), sk.s2.p[i], P.eta, P.eta_bits) && ok;
  for (size_t i = 0; i < P.k; ++i, off += P.poly_t0_bytes())
    unpack_t0(in.subspan(off, P.poly_t0_bytes()), sk.t0.p[i]);
  if (!ok) return std::nullopt;
  return sk;
}

// Pool-facing packer: writes into a caller-provided slot at fixed offsets.
template <Params P>
void pack_sig_into(std::span<uint8_t> out, const SeedArray& c_tilde,
                   const PolyVec<P.l, Domain::Normal>& z,
                   const PolyVec<P.k, Domain::Normal>& hints) {
  assert(out.size() == P.sig_bytes());
  std::copy(c_tilde.begin(), c_tilde.end(), out.begin());
  size_t off = kSeedBytes;
  for (size_t i = 0; i < P.l; ++i, off += P.poly_z_bytes())
    pack_z(out.subspan(off, P.poly_z_bytes()), z.p[i], P.gamma1, P.z_bits);
  encode_hint<P>(out.subspan(off, P.hint_bytes()), hints);
}

template <Params P>
SigBytes<P> pack_sig(const SeedArray& c_tilde, const PolyVec<P.l, Domain::Normal>& z,
                     const PolyVec<P.k, Domain::Normal>& hints) {
  SigBytes<P> out;
  pack_sig_into<P>(out, c_tilde, z, hints);
  return out;
}

template <Params P>
std::optional<SignatureView<P>> unpack_sig(std::span<const uint8_t> in) {
  if (in.size() != P.sig_bytes()) return std::nullopt;
  SignatureView<P> sig;
  std::copy_n(in.begin(), kSeedBytes, sig.c_tilde.begin());
  size_t off = kSeedBytes;
  for (size_t i = 0; i < P.l; ++i, off += P.poly_z_bytes())
    unpack_z(in.subspan(off, P.poly_z_bytes()), sig.z.p[i], P.gamma1, P.z_bits);
  auto hints = decode_hint<P>(in.subspan(off, P.hint_bytes()));
  if (!hints) return std::nullopt;
  sig.hints = *hints;
  return sig;
}

}  // namespace dilithium
