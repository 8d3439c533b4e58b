#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace dilithium::keccak {

inline constexpr size_t kStateWords = 25;
inline constexpr size_t kRounds = 24;
inline constexpr size_t kShake128Rate = 168;
inline constexpr size_t kShake256Rate = 136;

using State = std::array<uint64_t, kStateWords>;

namespace detail {

constexpr uint64_t rotl(uint64_t v, unsigned r) {
  return (v << r) | (v >> (64 - r));
}

// Round constants from the FIPS 202 rc() LFSR; deriving them at compile time
// beats transcribing 24 sixteen-digit literals.
constexpr std::array<uint64_t, kRounds> make_round_constants() {
  std::array<uint64_t, kRounds> rc{};
  auto rc_bit = [](unsigned t) {
    uint32_t r = 1;
    for (unsigned i = 0; i < t % 255; ++i) r = ((r << 1) ^ ((r >> 7) * 0x71)) & 0xFF;
    return r & 1u;
  };
  for (unsigned rnd = 0; rnd < kRounds; ++rnd) {
    uint64_t v = 0;
    for (unsigned j = 0; j < 7; ++j) {
      v |= static_cast<uint64_t>(rc_bit(j + 7 * rnd)) << ((1u << j) - 1);
    }
    rc[rnd] = v;
  }
  return rc;
}

// rho rotation amounts and pi destination indices along the (1,0) walk.
struct RhoPi {
  std::array<unsigned, kRounds> rot{};
  std::array<unsigned, kRounds> dst{};
};

constexpr RhoPi make_rho_pi() {
  RhoPi t{};
  unsigned x = 1, y = 0;
  for (unsigned i = 0; i < kRounds; ++i) {
    t.rot[i] = ((i + 1) * (i + 2) / 2) % 64;
    const unsigned nx = y, ny = (2 * x + 3 * y) % 5;
    x = nx;
    y = ny;
    t.dst[i] = x + 5 * y;
  }
  return t;
}

inline constexpr auto kRc = make_round_constants();
inline constexpr auto kRhoPi = make_rho_pi();

}  // namespace detail

// Keccak-f[1600]: 24 rounds of theta/rho/pi/chi/iota over 25 lanes.
// Lane (x, y) lives at index x + 5y; lane bytes are little-endian.
inline void permute(State& s) {
  for (size_t round = 0; round < kRounds; ++round) {
    uint64_t c[5];
    for (size_t x = 0; x < 5; ++x)
      c[x] = s[x] ^ s[x + 5] ^ s[x + 10] ^ s[x + 15] ^ s[x + 20];
    for (size_t x = 0; x < 5; ++x) {
      const uint64_t d = c[(x + 4) % 5] ^ detail::rotl(c[(x + 1) % 5], 1);
      for (size_t y = 0; y < 25; y += 5) s[x + y] ^= d;
    }
    uint64_t t = s[1];
    for (size_t i = 0; i < kRounds; ++i) {
      const size_t j = detail::kRhoPi.dst[i];
      const uint64_t saved = s[j];
      s[j] = detail::rotl(t, detail::kRhoPi.rot[i]);
      t = saved;
    }
    for (size_t y = 0; y < 25; y += 5) {
      uint64_t row[5];
      for (size_t x = 0; x < 5; ++x) row[x] = s[y + x];
      for (size_t x = 0; x < 5; ++x) s[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
    }
    s[0] ^= detail::kRc[round];
  }
}

// Incremental SHAKE128/256 stream. Absorption accepts arbitrary chunking;
// finalize applies the 0x1F...0x80 domain padding exactly once; squeezing is
// resumable at any byte boundary. The first squeeze finalizes implicitly.
class Xof {
 public:
  static Xof shake128() { return Xof(kShake128Rate); }
  static Xof shake256() { return Xof(kShake256Rate); }

  size_t rate() const { return rate_; }

  void absorb(std::span<const uint8_t> in) {
    if (squeezing_) throw std::logic_error("Xof: absorb after finalize");
    size_t off = 0;
    while (off < in.size()) {
      if (pos_ == rate_) {
        permute(state_);
        pos_ = 0;
      }
      const size_t take = std::min(rate_ - pos_, in.size() - off);
      xor_into_state(in.data() + off, take);
      off += take;
    }
  }

  void finalize() {
    if (squeezing_) throw std::logic_error("Xof: finalize applied twice");
    if (pos_ == rate_) {
      permute(state_);
      pos_ = 0;
    }
    state_[pos_ / 8] ^= uint64_t{0x1F} << (8 * (pos_ % 8));
    state_[(rate_ - 1) / 8] ^= uint64_t{0x80} << (8 * ((rate_ - 1) % 8));
    pos_ = rate_;  // force a permutation before the first squeezed byte
    squeezing_ = true;
  }

  void squeeze(std::span<uint8_t> out) {
    if (!squeezing_) finalize();
    size_t off = 0;
    while (off < out.size()) {
      if (pos_ == rate_) {
        permute(state_);
        pos_ = 0;
      }
      const size_t take = std::min(rate_ - pos_, out.size() - off);
      copy_from_state(out.data() + off, take);
      off += take;
    }
  }

 private:
  explicit Xof(size_t rate) : rate_(rate) {}

  void xor_into_state(const uint8_t* src, size_t n) {
    size_t i = 0;
    for (; pos_ % 8 != 0 && i < n; ++i, ++pos_)
      state_[pos_ / 8] ^= uint64_t{src[i]} << (8 * (pos_ % 8));
    for (; i + 8 <= n; i += 8, pos_ += 8) {
      uint64_t w;
      std::memcpy(&w, src + i, 8);
      state_[pos_ / 8] ^= w;  // little-endian host assumed, as everywhere below
    }
    for (; i < n; ++i, ++pos_) state_[pos_ / 8] ^= uint64_t{src[i]} << (8 * (pos_ % 8));
  }

  void copy_from_state(uint8_t* dst, size_t n) {
    size_t i = 0;
    for (; pos_ % 8 != 0 && i < n; ++i, ++pos_)
      dst[i] = static_cast<uint8_t>(state_[pos_ / 8] >> (8 * (pos_ % 8)));
    for (; i + 8 <= n; i += 8, pos_ += 8) std::memcpy(dst + i, &state_[pos_ / 8], 8);
    for (; i < n; ++i, ++pos_) dst[i] = static_cast<uint8_t>(state_[pos_ / 8] >> (8 * (pos_ % 8)));
  }

  State state_{};
  size_t rate_;
  size_t pos_ = 0;
  bool squeezing_ = false;
};

inline void shake128(std::span<uint8_t> out, std::span<const uint8_t> in) {
  Xof x = Xof::shake128();
  x.absorb(in);
  x.squeeze(out);
}

inline void shake256(std::span<uint8_t> out, std::span<const uint8_t> in) {
  Xof x = Xof::shake256();
  x.absorb(in);
  x.squeeze(out);
}

// The scheme's hash H: SHAKE256 over the concatenation of the parts.
inline void hash_h(std::initializer_list<std::span<const uint8_t>> parts, std::span<uint8_t> out) {
  Xof x = Xof::shake256();
  for (auto part : parts) x.absorb(part);
  x.squeeze(out);
}

template <size_t Out>
std::array<uint8_t, Out> hash_h(std::initializer_list<std::span<const uint8_t>> parts) {
  std::array<uint8_t, Out> out;
  hash_h(parts, out);
  return out;
}

}  // namespace dilithium::keccak
