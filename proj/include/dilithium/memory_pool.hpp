#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <new>
#include <span>
#include <stdexcept>

#include "dilithium/params.hpp"

namespace dilithium {

// Fixed-layout task pool: one contiguous allocation carved into per-field
// arenas, every arena base aligned to 256 bytes, every per-task slot at a
// fixed stride. Nothing is allocated after construction.
//
// The seed arenas are laid out so that every hash input of the signing flow
// is a single contiguous span:
//   tr_msg  = tr || message          -> mu  = H(tr || M)
//   key_mu  = K  || mu               -> rho' = H(K || mu)
// Staging slots give each execution slot a private signature buffer; the
// candidate arena holds each task's current smallest-nonce winner until the
// ordered copy into the signature arena.
class MemoryPool {
 public:
  static constexpr size_t kArenaAlign = 256;

  enum Arena : size_t { TrMsg = 0, KeyMu, RhoPrime, Signature, Candidate, Staging, kArenaCount };

  struct Layout {
    size_t phi = 1;           // task capacity
    size_t msg_capacity = 0;  // max message bytes per task
    size_t sig_bytes = 0;
    size_t staging_slots = 1;  // execution slots (psi)
  };

  explicit MemoryPool(const Layout& lay) : lay_(lay) {
    if (lay.phi == 0) throw std::invalid_argument("MemoryPool: phi must be >= 1");
    stride_[TrMsg] = kSeedBytes + lay.msg_capacity;
    stride_[KeyMu] = kSeedBytes + kCrhBytes;
    stride_[RhoPrime] = kCrhBytes;
    stride_[Signature] = lay.sig_bytes;
    stride_[Candidate] = lay.sig_bytes;
    stride_[Staging] = lay.sig_bytes;
    const size_t counts[kArenaCount] = {lay.phi, lay.phi, lay.phi,
                                        lay.phi, lay.phi, lay.staging_slots};
    size_t total = 0;
    for (size_t a = 0; a < kArenaCount; ++a) {
      offset_[a] = total;
      total += align_up(stride_[a] * counts[a]);
    }
    block_.reset(static_cast<uint8_t*>(
        ::operator new(total == 0 ? kArenaAlign : total, std::align_val_t{kArenaAlign})));
    std::fill_n(block_.get(), total, uint8_t{0});
  }

  const Layout& layout() const { return lay_; }

  std::span<uint8_t> tr_msg(size_t task) { return slot(TrMsg, task); }
  std::span<uint8_t> key_mu(size_t task) { return slot(KeyMu, task); }
  std::span<uint8_t> rho_prime(size_t task) { return slot(RhoPrime, task); }
  std::span<uint8_t> signature(size_t task) { return slot(Signature, task); }
  std::span<uint8_t> candidate(size_t task) { return slot(Candidate, task); }
  std::span<uint8_t> staging(size_t slot_idx) { return slot(Staging, slot_idx); }

  // Convenience sub-spans of the hash-contiguous slots.
  std::span<uint8_t> tr(size_t task) { return tr_msg(task).first(kSeedBytes); }
  std::span<uint8_t> msg(size_t task) { return tr_msg(task).subspan(kSeedBytes); }
  std::span<uint8_t> key(size_t task) { return key_mu(task).first(kSeedBytes); }
  std::span<uint8_t> mu(size_t task) { return key_mu(task).subspan(kSeedBytes); }

  size_t arena_stride(Arena a) const { return stride_[a]; }

  uintptr_t arena_base(Arena a) const {
    return reinterpret_cast<uintptr_t>(block_.get() + offset_[a]);
  }

 private:
  static size_t align_up(size_t n) { return (n + kArenaAlign - 1) & ~(kArenaAlign - 1); }

  std::span<uint8_t> slot(Arena a, size_t idx) {
    return {block_.get() + offset_[a] + idx * stride_[a], stride_[a]};
  }

  struct Deleter {
    void operator()(uint8_t* p) const { ::operator delete(p, std::align_val_t{kArenaAlign}); }
  };

  Layout lay_;
  size_t stride_[kArenaCount]{};
  size_t offset_[kArenaCount]{};
  std::unique_ptr<uint8_t[], Deleter> block_;
};

// Pool sized for one signing batch of the given parameter set.
template <Params P>
MemoryPool make_sign_pool(size_t phi, size_t msg_capacity, size_t psi) {
  return MemoryPool(MemoryPool::Layout{phi, msg_capacity, P.sig_bytes(), psi});
}

}  // namespace dilithium
