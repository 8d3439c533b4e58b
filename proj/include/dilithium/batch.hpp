#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dilithium/memory_pool.hpp"
#include "dilithium/scheduler.hpp"
#include "dilithium/scheme.hpp"
#include "dilithium/thread_pool.hpp"

namespace dilithium {

// Default concurrency multiplier: psi = min(phi, kPsiPerWorker * workers).
// Sixteen attempts per worker per round keeps the fork-join barrier well
// amortised against ~0.1-1 ms attempts while holding speculative waste and
// small-batch tail amplification near zero; the sweep harness exists to tune
// this per deployment.
inline constexpr size_t kPsiPerWorker = 16;

struct BatchConfig {
  size_t psi = 0;  // 0 -> min(phi, kPsiPerWorker * workers)
  size_t workers = 1;
  bool speculate = true;
  std::function<void(const RoundTrace&)> trace;
  std::function<void(const Assignment&)> assignment_hook;  // per executed attempt
};

struct BatchStats {
  uint64_t rounds = 0;
  uint64_t attempts = 0;            // executed, including speculative waste
  uint64_t speculative = 0;
  uint64_t idle_slot_rounds = 0;
  uint64_t accepted_attempt_sum = 0;  // sum over tasks of the winning attempt ordinal
  std::vector<size_t> failed_tasks;
};

template <Params P>
struct SignJob {
  const SignPrecomp<P>* key = nullptr;
  std::span<const uint8_t> message;
};

// Signs phi tasks with psi concurrent attempt slots on a fork-join worker
// pool. Output is byte-identical to signing each task sequentially: attempts
// are pure functions of (key, mu, rho', kappa) and the scheduler commits the
// smallest valid nonce only once all smaller nonces are known invalid.
//
// Workers write only their private staging slot; the coordinator moves
// winners staging -> candidate -> signature between rounds.
template <Params P>
std::vector<SigBytes<P>> batch_sign(std::span<const SignJob<P>> jobs, const BatchConfig& cfg = {},
                                    BatchStats* stats = nullptr) {
  const size_t phi = jobs.size();
  std::vector<SigBytes<P>> out(phi);
  if (phi == 0) return out;
  const size_t workers = cfg.workers == 0 ? 1 : cfg.workers;
  const size_t psi = cfg.psi != 0 ? cfg.psi : std::min(phi, kPsiPerWorker * workers);

  size_t msg_cap = 0;
  for (const auto& j : jobs) msg_cap = std::max(msg_cap, j.message.size());
  MemoryPool pool = make_sign_pool<P>(phi, msg_cap, psi);
  std::vector<size_t> msg_len(phi);

  WorkerPool wp(workers);

  // Seed prep: tr||M and K||mu land in contiguous slots so both hashes run
  // over a single span with no concatenation copies.
  wp.parallel_for(phi, [&](size_t t) {
    const auto& job = jobs[t];
    msg_len[t] = job.message.size();
    auto trm = pool.tr_msg(t);
    std::copy(job.key->tr.begin(), job.key->tr.end(), trm.begin());
    std::copy(job.message.begin(), job.message.end(), trm.begin() + kSeedBytes);
    auto km = pool.key_mu(t);
    std::copy(job.key->key.begin(), job.key->key.end(), km.begin());
    keccak::shake256(pool.mu(t), trm.first(kSeedBytes + msg_len[t]));
    keccak::shake256(pool.rho_prime(t), km);
  });

  NonceScheduler sched(phi, psi, static_cast<uint32_t>(P.l), cfg.speculate);
  std::vector<uint8_t> valid;
  while (!sched.finished()) {
    const auto& a = sched.schedule_round();
    if (cfg.assignment_hook)
      for (const auto& as : a) cfg.assignment_hook(as);
    valid.assign(a.size(), 0);
    wp.parallel_for(a.size(), [&](size_t i) {
      const Assignment& as = a[i];
      const auto& job = jobs[as.task];
      auto r = sign_attempt<P>(*job.key,
                               std::span<const uint8_t, kCrhBytes>(pool.mu(as.task)),
                               std::span<const uint8_t, kCrhBytes>(pool.rho_prime(as.task)),
                               as.kappa);
      if (r.accepted) {
        pack_sig_into<P>(pool.staging(as.slot), r.c_tilde, r.z, r.hints);
        valid[i] = 1;
      }
    });
    sched.commit_round(
        valid,
        [&](size_t task, size_t slot) {
          auto src = pool.staging(slot);
          auto dst = pool.candidate(task);
          std::copy(src.begin(), src.end(), dst.begin());
        },
        [&](size_t task) {
          auto src = pool.candidate(task);
          auto dst = pool.signature(task);
          std::copy(src.begin(), src.end(), dst.begin());
        });
    if (cfg.trace) cfg.trace(sched.last_trace());
  }

  for (size_t t = 0; t < phi; ++t) {
    auto sig = pool.signature(t);
    std::copy(sig.begin(), sig.end(), out[t].begin());
  }
  if (stats) {
    stats->rounds = sched.rounds();
    stats->attempts = sched.attempts_executed();
    stats->speculative = sched.speculative_executed();
    stats->idle_slot_rounds = sched.idle_slot_rounds();
    stats->accepted_attempt_sum = 0;
    stats->failed_tasks.clear();
    for (size_t t = 0; t < phi; ++t) {
      if (sched.task_failed(t)) {
        stats->failed_tasks.push_back(t);
      } else {
        stats->accepted_attempt_sum += static_cast<uint64_t>(sched.accepted_attempt(t)) + 1;
      }
    }
  }
  return out;
}

template <Params P>
struct VerifyJob {
  std::span<const uint8_t> pk;
  std::span<const uint8_t> message;
  std::span<const uint8_t> sig;
};

// Order-preserving parallel map over verify; per-task decode failures reject
// that task only.
template <Params P>
std::vector<uint8_t> batch_verify(std::span<const VerifyJob<P>> jobs, size_t workers) {
  std::vector<uint8_t> flags(jobs.size(), 0);
  WorkerPool wp(workers);
  wp.parallel_for(jobs.size(), [&](size_t i) {
    flags[i] = verify<P>(jobs[i].pk, jobs[i].message, jobs[i].sig) ? 1 : 0;
  });
  return flags;
}

// Order-preserving parallel map over keygen.
template <Params P>
std::vector<std::pair<PkBytes<P>, SkBytes<P>>> batch_keygen(
    std::span<const SeedArray> zetas, size_t workers) {
  std::vector<std::pair<PkBytes<P>, SkBytes<P>>> out(zetas.size());
  WorkerPool wp(workers);
  wp.parallel_for(zetas.size(), [&](size_t i) { out[i] = keygen<P>(zetas[i]); });
  return out;
}

}  // namespace dilithium
