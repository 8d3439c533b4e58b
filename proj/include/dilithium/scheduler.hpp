#pragma once

#include <cstdint>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace dilithium {

// One execution-slot assignment for a round: task attempt #attempt, i.e.
// mask nonce kappa = attempt * l.
struct Assignment {
  uint32_t slot;
  uint32_t task;
  uint32_t attempt;
  uint32_t kappa;
};

struct RoundTrace {
  uint64_t round;
  size_t unfinished;    // tasks still open at the start of the round
  size_t assigned;      // slots that executed an attempt
  size_t speculative;   // assigned attempts beyond a task's next nonce
  size_t idle_slots;    // psi - assigned
  size_t newly_done;
};

// Nonce-speculating round scheduler for rejection-loop task batches.
//
// Task LUT: per task the resolved attempt prefix, the smallest valid attempt
// seen and the done marker. Execution LUT: the per-slot (task, nonce)
// assignments of the current round. State LUT: the per-slot validity results
// handed to commit_round. Order map: winner slot -> task, driving the copy
// from staging into the task's pool slot.
//
// Each round assigns every unfinished task its next unattempted nonce (a
// rotating cursor keeps slot shortage fair), then fills leftover slots with
// speculative future nonces breadth-first: depth 1 for each task in order,
// then depth 2, and so on. A task finishes only when some attempt is valid
// and every smaller nonce has been attempted and found invalid, so the
// accepted nonce always equals the sequential signer's.
class NonceScheduler {
 public:
  NonceScheduler(size_t phi, size_t psi, uint32_t ell, bool speculate = true)
      : psi_(psi), ell_(ell), speculate_(speculate), tasks_(phi) {
    if (phi == 0 || psi == 0 || ell == 0)
      throw std::invalid_argument("NonceScheduler: phi, psi and ell must be >= 1");
    unfinished_ = phi;
    // nonces are 16-bit on the wire; cap speculation depth there
    max_attempt_ = (std::numeric_limits<uint16_t>::max() - (ell - 1)) / ell;
  }

  bool finished() const { return unfinished_ == 0; }
  size_t unfinished() const { return unfinished_; }

  const std::vector<Assignment>& schedule_round() {
    assignments_.clear();
    round_unfinished_ = unfinished_;
    round_speculative_ = 0;
    for (auto& t : tasks_) t.next_assign = t.first_unresolved;

    // pass 1: one next-nonce attempt per unfinished task, rotating cursor
    const size_t phi = tasks_.size();
    size_t taken = 0;
    for (size_t step = 0; step < phi && taken < psi_; ++step) {
      const size_t task = (cursor_ + step) % phi;
      if (tasks_[task].done) continue;
      push_assignment(task);
      ++taken;
    }
    cursor_ = phi == 0 ? 0 : (cursor_ + taken) % phi;

    // pass 2: breadth-first speculation on the remaining slots
    if (speculate_ && unfinished_ > 0) {
      bool progressed = true;
      while (taken < psi_ && progressed) {
        progressed = false;
        for (size_t task = 0; task < phi && taken < psi_; ++task) {
          auto& t = tasks_[task];
          if (t.done || t.next_assign > max_attempt_) continue;
          if (t.next_assign == t.first_unresolved) continue;  // pass 1 skipped it
          push_assignment(task);
          ++taken;
          ++round_speculative_;
          progressed = true;
        }
      }
    }
    return assignments_;
  }

  // valid[i] corresponds to assignments()[i]. on_candidate(task, slot) fires
  // when a slot holds the new smallest valid attempt of its task;
  // on_done(task) fires once the winner is final (all smaller nonces failed).
  template <class OnCandidate, class OnDone>
  void commit_round(std::span<const uint8_t> valid, OnCandidate&& on_candidate,
                    OnDone&& on_done) {
    if (valid.size() != assignments_.size())
      throw std::invalid_argument("commit_round: result count mismatch");
    order_map_.clear();
    size_t newly_done = 0;
    for (size_t i = 0; i < assignments_.size(); ++i) {
      const Assignment& a = assignments_[i];
      auto& t = tasks_[a.task];
      if (valid[i] && (t.best_valid < 0 || a.attempt < static_cast<int64_t>(t.best_valid))) {
        t.best_valid = a.attempt;
        order_map_.push_back({a.slot, a.task});
        on_candidate(static_cast<size_t>(a.task), static_cast<size_t>(a.slot));
      }
      if (a.attempt >= t.first_unresolved) t.first_unresolved = a.attempt + 1;
    }
    for (size_t task = 0; task < tasks_.size(); ++task) {
      auto& t = tasks_[task];
      if (t.done) continue;
      if (t.best_valid >= 0 && static_cast<uint32_t>(t.best_valid) < t.first_unresolved) {
        t.done = true;
        --unfinished_;
        ++newly_done;
        on_done(task);
      } else if (t.first_unresolved > max_attempt_ && t.best_valid < 0) {
        // nonce space exhausted without a valid attempt; abandon the task
        t.done = true;
        t.failed = true;
        --unfinished_;
        ++newly_done;
      }
    }
    ++rounds_;
    attempts_total_ += assignments_.size();
    speculative_total_ += round_speculative_;
    idle_total_ += psi_ - assignments_.size();
    last_trace_ = {rounds_, round_unfinished_, assignments_.size(), round_speculative_,
                   psi_ - assignments_.size(), newly_done};
  }

  const std::vector<Assignment>& assignments() const { return assignments_; }
  // winner slot -> task pairs of the last commit
  const std::vector<std::pair<uint32_t, uint32_t>>& order_map() const { return order_map_; }
  const RoundTrace& last_trace() const { return last_trace_; }

  bool task_failed(size_t task) const { return tasks_[task].failed; }
  // accepted attempt index (nonce / ell); -1 while unfinished or failed
  int64_t accepted_attempt(size_t task) const {
    return tasks_[task].done && !tasks_[task].failed ? tasks_[task].best_valid : -1;
  }

  uint64_t rounds() const { return rounds_; }
  uint64_t attempts_executed() const { return attempts_total_; }
  uint64_t speculative_executed() const { return speculative_total_; }
  uint64_t idle_slot_rounds() const { return idle_total_; }

 private:
  struct Task {
    uint32_t first_unresolved = 0;  // attempts below this are all resolved
    uint32_t next_assign = 0;       // next attempt to hand out this round
    int64_t best_valid = -1;        // smallest valid attempt seen
    bool done = false;
    bool failed = false;
  };

  void push_assignment(size_t task) {
    auto& t = tasks_[task];
    assignments_.push_back({static_cast<uint32_t>(assignments_.size()),
                            static_cast<uint32_t>(task), t.next_assign, t.next_assign * ell_});
    ++t.next_assign;
  }

  size_t psi_;
  uint32_t ell_;
  bool speculate_;
  uint32_t max_attempt_;
  std::vector<Task> tasks_;
  std::vector<Assignment> assignments_;
  std::vector<std::pair<uint32_t, uint32_t>> order_map_;
  size_t unfinished_ = 0;
  size_t cursor_ = 0;
  size_t round_unfinished_ = 0;
  size_t round_speculative_ = 0;
  uint64_t rounds_ = 0;
  uint64_t attempts_total_ = 0;
  uint64_t speculative_total_ = 0;
  uint64_t idle_total_ = 0;
  RoundTrace last_trace_{};
};

}  // namespace dilithium
