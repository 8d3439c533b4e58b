#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace dilithium {

// Fork-join worker pool. parallel_for(n, fn) runs fn(0..n) across the pool
// with the calling thread participating, so a pool of width 1 executes
// entirely inline and spawns no threads. Helpers persist across calls.
//
// Each call publishes one immutable Job snapshot; helpers pick it up under
// the lock and pull indices from its atomic cursor. A straggler that wakes
// late only ever sees either the current job (and helps) or its own finished
// one (and finds the cursor exhausted), never a half-built successor.
class WorkerPool {
 public:
  explicit WorkerPool(size_t workers) : width_(workers == 0 ? 1 : workers) {
    for (size_t t = 0; t + 1 < width_; ++t) {
      threads_.emplace_back([this] { helper_loop(); });
    }
  }

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  ~WorkerPool() {
    {
      std::lock_guard lk(m_);
      stop_.store(true);
    }
    cv_.notify_all();
    for (auto& t : threads_) t.join();
  }

  size_t width() const { return width_; }

  void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    if (n == 0) return;
    if (threads_.empty()) {
      for (size_t i = 0; i < n; ++i) fn(i);
      return;
    }
    auto job = std::make_shared<Job>();
    job->fn = &fn;
    job->n = n;
    {
      std::lock_guard lk(m_);
      job_ = job;
      generation_.fetch_add(1, std::memory_order_release);
    }
    cv_.notify_all();
    work(*job);
    for (int spin = 0; spin < kSpinIterations; ++spin) {
      if (job->done.load(std::memory_order_acquire) == job->n) break;
    }
    {
      std::unique_lock lk(m_);
      done_cv_.wait(lk, [&] { return job->done.load(std::memory_order_acquire) == job->n; });
      job_ = nullptr;
    }
    if (job->error) std::rethrow_exception(job->error);
  }

 private:
  struct Job {
    const std::function<void(size_t)>* fn = nullptr;
    size_t n = 0;
    std::atomic<size_t> next{0};
    std::atomic<size_t> done{0};
    std::exception_ptr error;
  };

  // Rounds arrive back to back during a batch; a short spin before sleeping
  // skips the wakeup latency that otherwise dominates small rounds.
  static constexpr int kSpinIterations = 1 << 14;

  void helper_loop() {
    uint64_t seen = 0;
    for (;;) {
      for (int spin = 0; spin < kSpinIterations; ++spin) {
        if (generation_.load(std::memory_order_acquire) != seen || stop_.load()) break;
      }
      std::shared_ptr<Job> job;
      {
        std::unique_lock lk(m_);
        cv_.wait(lk, [&] { return stop_.load() || generation_.load() != seen; });
        if (stop_.load()) return;
        seen = generation_.load();
        job = job_;
      }
      if (job) work(*job);
    }
  }

  void work(Job& job) {
    for (;;) {
      const size_t i = job.next.fetch_add(1, std::memory_order_relaxed);
      if (i >= job.n) break;
      try {
        (*job.fn)(i);
      } catch (...) {
        std::lock_guard lk(m_);
        if (!job.error) job.error = std::current_exception();
      }
      if (job.done.fetch_add(1, std::memory_order_acq_rel) + 1 == job.n) {
        std::lock_guard lk(m_);
        done_cv_.notify_all();
      }
    }
  }

  size_t width_;
  std::vector<std::thread> threads_;
  std::mutex m_;
  std::condition_variable cv_, done_cv_;
  std::atomic<uint64_t> generation_{0};
  std::atomic<bool> stop_{false};
  std::shared_ptr<Job> job_;
};

}  // namespace dilithium
