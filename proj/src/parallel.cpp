/*
 * Copyright (c) 2026 The spikeplace authors
 *
 * Licensed under the Apache License, Version 2.0;
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an 'AS IS' BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "spikeplace/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace svpr {

namespace {

int resolve_threads() {
  if (const char* env = std::getenv("SPIKEPLACE_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Lazily started pool of max_threads()-1 workers; the calling thread also
// participates, so small jobs never pay a wakeup.
class Pool {
 public:
  static Pool& instance() {
    static Pool pool(resolve_threads());
    return pool;
  }

  int threads() const { return n_threads_; }

  void run(int64_t n, const std::function<void(int64_t, int64_t)>& fn) {
    if (n <= 0) return;
    int workers = static_cast<int>(
        std::min<int64_t>(n_threads_, n));
    if (workers <= 1) {
      fn(0, n);
      return;
    }
    {
      std::unique_lock<std::mutex> lock(mu_);
      job_ = &fn;
      job_n_ = n;
      job_workers_ = workers;
      next_chunk_.store(0, std::memory_order_relaxed);
      pending_ = workers - 1;
      ++generation_;
      cv_.notify_all();
    }
    work(n, workers, fn);
    std::unique_lock<std::mutex> lock(mu_);
    done_cv_.wait(lock, [&] { return pending_ == 0; });
    job_ = nullptr;
  }

 private:
  explicit Pool(int n_threads) : n_threads_(n_threads) {
    for (int i = 0; i + 1 < n_threads_; ++i) {
      workers_.emplace_back([this] { worker_loop(); });
    }
  }

  ~Pool() {
    {
      std::unique_lock<std::mutex> lock(mu_);
      stop_ = true;
      cv_.notify_all();
    }
    for (auto& t : workers_) t.join();
  }

  void worker_loop() {
    uint64_t seen = 0;
    for (;;) {
      const std::function<void(int64_t, int64_t)>* job = nullptr;
      int64_t n = 0;
      int workers = 0;
      {
        std::unique_lock<std::mutex> lock(mu_);
        cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
        if (stop_) return;
        seen = generation_;
        job = job_;
        n = job_n_;
        workers = job_workers_;
      }
      if (job) work(n, workers, *job);
      {
        std::unique_lock<std::mutex> lock(mu_);
        if (--pending_ == 0) done_cv_.notify_all();
      }
    }
  }

  void work(int64_t n, int workers,
            const std::function<void(int64_t, int64_t)>& fn) {
    // 4 chunks per worker smooths imbalance without hurting determinism:
    // ranges are disjoint regardless of which worker claims them.
    const int64_t chunks = static_cast<int64_t>(workers) * 4;
    const int64_t chunk = (n + chunks - 1) / chunks;
    for (;;) {
      int64_t c = next_chunk_.fetch_add(1, std::memory_order_relaxed);
      int64_t begin = c * chunk;
      if (begin >= n) return;
      fn(begin, std::min<int64_t>(begin + chunk, n));
    }
  }

  const int n_threads_;
  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable cv_;
  std::condition_variable done_cv_;
  const std::function<void(int64_t, int64_t)>* job_ = nullptr;
  int64_t job_n_ = 0;
  int job_workers_ = 0;
  std::atomic<int64_t> next_chunk_{0};
  int pending_ = 0;
  uint64_t generation_ = 0;
  bool stop_ = false;
};

}  // namespace

int max_threads() { return Pool::instance().threads(); }

void parallel_for(int64_t n, const std::function<void(int64_t, int64_t)>& fn) {
  Pool::instance().run(n, fn);
}

}  // namespace svpr
