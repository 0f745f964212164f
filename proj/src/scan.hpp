#pragma once

// Deterministic parallel scan over an ordered list of work items.

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace evolalg::detail {

template <class R>
struct ScanResult {
  std::vector<std::optional<R>> results;
  /// Items [0, limit) are all evaluated. With stop_at_hit, limit - 1 is the
  /// first hit (or limit == count when there is none).
  std::size_t limit = 0;
};

/// Evaluates fn(i) for i = 0..count-1 on `threads` workers. Items are
/// handed out in increasing order; when stop_at_hit is set, items past the
/// lowest hit found so far are skipped, so the lowest hit always wins no
/// matter how the work was interleaved.
template <class R, class Fn, class Hit>
ScanResult<R> ordered_scan(std::size_t count, unsigned threads, bool stop_at_hit, Fn&& fn, Hit&& hit) {
  ScanResult<R> out;
  out.results.resize(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{count};
  std::exception_ptr error;
  std::size_t error_index = count;
  std::mutex error_mutex;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      if (stop_at_hit && i > first_hit.load()) return;
      try {
        R r = fn(i);
        const bool is_hit = hit(r);
        out.results[i] = std::move(r);
        if (stop_at_hit && is_hit) {
          std::size_t seen = first_hit.load();
          while (i < seen && !first_hit.compare_exchange_weak(seen, i)) {
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
        std::size_t seen = first_hit.load();
        while (i < seen && !first_hit.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };

  if (threads <= 1 || count < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  // An error at or before the first hit is part of the deterministic prefix.
  if (error && error_index <= first_hit.load()) std::rethrow_exception(error);
  out.limit = stop_at_hit && first_hit.load() < count ? first_hit.load() + 1 : count;
  return out;
}

}  // namespace evolalg::detail
