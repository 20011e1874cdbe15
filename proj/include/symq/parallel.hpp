#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace symq {

// Worker count: hardware concurrency, capped by SYMQ_THREADS when set.
std::size_t worker_count();

// Runs body(i) for i in [0, n) on worker_count() threads. Indices are
// handed out dynamically, so body must only write to slot i of any shared
// output. The first exception thrown by a worker is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Maps [0, n) through fn in parallel; results keep index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace symq
