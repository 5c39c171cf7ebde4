#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ctensor {

/// How a tensor kernel walks its index space. `serial` is the reference
/// implementation; `parallel` distributes independent components over OpenMP
/// threads and must produce identical results.
enum class ExecPolicy { serial, parallel };

/// Calls fn(k) for k in [0, count). Each call must touch only its own output
/// slot. The first exception thrown by any iteration is rethrown.
template <class Fn>
void for_each_index(ExecPolicy policy, std::size_t count, Fn&& fn) {
  if (policy == ExecPolicy::serial || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < n; ++k) {
    try {
      fn(static_cast<std::size_t>(k));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ctensor
