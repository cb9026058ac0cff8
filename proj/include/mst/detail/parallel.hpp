#pragma once

#include <cstddef>
#include <exception>

namespace mst::detail {

/// OpenMP loop over [0, n) that rethrows the first exception raised by any
/// iteration once the loop has finished.
template <class Body>
void parallel_for_rethrow(std::ptrdiff_t n, Body&& body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(mst_parallel_for_rethrow)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace mst::detail
