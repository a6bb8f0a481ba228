#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "bicx/miller_ross.hpp"

namespace bicx {

/// Runs body(i) for i in [0, n) on the OpenMP team. An exception thrown by
/// any index is captured; after the loop the one from the lowest index is
/// rethrown, so failures are reported the same way as in a serial loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// E_{V,C}(Z) for many Z. The serial form is the reference for the parallel
/// one; both return identical values.
std::vector<SeriesValue> eval_serial(const MRParams& params, std::span<const Bicomplex> z,
                                     const TruncationPolicy& policy = {});
std::vector<SeriesValue> eval_parallel(const MRParams& params, std::span<const Bicomplex> z,
                                       const TruncationPolicy& policy = {});

}  // namespace bicx
