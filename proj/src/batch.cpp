#include "bicx/batch.hpp"

namespace bicx {

std::vector<SeriesValue> eval_serial(const MRParams& params, std::span<const Bicomplex> z,
                                     const TruncationPolicy& policy) {
  std::vector<SeriesValue> out;
  out.reserve(z.size());
  for (const Bicomplex& point : z) out.push_back(eval(params, point, policy));
  return out;
}

std::vector<SeriesValue> eval_parallel(const MRParams& params, std::span<const Bicomplex> z,
                                       const TruncationPolicy& policy) {
  std::vector<SeriesValue> out(z.size());
  parallel_for(z.size(), [&](std::size_t i) { out[i] = eval(params, z[i], policy); });
  return out;
}

}  // namespace bicx
