#include "mac/kernels.hpp"

#include <cmath>

namespace mac::kernels::scalar {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

long find_superset(const std::uint64_t* masks, std::size_t n, std::uint64_t q) {
  for (std::size_t i = 0; i < n; ++i)
    if ((q & ~masks[i]) == 0) return static_cast<long>(i);
  return -1;
}

std::size_t count_supersets(const std::uint64_t* masks, std::size_t n, std::uint64_t q) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += (q & ~masks[i]) == 0;
  return c;
}

double max_affine_residual(const double* rows, std::size_t nrows, std::size_t ncols,
                           const double* y, const double* d) {
  double worst = 0.0;
  for (std::size_t t = 0; t < nrows; ++t) {
    double s = 0.0;
    const double* r = rows + t * ncols;
    for (std::size_t j = 0; j < ncols; ++j) s += r[j] * y[j];
    worst = std::fmax(worst, std::fabs(s - d[t]));
  }
  return worst;
}

}  // namespace mac::kernels::scalar
