#include "mac/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace mac::kernels::avx2 {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

// q ⊆ mask  <=>  (q & ~mask) == 0  <=>  andnot(mask, q) == 0
static inline int superset_bits(const std::uint64_t* masks, __m256i vq) {
  __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks));
  __m256i miss = _mm256_andnot_si256(m, vq);
  __m256i hit = _mm256_cmpeq_epi64(miss, _mm256_setzero_si256());
  return _mm256_movemask_pd(_mm256_castsi256_pd(hit));
}

long find_superset(const std::uint64_t* masks, std::size_t n, std::uint64_t q) {
  __m256i vq = _mm256_set1_epi64x(static_cast<long long>(q));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    int bits = superset_bits(masks + i, vq);
    if (bits) return static_cast<long>(i) + __builtin_ctz(bits);
  }
  for (; i < n; ++i)
    if ((q & ~masks[i]) == 0) return static_cast<long>(i);
  return -1;
}

std::size_t count_supersets(const std::uint64_t* masks, std::size_t n, std::uint64_t q) {
  __m256i vq = _mm256_set1_epi64x(static_cast<long long>(q));
  std::size_t c = 0, i = 0;
  for (; i + 4 <= n; i += 4) c += __builtin_popcount(superset_bits(masks + i, vq));
  for (; i < n; ++i) c += (q & ~masks[i]) == 0;
  return c;
}

double max_affine_residual(const double* rows, std::size_t nrows, std::size_t ncols,
                           const double* y, const double* d) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  double worst = 0.0;
  for (std::size_t t = 0; t < nrows; ++t) {
    const double* r = rows + t * ncols;
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= ncols; j += 4)
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(r + j), _mm256_loadu_pd(y + j)));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (; j < ncols; ++j) s += r[j] * y[j];
    __m256d diff = _mm256_set1_pd(s - d[t]);
    worst = std::fmax(worst, _mm256_cvtsd_f64(_mm256_andnot_pd(sign, diff)));
  }
  return worst;
}

}  // namespace mac::kernels::avx2
