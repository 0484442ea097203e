#include "mac/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace mac::kernels {

namespace {

struct Table {
  void (*xor_words)(std::uint64_t*, const std::uint64_t*, std::size_t);
  long (*find_superset)(const std::uint64_t*, std::size_t, std::uint64_t);
  std::size_t (*count_supersets)(const std::uint64_t*, std::size_t, std::uint64_t);
  double (*max_affine_residual)(const double*, std::size_t, std::size_t, const double*, const double*);
  Isa isa;
};

const Table kScalar{scalar::xor_words, scalar::find_superset, scalar::count_supersets,
                    scalar::max_affine_residual, Isa::Scalar};
#ifdef MAC_HAVE_AVX2
const Table kAvx2{avx2::xor_words, avx2::find_superset, avx2::count_supersets,
                  avx2::max_affine_residual, Isa::Avx2};
#endif

bool cpu_has_avx2() {
#ifdef MAC_HAVE_AVX2
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const Table* initial_table() {
  const char* env = std::getenv("MAC_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return &kScalar;
#ifdef MAC_HAVE_AVX2
  if (cpu_has_avx2()) return &kAvx2;
#endif
  return &kScalar;
}

std::atomic<const Table*>& table() {
  static std::atomic<const Table*> t{initial_table()};
  return t;
}

}  // namespace

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  table().load(std::memory_order_relaxed)->xor_words(dst, src, n);
}

long find_superset(const std::uint64_t* masks, std::size_t n, std::uint64_t q) {
  return table().load(std::memory_order_relaxed)->find_superset(masks, n, q);
}

std::size_t count_supersets(const std::uint64_t* masks, std::size_t n, std::uint64_t q) {
  return table().load(std::memory_order_relaxed)->count_supersets(masks, n, q);
}

double max_affine_residual(const double* rows, std::size_t nrows, std::size_t ncols,
                           const double* y, const double* d) {
  return table().load(std::memory_order_relaxed)->max_affine_residual(rows, nrows, ncols, y, d);
}

Isa active_isa() { return table().load()->isa; }

bool isa_available(Isa isa) { return isa == Isa::Scalar || (isa == Isa::Avx2 && cpu_has_avx2()); }

Isa set_isa(Isa isa) {
#ifdef MAC_HAVE_AVX2
  if (isa == Isa::Avx2 && cpu_has_avx2()) {
    table().store(&kAvx2);
    return Isa::Avx2;
  }
#endif
  table().store(&kScalar);
  return Isa::Scalar;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

}  // namespace mac::kernels
