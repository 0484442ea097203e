#pragma once

#include <cstddef>
#include <cstdint>

namespace mac::kernels {

enum class Isa { Scalar, Avx2 };

// dst ^= src over n words.
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

// Index of the first mask containing q, or -1.
long find_superset(const std::uint64_t* masks, std::size_t n, std::uint64_t q);

// Number of masks containing q.
std::size_t count_supersets(const std::uint64_t* masks, std::size_t n, std::uint64_t q);

// max_t |rows[t]·y - d[t]| for a row-major rows×cols matrix.
double max_affine_residual(const double* rows, std::size_t nrows, std::size_t ncols,
                           const double* y, const double* d);

Isa active_isa();
bool isa_available(Isa isa);
// Forces a kernel family; falls back to scalar when unavailable. Returns the isa in effect.
Isa set_isa(Isa isa);
const char* isa_name(Isa isa);

namespace scalar {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
long find_superset(const std::uint64_t* masks, std::size_t n, std::uint64_t q);
std::size_t count_supersets(const std::uint64_t* masks, std::size_t n, std::uint64_t q);
double max_affine_residual(const double* rows, std::size_t nrows, std::size_t ncols,
                           const double* y, const double* d);
}  // namespace scalar

#ifdef MAC_HAVE_AVX2
namespace avx2 {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
long find_superset(const std::uint64_t* masks, std::size_t n, std::uint64_t q);
std::size_t count_supersets(const std::uint64_t* masks, std::size_t n, std::uint64_t q);
double max_affine_residual(const double* rows, std::size_t nrows, std::size_t ncols,
                           const double* y, const double* d);
}  // namespace avx2
#endif

}  // namespace mac::kernels
