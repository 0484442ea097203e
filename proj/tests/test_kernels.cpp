#include <doctest.h>

#include <random>
#include <vector>

#include "mac/kernels.hpp"

using namespace mac;

TEST_CASE("xor_words agrees between kernel families") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u, 129u}) {
    std::vector<std::uint64_t> a(n), b(n);
    for (auto& x : a) x = rng();
    for (auto& x : b) x = rng();
    auto s = a;
    kernels::scalar::xor_words(s.data(), b.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(s[i] == (a[i] ^ b[i]));
#ifdef MAC_HAVE_AVX2
    if (kernels::isa_available(kernels::Isa::Avx2)) {
      auto v = a;
      kernels::avx2::xor_words(v.data(), b.data(), n);
      CHECK(v == s);
    }
#endif
  }
}

TEST_CASE("superset search agrees between kernel families") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 7u, 8u, 9u, 31u, 200u}) {
    std::vector<std::uint64_t> masks(n);
    for (auto& x : masks) x = rng() | rng();
    for (int trial = 0; trial < 50; ++trial) {
      std::uint64_t q = rng() & rng() & rng();
      if (trial % 5 == 0 && n) q = masks[rng() % n] & rng();
      long f = kernels::scalar::find_superset(masks.data(), n, q);
      std::size_t c = kernels::scalar::count_supersets(masks.data(), n, q);
      long want = -1;
      std::size_t cnt = 0;
      for (std::size_t i = 0; i < n; ++i)
        if ((q & ~masks[i]) == 0) {
          if (want < 0) want = static_cast<long>(i);
          ++cnt;
        }
      CHECK(f == want);
      CHECK(c == cnt);
#ifdef MAC_HAVE_AVX2
      if (kernels::isa_available(kernels::Isa::Avx2)) {
        CHECK(kernels::avx2::find_superset(masks.data(), n, q) == want);
        CHECK(kernels::avx2::count_supersets(masks.data(), n, q) == cnt);
      }
#endif
    }
  }
}

TEST_CASE("affine residual agrees between kernel families") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (std::size_t rows : {1u, 3u, 9u})
    for (std::size_t cols : {1u, 4u, 5u, 13u}) {
      std::vector<double> a(rows * cols), y(cols), d(rows);
      for (auto& x : a) x = u(rng);
      for (auto& x : y) x = u(rng);
      for (auto& x : d) x = u(rng);
      double s = kernels::scalar::max_affine_residual(a.data(), rows, cols, y.data(), d.data());
      CHECK(s >= 0);
#ifdef MAC_HAVE_AVX2
      if (kernels::isa_available(kernels::Isa::Avx2))
        CHECK(kernels::avx2::max_affine_residual(a.data(), rows, cols, y.data(), d.data()) ==
              doctest::Approx(s).epsilon(1e-12));
#endif
    }
}

TEST_CASE("dispatch can be forced to scalar and restored") {
  kernels::Isa before = kernels::active_isa();
  CHECK(kernels::set_isa(kernels::Isa::Scalar) == kernels::Isa::Scalar);
  CHECK(kernels::active_isa() == kernels::Isa::Scalar);
  std::uint64_t m[2] = {0b110, 0b011};
  CHECK(kernels::find_superset(m, 2, 0b010) == 0);
  kernels::set_isa(before);
  CHECK(kernels::active_isa() == before);
}
