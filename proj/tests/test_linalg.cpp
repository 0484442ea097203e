#include <doctest.h>

#include <random>

#include "mac/linalg.hpp"

using namespace mac;

namespace {

template <class F>
Matrix<F> random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix<F> a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = FieldTraits<F>::from_int(static_cast<long>(rng() % 5) - 2);
  return a;
}

}  // namespace

TEST_CASE_TEMPLATE("nullspace vectors are annihilated and rank-nullity holds", F, Gf2, Rational) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_matrix<F>(1 + rng() % 6, 1 + rng() % 7, rng);
    auto ns = nullspace(a);
    CHECK(rank(a) + ns.size() == a.cols());
    for (const auto& v : ns)
      for (const auto& x : a.apply(v)) CHECK(is_zero(x));
  }
}

TEST_CASE_TEMPLATE("solve finds preimages of images and rejects others", F, Gf2, Rational) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_matrix<F>(2 + rng() % 5, 1 + rng() % 5, rng);
    std::vector<F> x(a.cols());
    for (auto& v : x) v = FieldTraits<F>::from_int(static_cast<long>(rng() % 3));
    auto b = a.apply(x);
    auto y = solve(a, b);
    REQUIRE(y);
    CHECK(a.apply(*y) == b);
  }
  Matrix<F> z(2, 1);
  z(0, 0) = F(1);
  z(1, 0) = F(1);
  CHECK_FALSE(solve(z, std::vector<F>{F(1), F(0)}));
}

TEST_CASE("span basis membership") {
  SpanBasis<Rational> s(3);
  CHECK(s.insert({Rational(1), Rational(2), Rational(0)}));
  CHECK(s.insert({Rational(0), Rational(1), Rational(1)}));
  CHECK_FALSE(s.insert({Rational(1), Rational(3), Rational(1)}));
  CHECK(s.contains({Rational(2), Rational(5), Rational(1)}));
  CHECK_FALSE(s.contains({Rational(0), Rational(0), Rational(1)}));
  CHECK(s.dim() == 2);
}

TEST_CASE("bit matrix rank matches dense elimination") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + rng() % 20, c = 1 + rng() % 150;
    BitMatrix b(r, c);
    Matrix<Gf2> d(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() % 3 == 0) {
          b.set(i, j, true);
          d(i, j) = Gf2(1);
        }
    CHECK(rank_f2(b) == rank(d));
  }
}
