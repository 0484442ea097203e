#include <doctest.h>

#include <random>

#include "mac/koszul.hpp"
#include "mac/polytope.hpp"
#include "oracles/oracles.hpp"

using namespace mac;

namespace {

SimplicialComplex cycle(int m) {
  std::vector<VSet> e;
  for (int i = 0; i < m; ++i) e.push_back(bit(i) | bit((i + 1) % m));
  return SimplicialComplex(m, e);
}

template <class F>
KoszulElement<F> sign_part(const KoszulElement<F>& x, bool odd) {
  KoszulElement<F> r;
  for (const auto& [mon, c] : x.terms())
    if ((mon.total_degree() % 2 == 1) == odd) r.add(mon, c);
  return r;
}

}  // namespace

TEST_CASE_TEMPLATE("d squares to zero and satisfies Leibniz", F, Gf2, Rational) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto k = oracle::random_complex(6, 5, rng);
    Koszul<F> r(k);
    auto x = oracle::random_element<F>(k, 4, rng);
    auto y = oracle::random_element<F>(k, 4, rng);
    CHECK(r.differential(r.differential(x)).is_zero());
    // d(xy) = d(x) y + (-1)^{deg x} x d(y), split by the parity of deg x
    auto lhs = r.differential(r.multiply(x, y));
    auto rhs = r.multiply(r.differential(x), y) + r.multiply(sign_part(x, false), r.differential(y)) -
               r.multiply(sign_part(x, true), r.differential(y));
    CHECK(lhs == rhs);
    auto z = oracle::random_element<F>(k, 3, rng);
    CHECK(r.multiply(r.multiply(x, y), z) == r.multiply(x, r.multiply(y, z)));
  }
}

TEST_CASE_TEMPLATE("component cohomology matches Hochster ranks", F, Gf2, Rational) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    auto k = oracle::random_complex(6, 6, rng);
    Koszul<F> r(k);
    VSet t = rng() & full_set(6);
    auto h = oracle::reduced_homology_ranks(k, t, FieldTraits<F>::tag);
    for (int i = 0; i <= card(t); ++i) {
      // H^{-i,2J} = H~^{|J|-i-1}(K_J), oracle indexed q+1
      std::size_t idx = card(t) - i;
      long want = idx < h.size() ? h[idx] : 0;
      CHECK(r.cohomology(t, i).dimension == want);
    }
  }
}

TEST_CASE("integer multidegrees outside 0/1 vanish") {
  Koszul<Rational> r(cycle(4));
  CHECK(r.cohomology(std::vector<int>{1, 2, 1, 0}, 1).dimension == 0);
  CHECK(r.cohomology(std::vector<int>{1, 0, 1, 0}, 1).dimension == 1);
  CHECK(r.cohomology(std::vector<int>{-1, 0, 1, 0}, 1).dimension == 0);
}

TEST_CASE("v_i is the boundary of u_i") {
  Koszul<Rational> r(cycle(5));
  auto v1 = r.parse_monomial("v1");
  auto y = r.is_coboundary(v1);
  REQUIRE(y);
  CHECK(r.differential(*y) == v1);
  CHECK(*y == r.parse_monomial("u1"));
  auto u1v3 = r.parse_monomial("u1 v3");
  CHECK(r.is_cocycle(u1v3));
  CHECK_FALSE(r.is_coboundary(u1v3));
  CHECK_THROWS(r.is_coboundary(r.parse_monomial("u1")));
}

TEST_CASE("monomial parsing") {
  Koszul<Rational> r(cycle(5));
  auto x = r.parse_monomial("-2 u3 * v1");
  CHECK(x.size() == 1);
  CHECK(x.coefficient(Monomial{bit(2), bit(0)}) == Rational(-2));
  // u3 v1 = -(v1 u3) has opposite sign in the other order
  auto y = r.parse_monomial("v1 u3");
  CHECK(x == y.scaled(Rational(-2)));
  CHECK(r.parse_monomial("u1 u1").is_zero());
  CHECK(r.parse_monomial("v1 v3").is_zero());
  CHECK_THROWS(r.parse_monomial("x1"));
  CHECK_THROWS(r.parse_monomial("u9"));
}

TEST_CASE("total dimension") {
  Koszul<Gf2> r(cycle(4));
  // faces: empty 16, four vertices 8 each, four edges 4 each
  CHECK(r.total_dimension() == 16 + 32 + 16);
  long sum = 0;
  for (VSet t = 0; t < bit(4); ++t) {
    auto c = r.component(t);
    for (std::size_t s = 0; s < c->levels.size(); ++s) sum += c->dim(s);
  }
  CHECK(sum == r.total_dimension());
}

TEST_CASE_TEMPLATE("Hochster classes transport to cocycles and back", F, Gf2, Rational) {
  auto k = gen_qn(3).nerve();
  Koszul<F> r(k);
  for (VSet j : {VSet{0b1001}, VSet{0b10010010}, VSet{0b111111}}) {
    for (int q = 0; q < 3; ++q)
      for (const auto& h : cohomology_basis<F>(k, j, q)) {
        auto x = r.from_hochster(h);
        CHECK(r.is_cocycle(x));
        CHECK_FALSE(r.is_coboundary(x));
        CHECK(r.to_hochster(x).cocycle == h.cocycle);
      }
  }
}

TEST_CASE("Koszul products agree with the Hochster cup product over F2") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto k = oracle::random_complex(6, 6, rng);
    Koszul<Gf2> r(k);
    for (int a = 0; a < 6; ++a) {
      VSet j1 = rng() & full_set(6), j2 = rng() & full_set(6) & ~j1;
      for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
          for (const auto& h1 : cohomology_basis<Gf2>(k, j1, q1))
            for (const auto& h2 : cohomology_basis<Gf2>(k, j2, q2)) {
              auto prod = r.multiply(r.from_hochster(h1), r.from_hochster(h2));
              auto cup = r.from_hochster(cup_product(k, h1, h2));
              auto diff = prod - cup;
              CHECK((diff.is_zero() || r.is_coboundary(diff)));
            }
    }
  }
}
