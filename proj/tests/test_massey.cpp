#include <doctest.h>

#include "mac/massey.hpp"
#include "mac/polytope.hpp"

using namespace mac;

namespace {

SimplicialComplex cycle(int m) {
  std::vector<VSet> e;
  for (int i = 0; i < m; ++i) e.push_back(bit(i) | bit((i + 1) % m));
  return SimplicialComplex(m, e);
}

}  // namespace

TEST_CASE("default classes are cocycles in the expected degree") {
  auto reps = qn_default_classes<Rational>(3);
  REQUIRE(reps.size() == 3);
  Koszul<Rational> r(gen_qn(3).nerve());
  CHECK_NOTHROW(check_classes(r, reps));
  for (const auto& a : reps) CHECK(a.total_degree() == 3);
  CHECK_THROWS(check_classes(r, {r.parse_monomial("u1")}));
}

TEST_CASE("two-fold products reduce to ordinary products") {
  Koszul<Rational> r(cycle(4));
  std::vector<KoszulElement<Rational>> reps{r.parse_monomial("u1 v3"), r.parse_monomial("u2 v4")};
  auto sys = find_defining_system(r, reps);
  REQUIRE(sys);
  auto a = massey_value(r, *sys);
  // -bar(a1) a2 with deg a1 odd
  CHECK(a == r.multiply(reps[0], reps[1]));
  auto rep = massey_nontrivial(r, reps);
  CHECK(rep.verdict == Verdict::Nontrivial);
}

TEST_CASE_TEMPLATE("the triple product on Q^3 is nontrivial", F, Gf2, Rational) {
  Koszul<F> r(gen_qn(3).nerve());
  auto reps = qn_default_classes<F>(3);
  auto coset = massey_nontrivial(r, reps, {Strategy::Coset});
  CHECK(coset.defined);
  CHECK(coset.verdict == Verdict::Nontrivial);
  CHECK(coset.degree == 8);
  CHECK(coset.multidegree == 0b111111);
  CHECK(coset.indeterminacy_dim >= 0);
  auto ex = massey_nontrivial(r, reps, {Strategy::Exhaustive});
  CHECK(ex.verdict == Verdict::Nontrivial);
  CHECK(ex.complete);
  REQUIRE(ex.witness);
  auto a = massey_value(r, *ex.witness);
  CHECK(r.is_cocycle(a));
  CHECK(a.total_degree() == 8);
}

TEST_CASE("changing a representative by a coboundary keeps the verdict") {
  Koszul<Rational> r(gen_qn(3).nerve());
  auto reps = qn_default_classes<Rational>(3);
  // v1 u4 + d(u1 u4)
  auto shifted = reps[0] + r.differential(r.parse_monomial("u1 u4"));
  CHECK(shifted != reps[0]);
  std::vector<KoszulElement<Rational>> alt{shifted, reps[1], reps[2]};
  CHECK(massey_nontrivial(r, alt, {Strategy::Coset}).verdict == Verdict::Nontrivial);
  std::vector<KoszulElement<Rational>> scaled{reps[0].scaled(Rational(3)), reps[1], reps[2].scaled(Rational(-1, 2))};
  CHECK(massey_nontrivial(r, scaled, {Strategy::Coset}).verdict == Verdict::Nontrivial);
}

TEST_CASE("a product with a null-homologous entry is trivial") {
  Koszul<Gf2> r(gen_qn(3).nerve());
  auto reps = qn_default_classes<Gf2>(3);
  reps[1] = r.differential(r.parse_monomial("u2 u5"));
  auto rep = massey_nontrivial(r, reps);
  CHECK(rep.defined);
  CHECK(rep.verdict == Verdict::Trivial);
  REQUIRE(rep.witness);
  CHECK(rep.value_is_coboundary);
}

TEST_CASE("undefined products are reported") {
  Koszul<Rational> r(cycle(4));
  // (u1 v3)^2 = 0 but <u1 v3, u2 v4, u1 v3> needs (u1v3)(u2v4) = 0, which fails
  std::vector<KoszulElement<Rational>> reps{r.parse_monomial("u1 v3"), r.parse_monomial("u2 v4"),
                                            r.parse_monomial("u1 v3")};
  auto rep = massey_nontrivial(r, reps, {Strategy::Coset});
  CHECK_FALSE(rep.defined);
  CHECK(rep.verdict == Verdict::NotDefined);
}

TEST_CASE("the four-fold product on Q^4 over F2") {
  Koszul<Gf2> r(gen_qn(4).nerve());
  auto reps = qn_default_classes<Gf2>(4);
  auto rep = massey_nontrivial(r, reps, {Strategy::Exhaustive});
  CHECK(rep.verdict == Verdict::Nontrivial);
  CHECK(rep.complete);
  CHECK(rep.systems > 0);
}

TEST_CASE("class parsing") {
  Koszul<Rational> r(gen_qn(3).nerve());
  auto c = parse_classes(r, "v1 u4; v2 u5; v3 u6");
  CHECK(c == qn_default_classes<Rational>(3));
  auto sum = parse_classes(r, "v1 u4 + 2 v1 u4");
  REQUIRE(sum.size() == 1);
  CHECK(sum[0] == r.parse_monomial("3 v1 u4"));
  CHECK(parse_strategy("coset") == Strategy::Coset);
  CHECK_THROWS(parse_strategy("guess"));
}
