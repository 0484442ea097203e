#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mac/geometry.hpp"

using namespace mac;

namespace {

VSet S(std::initializer_list<int> vs) {
  VSet s = 0;
  for (int v : vs) s |= bit(v - 1);
  return s;
}

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool same_row_space(const QuadricSystem& q, const std::vector<std::pair<QVec, Rational>>& rows) {
  std::size_t m = q.c.cols();
  SpanBasis<Rational> span(m + 1);
  for (std::size_t t = 0; t < q.c.rows(); ++t) {
    QVec r(m + 1);
    for (std::size_t j = 0; j < m; ++j) r[j] = q.c(t, j);
    r[m] = q.d[t];
    span.insert(r);
  }
  if (span.dim() != rows.size()) return false;
  for (const auto& [c, d] : rows) {
    QVec r = c;
    r.push_back(d);
    if (!span.contains(r)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("vertex enumeration of standard polytopes") {
  auto pent = pentagon_hrep();
  CHECK(pent.vertices().size() == 5);
  bool origin = false;
  for (const auto& v : pent.vertices())
    if (v.x == qv({0, 0})) origin = v.facets == S({1, 2});
  CHECK(origin);
  CHECK(cube_hrep(2).vertices().size() == 4);
  CHECK(cube_hrep(3).vertices().size() == 8);
  CHECK(prism_hrep().vertices().size() == 6);
  CHECK(qn_realization(3).vertices().size() == 12);
}

TEST_CASE("invalid H-representations are rejected") {
  QMat a(2, 2);
  a(0, 0) = 1;
  a(1, 1) = 1;
  CHECK_THROWS(HPolytope(2, a, qv({0, 0})));  // unbounded quadrant
  QMat sq(5, 2);
  sq(0, 0) = 1;
  sq(1, 1) = 1;
  sq(2, 0) = -1;
  sq(3, 1) = -1;
  sq(4, 0) = -1;
  CHECK_THROWS(HPolytope(2, sq, qv({0, 0, 1, 1, 2})));  // redundant x <= 2
  QMat oct(4, 3);
  // square pyramid: apex on four facets
  oct(0, 0) = 1;
  oct(0, 2) = -1;
  oct(1, 0) = -1;
  oct(1, 2) = -1;
  oct(2, 1) = 1;
  oct(2, 2) = -1;
  oct(3, 1) = -1;
  oct(3, 2) = -1;
  QMat pyr(5, 3);
  for (int i = 0; i < 4; ++i)
    for (int c = 0; c < 3; ++c) pyr(i, c) = oct(i, c);
  pyr(4, 2) = 1;
  CHECK_THROWS(HPolytope(3, pyr, qv({1, 1, 1, 1, 1})));
}

TEST_CASE("nerves from H-representations") {
  auto pent = nerve_from_hrep(pentagon_hrep()).nerve();
  for (int i = 0; i < 5; ++i) CHECK(pent.contains(bit(i) | bit((i + 1) % 5)));
  CHECK(pent.maximal_faces().size() == 5);
  auto cube = nerve_from_hrep(cube_hrep(3)).nerve();
  CHECK(cube.f_vector() == std::vector<long>{1, 6, 12, 8});
}

TEST_CASE("quadric systems") {
  auto q = quadric_system(pentagon_hrep());
  CHECK(same_row_space(q, {{qv({1, 0, 1, 0, 0}), Rational(2)},
                           {qv({1, 1, 0, 1, 0}), Rational(3)},
                           {qv({0, 1, 0, 0, 1}), Rational(2)}}));
  QMat seg(2, 1);
  seg(0, 0) = 1;
  seg(1, 0) = -1;
  auto s = quadric_system(HPolytope(1, seg, qv({0, 1})));
  CHECK(same_row_space(s, {{qv({1, 1}), Rational(1)}}));
  CHECK(quadric_system(qn_realization(4)).c.rows() == 9);
}

TEST_CASE("lifting points") {
  auto pent = pentagon_hrep();
  auto z = lift_point(pent, qv({0, 0}), std::vector<double>(5, 0.0));
  CHECK(std::abs(z[0]) == 0.0);
  CHECK(std::abs(z[1]) == 0.0);
  CHECK(z[2].real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(z[3].real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(z[4].real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS(lift_point(pent, qv({-1, 0}), std::vector<double>(5, 0.0)));
  auto q3 = qn_realization(3);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ph(0, 2 * std::numbers::pi);
  auto sys = quadric_system(q3);
  for (const auto& v : q3.vertices()) {
    std::vector<double> th(q3.m());
    for (auto& t : th) t = ph(rng);
    auto w = lift_point(q3, v.x, th);
    int zeros = 0;
    for (auto c : w) zeros += c == 0.0;
    CHECK(zeros == 3);
    for (std::size_t t = 0; t < sys.c.rows(); ++t) {
      double r = -sys.d[t].get_d();
      for (int j = 0; j < q3.m(); ++j) r += sys.c(t, j).get_d() * std::norm(w[j]);
      CHECK(std::abs(r) < 1e-12);
    }
  }
}

TEST_CASE("face embedding data for a pentagon edge") {
  auto pent = pentagon_hrep();
  auto e = face_embedding_data(pent, S({1}));
  CHECK(e.r == 1);
  CHECK(e.face_facets == std::vector<int>{1, 4});
  auto forms = embedding_forms(e, 5);
  // j(x2) = (0, x2, 2, 3 - x2, 2 - x2)
  CHECK(forms[1].coef == qv({1}));
  CHECK(forms[1].constant == 0);
  CHECK(forms[2].coef == qv({0}));
  CHECK(forms[2].constant == 2);
  CHECK(forms[3].coef == qv({-1}));
  CHECK(forms[3].constant == 3);
  CHECK(forms[4].coef == qv({-1}));
  CHECK(forms[4].constant == 2);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 2), ph(0, 2 * std::numbers::pi);
  for (int t = 0; t < 50; ++t) {
    double x2 = u(rng);
    std::complex<double> z2 = std::polar(std::sqrt(x2), ph(rng)), z5 = std::polar(std::sqrt(2 - x2), ph(rng));
    auto z = apply_embedding(e, 5, {z2, z5});
    CHECK(std::abs(z[0]) == 0.0);
    CHECK(std::abs(z[1] - z2) < 1e-12);
    CHECK(std::abs(z[2] - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(z[3] - std::sqrt(3 - std::norm(z2))) < 1e-12);
    CHECK(std::abs(z[4] - z5) < 1e-12);
  }
}

TEST_CASE("face embedding identities hold on every face of the corpus realizations") {
  for (const auto& p : {pentagon_hrep(), prism_hrep(), cube_hrep(3), qn_realization(3), qn_realization(4)}) {
    auto k = nerve_from_hrep(p).nerve();
    for (VSet s : k.faces()) {
      auto e = face_embedding_data(p, s);
      CHECK(e.r == p.n() - card(s));
      CHECK(static_cast<int>(e.face_facets.size()) == (s ? face_of(nerve_from_hrep(p), s).polytope.m() : p.m()));
    }
  }
}

TEST_CASE("sampled embeddings satisfy the ambient quadrics") {
  auto r = embed_and_check(pentagon_hrep(), S({1}), 100, 42);
  CHECK(r.max_residual < 1e-9);
  CHECK(r.zero_coords == std::vector<int>{1});
  auto again = embed_and_check(pentagon_hrep(), S({1}), 100, 42, 3);
  CHECK(again.max_residual == r.max_residual);
  auto full = embed_and_check(cube_hrep(3), 0, 20, 1);
  CHECK(full.max_residual < 1e-12);
  CHECK(full.zero_coords.empty());
  auto q4 = embed_and_check(qn_realization(4), S({3}), 100, 7);
  CHECK(q4.max_residual < 1e-9);
  CHECK(q4.zero_coords == std::vector<int>{3});
}
