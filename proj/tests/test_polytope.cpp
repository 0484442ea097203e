#include <doctest.h>

#include <algorithm>
#include <map>

#include "mac/geometry.hpp"
#include "mac/polytope.hpp"
#include "oracles/oracles.hpp"

using namespace mac;

namespace {

VSet S(std::initializer_list<int> vs) {
  VSet s = 0;
  for (int v : vs) s |= bit(v - 1);
  return s;
}

std::vector<VSet> sorted(std::vector<VSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Relabels b onto a's vertex order through matching labels.
SimplicialComplex by_labels(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::map<std::string, int> pos;
  for (int v = 0; v < a.m(); ++v) pos[a.label(v)] = v;
  std::vector<int> f(b.m());
  for (int v = 0; v < b.m(); ++v) f[v] = pos.at(b.label(v));
  std::vector<VSet> faces;
  for (VSet x : b.maximal_faces()) faces.push_back(map_set(x, f));
  return SimplicialComplex(a.m(), faces);
}

}  // namespace

TEST_CASE("facet count of the 2-truncated cubes") {
  for (int n = 2; n <= 6; ++n) CHECK(gen_qn(n).m() == n * (n + 3) / 2 - 1);
  CHECK(gen_qn(0).m() == 0);
  CHECK(gen_qn(1).m() == 2);
  CHECK(gen_qn(1).n() == 1);
}

TEST_CASE("small 2-truncated cubes have the listed minimal nonfaces") {
  CHECK(sorted(minimal_nonfaces(gen_qn(2).nerve())) == sorted({S({1, 3}), S({2, 4})}));
  auto q3 = gen_qn(3);
  CHECK(q3.facet_label(6) == "w1,5");
  CHECK(q3.facet_label(7) == "w2,6");
  CHECK(sorted(minimal_nonfaces(q3.nerve())) ==
        sorted({S({1, 4}), S({2, 5}), S({3, 6}), S({1, 5}), S({2, 6}), S({7, 4}), S({7, 2}), S({8, 5}),
                S({8, 3}), S({7, 8})}));
}

TEST_CASE("ideal construction matches iterated truncation and the exact realization") {
  for (int n = 2; n <= 5; ++n) {
    auto q = gen_qn(n).nerve();
    auto t = oracle::qn_by_truncation(n);
    CHECK(by_labels(q, t) == q);
    auto g = nerve_from_hrep(qn_realization(n)).nerve();
    CHECK(g.maximal_faces().size() == q.maximal_faces().size());
    CHECK(iso_check(g, q));
  }
}

TEST_CASE("product with an interval") {
  auto sq = product_with_interval(gen_qn(1));
  CHECK(iso_check(sq.nerve(), gen_qn(2).nerve()));
  auto cube = product_with_interval(gen_qn(2));
  CHECK(cube.m() == 6);
  CHECK(cube.nerve().f_vector() == std::vector<long>{1, 6, 12, 8});
  CHECK(cube.facet_label(4) == "bottom");
  CHECK(cube.facet_label(5) == "top");
  auto twice = product_with_interval(cube);
  CHECK(twice.facet_label(6) == "bottom@4");
  CHECK(is_flag(twice.nerve()));
}

TEST_CASE("face cut bookkeeping") {
  for (int n = 2; n <= 4; ++n) {
    auto p = gen_qn(n);
    for (int f = 0; f < p.m(); f += 3) {
      auto q = fc(p, f);
      CHECK(q.m() == p.m() + 3);
      CHECK(q.n() == p.n() + 1);
      CHECK(is_flag(q.nerve()));
      auto bottom = strip_ghosts(link(q.nerve(), bit(q.find_facet("bottom"))).complex);
      CHECK(iso_check(bottom.complex, p.nerve()));
    }
  }
  CHECK_THROWS(fc(gen_qn(2), 4));
  CHECK(fc_power(gen_qn(3), 0) == gen_qn(3));
  auto a = fc_power(gen_qn(2), 2);
  CHECK(a.facet_label(a.m() - 1).rfind("cut(cut(", 0) == 0);
  for (int l = 2; l <= 4; ++l)
    for (int k = 0; k <= 3; ++k) CHECK(fc_power(gen_qn(l), k).m() == l * (l + 3) / 2 - 1 + 3 * k);
}

TEST_CASE("sequence generators") {
  CHECK(sequence_s({1, 1, 1}) == gen_qn(3));
  CHECK(sequence_s({0, 1, 0, 0}).m() == gen_qn(2).m() + 6);
  CHECK(sequence_s({0, 0}).m() == gen_qn(1).m() + 3);
  CHECK(sequence_k(1, 4) == gen_qn(4));
  CHECK(sequence_k(3, 2).n() == 4);
}

TEST_CASE("faces and the map phi") {
  auto prism = nerve_from_hrep(prism_hrep());
  auto f = face_of(prism, S({2}));
  CHECK(f.map.r == 2);
  CHECK(f.map.phi == std::vector<int>{0, 2, 3, 4});
  CHECK(f.polytope.m() == 4);
  auto whole = face_of(prism, 0);
  CHECK(whole.map.phi == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_THROWS(face_of(prism, S({1, 5})));
  for (int n = 2; n <= 5; ++n) {
    auto q = gen_qn(n);
    for (int v : {n - 2, 2 * n - 2}) CHECK(iso_check(face_of(q, bit(v)).polytope.nerve(), gen_qn(n - 1).nerve()));
  }
}

TEST_CASE("fullness of faces") {
  auto prism = nerve_from_hrep(prism_hrep());
  auto quad = face_fullness(prism, S({2}));
  CHECK_FALSE(quad.full);
  CHECK(quad.by_images == quad.by_intersections);
  CHECK(std::find(quad.extra.begin(), quad.extra.end(), S({3, 4})) != quad.extra.end());
  CHECK(is_face_full(prism, S({1})));
  auto q4 = gen_qn(4);
  for (VSet s : q4.nerve().faces()) {
    auto f = face_of(q4, s);
    auto img = phi_image_faces(q4, f.map);
    for (VSet x : img) CHECK(q4.nerve().contains(x));
    CHECK(is_face_full(q4, s));
  }
}

TEST_CASE("flag criterion report") {
  auto r = flag_criterion_report(gen_qn(3));
  CHECK(r.consistent());
  CHECK(r.flag_by_nonfaces);
  CHECK_FALSE(r.witness);
  auto prism = nerve_from_hrep(prism_hrep());
  auto p = flag_criterion_report(prism, 2);
  CHECK(p.consistent());
  CHECK_FALSE(p.flag_by_nonfaces);
  REQUIRE(p.witness);
  CHECK(*p.witness == S({2}));
  auto simplex = flag_criterion_report(simplex_polytope(3));
  CHECK(simplex.consistent());
  CHECK(simplex.witness);
}
