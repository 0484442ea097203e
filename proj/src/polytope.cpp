#include "mac/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace mac {

CombPolytope::CombPolytope(int n, SimplicialComplex nerve) : n_(n), nerve_(std::move(nerve)) {
  if (n < 0) throw std::invalid_argument("polytope dimension must be nonnegative");
  if (nerve_.ghosts()) throw std::invalid_argument("polytope nerve has ghost vertices (redundant facet)");
  for (VSet f : nerve_.maximal_faces())
    if (card(f) != n)
      throw std::invalid_argument("nerve is not pure of dimension " + std::to_string(n - 1) +
                                  " (a maximal face has " + std::to_string(card(f)) + " vertices)");
}

int CombPolytope::find_facet(const std::string& label) const {
  for (int i = 0; i < m(); ++i)
    if (facet_label(i) == label) return i;
  return -1;
}

static std::string fresh_label(const CombPolytope& p, const std::string& base) {
  if (p.find_facet(base) < 0) return base;
  return base + "@" + std::to_string(p.n() + 1);
}

CombPolytope simplex_polytope(int n) {
  if (n < 1) throw std::invalid_argument("simplex_polytope: n must be positive");
  std::vector<VSet> faces;
  for (int i = 0; i <= n; ++i) faces.push_back(full_set(n + 1) & ~bit(i));
  return CombPolytope(n, SimplicialComplex(n + 1, faces));
}

CombPolytope product_with_interval(const CombPolytope& p) {
  SimplicialComplex ends(2, {bit(0), bit(1)}, {fresh_label(p, "bottom"), fresh_label(p, "top")});
  SimplicialComplex base = p.nerve();
  if (base.labels().empty()) {
    std::vector<std::string> l;
    for (int i = 0; i < p.m(); ++i) l.push_back(base.label(i));
    base = base.with_labels(l);
  }
  return CombPolytope(p.n() + 1, join(base, ends));
}

CombPolytope fc(const CombPolytope& p, int facet) {
  if (facet < 0 || facet >= p.m())
    throw std::out_of_range("fc: facet " + std::to_string(facet + 1) + " outside [1," + std::to_string(p.m()) + "]");
  CombPolytope q = product_with_interval(p);
  int top = p.m() + 1;
  auto k = stellar_subdivide_edge(q.nerve(), bit(facet) | bit(top), "cut(" + p.facet_label(facet) + ")");
  return CombPolytope(p.n() + 1, std::move(k));
}

int auto_facet(const CombPolytope& p) {
  if (p.m() > 0 && p.facet_label(p.m() - 1).rfind("cut(", 0) == 0) return p.m() - 1;
  return 0;
}

CombPolytope fc_power(const CombPolytope& p, int k, FacetPolicy policy) {
  if (k < 0) throw std::invalid_argument("fc_power: negative exponent");
  CombPolytope cur = p;
  for (int i = 0; i < k; ++i) cur = fc(cur, policy.automatic ? auto_facet(cur) : policy.facet);
  return cur;
}

CombPolytope sequence_s(const std::vector<int>& s) {
  int n = static_cast<int>(s.size());
  if (n == 0) throw std::invalid_argument("sequence_s: empty prefix");
  if (s[n - 1]) return gen_qn(n);
  int k = 1;
  for (int j = n - 1; j >= 1; --j)
    if (s[j - 1]) {
      k = j;
      break;
    }
  return fc_power(gen_qn(k), n - k);
}

CombPolytope sequence_k(int k, int n) {
  if (k < 1) throw std::invalid_argument("sequence_k: k must be positive");
  return fc_power(gen_qn(n), k - 1);
}

VSet FaceMap::image() const {
  VSet out = 0;
  for (int j : phi) out |= bit(j);
  return out;
}

Face face_of(const CombPolytope& p, VSet s) {
  if (!p.nerve().contains(s)) throw std::invalid_argument("face_of: facet set is not a face of the nerve");
  Embedded l = link(p.nerve(), s);
  Embedded core = strip_ghosts(l.complex);
  Face f;
  f.map.s = s;
  f.map.r = p.n() - card(s);
  for (int local : core.parent) f.map.phi.push_back(l.parent[local]);
  std::vector<std::string> labels;
  for (int j : f.map.phi) labels.push_back(p.facet_label(j));
  f.polytope = CombPolytope(f.map.r, core.complex.with_labels(labels));
  return f;
}

std::vector<VSet> phi_image_faces(const CombPolytope& p, const FaceMap& f) {
  return link_faces(p.nerve(), f.s);
}

FullnessCheck face_fullness(const CombPolytope& p, VSet s) {
  Face f = face_of(p, s);
  VSet j = f.map.image();
  auto img = phi_image_faces(p, f.map);
  auto full = faces_within(p.nerve(), j);
  FullnessCheck c;
  c.by_images = img == full;
  c.by_intersections = true;
  for (VSet t : full)
    if (t && !p.nerve().contains(t | s)) {
      c.by_intersections = false;
      break;
    }
  std::vector<VSet> missing;
  std::set_difference(full.begin(), full.end(), img.begin(), img.end(), std::back_inserter(missing), canonical_less);
  for (VSet t : missing) {
    bool minimal = true;
    for (VSet u : c.extra)
      if (subset_of(u, t)) minimal = false;
    if (minimal) c.extra.push_back(t);
  }
  if (c.by_images != c.by_intersections)
    throw std::logic_error("face fullness: image and intersection criteria disagree");
  c.full = c.by_images;
  return c;
}

bool is_face_full(const CombPolytope& p, VSet s) { return face_fullness(p, s).full; }

FlagReport flag_criterion_report(const CombPolytope& p, int threads) {
  FlagReport r;
  r.flag_by_nonfaces = is_flag_by_nonfaces(p.nerve());
  r.flag_by_links = is_flag_by_links(p.nerve());
  auto faces = p.nerve().faces();
  faces.erase(faces.begin());  // the empty face: F = P
  r.faces_checked = static_cast<long>(faces.size());
  std::atomic<std::size_t> first{faces.size()};
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= faces.size() || i >= first.load()) return;
      if (!is_face_full(p, faces[i])) {
        std::size_t cur = first.load();
        while (i < cur && !first.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  int t = std::max(1, threads);
  if (t == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  r.all_faces_full = first.load() == faces.size();
  if (!r.all_faces_full) {
    r.witness = faces[first.load()];
    r.witness_extra = face_fullness(p, *r.witness).extra;
  }
  return r;
}

}  // namespace mac
