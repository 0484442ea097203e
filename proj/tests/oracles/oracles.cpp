#include "oracles/oracles.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace oracle {

using mac::SimplicialComplex;

bool brute_is_face(const SimplicialComplex& k, VSet s) {
  for (VSet f : k.maximal_faces())
    if ((s & ~f) == 0) return true;
  return false;
}

std::vector<VSet> brute_faces(const SimplicialComplex& k) {
  std::vector<VSet> out;
  for (VSet s = 0; s < (VSet{1} << k.m()); ++s)
    if (brute_is_face(k, s)) out.push_back(s);
  return out;
}

std::vector<VSet> brute_minimal_nonfaces(const SimplicialComplex& k) {
  std::vector<VSet> out;
  for (VSet s = 0; s < (VSet{1} << k.m()); ++s) {
    if (__builtin_popcountll(s) < 2 || brute_is_face(k, s)) continue;
    bool minimal = true;
    for (int v = 0; v < k.m() && minimal; ++v)
      if ((s >> v) & 1) minimal = brute_is_face(k, s & ~(VSet{1} << v));
    if (minimal) out.push_back(s);
  }
  return out;
}

bool brute_is_flag(const SimplicialComplex& k) {
  for (VSet s : brute_minimal_nonfaces(k))
    if (__builtin_popcountll(s) != 2) return false;
  return true;
}

SimplicialComplex brute_stellar(const SimplicialComplex& k, VSet e, const std::string& label) {
  if (__builtin_popcountll(e) != 2 || !brute_is_face(k, e)) throw std::invalid_argument("not an edge");
  int m = k.m();
  VSet w = VSet{1} << m;
  std::vector<VSet> faces;
  for (VSet s : brute_faces(k)) {
    if ((s & e) == e) continue;
    faces.push_back(s);
    // w joined with faces of the closed star missing e
    if (brute_is_face(k, s | e)) faces.push_back(s | w);
  }
  std::vector<std::string> labels = k.labels();
  if (!labels.empty()) labels.push_back(label);
  return SimplicialComplex(m + 1, faces, labels);
}

SimplicialComplex qn_by_truncation(int n) {
  int m = 2 * n;
  std::vector<VSet> faces;
  for (VSet choice = 0; choice < (VSet{1} << n); ++choice) {
    VSet f = 0;
    for (int j = 0; j < n; ++j) f |= VSet{1} << ((choice >> j) & 1 ? n + j : j);
    faces.push_back(f);
  }
  std::vector<std::string> labels;
  for (int j = 1; j <= m; ++j) labels.push_back("v" + std::to_string(j));
  SimplicialComplex k(m, faces, labels);
  std::vector<std::tuple<int, int, int, int>> cuts;  // key, key, k, l
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (a == 1 && b == n) continue;
      if (b < n) cuts.emplace_back(b + 1, a, a, b);
      else cuts.emplace_back(a + 1, INT_MAX, a, b);
    }
  std::sort(cuts.begin(), cuts.end());
  for (auto [k1, k2, a, b] : cuts) {
    VSet e = (VSet{1} << (a - 1)) | (VSet{1} << (n + b - 1));
    k = brute_stellar(k, e, "w" + std::to_string(a) + "," + std::to_string(n + b));
  }
  return k;
}

namespace {

// Rank by plain row reduction over F2.
long rank_gf2(std::vector<std::vector<int>> a) {
  long r = 0;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<long>(a.size()); ++c) {
    std::size_t p = r;
    while (p < a.size() && !(a[p][c] & 1)) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != static_cast<std::size_t>(r) && (a[i][c] & 1))
        for (std::size_t t = 0; t < cols; ++t) a[i][t] ^= a[r][t] & 1;
    ++r;
  }
  return r;
}

long rank_q(std::vector<std::vector<int>> in) {
  std::vector<std::vector<mpq_class>> a;
  for (auto& row : in) a.emplace_back(row.begin(), row.end());
  long r = 0;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<long>(a.size()); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t t = c; t < cols; ++t) a[i][t] -= f * a[r][t];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<long> reduced_homology_ranks(const SimplicialComplex& k, VSet j, mac::FieldTag field) {
  std::vector<std::vector<VSet>> by_size;
  for (VSet s : brute_faces(k)) {
    if ((s & ~j) != 0) continue;
    std::size_t c = __builtin_popcountll(s);
    if (by_size.size() <= c) by_size.resize(c + 1);
    by_size[c].push_back(s);
  }
  std::size_t top = by_size.size();
  // boundary from size c to size c-1
  std::vector<long> rk(top + 1, 0);
  for (std::size_t c = 1; c < top; ++c) {
    std::map<VSet, std::size_t> idx;
    for (std::size_t i = 0; i < by_size[c - 1].size(); ++i) idx[by_size[c - 1][i]] = i;
    std::vector<std::vector<int>> mat(by_size[c - 1].size(), std::vector<int>(by_size[c].size(), 0));
    for (std::size_t col = 0; col < by_size[c].size(); ++col) {
      VSet s = by_size[c][col];
      int pos = 0;
      for (int v = 0; v < 64; ++v) {
        if (!((s >> v) & 1)) continue;
        mat[idx.at(s & ~(VSet{1} << v))][col] = pos % 2 ? -1 : 1;
        ++pos;
      }
    }
    rk[c] = field == mac::FieldTag::F2 ? rank_gf2(mat) : rank_q(mat);
  }
  std::vector<long> out;
  for (std::size_t c = 0; c < top; ++c)
    out.push_back(static_cast<long>(by_size[c].size()) - rk[c] - rk[c + 1]);
  return out;
}

std::vector<long> betti_totals(const SimplicialComplex& k, mac::FieldTag field) {
  std::vector<long> t;
  for (VSet j = 0; j < (VSet{1} << k.m()); ++j) {
    auto h = reduced_homology_ranks(k, j, field);
    for (std::size_t c = 0; c < h.size(); ++c) {
      if (!h[c]) continue;
      // q = c - 1, degree q + |J| + 1
      std::size_t p = c + __builtin_popcountll(j);
      if (t.size() <= p) t.resize(p + 1, 0);
      t[p] += h[c];
    }
  }
  return t;
}

SimplicialComplex random_complex(int m, int faces, std::mt19937_64& rng) {
  std::vector<VSet> gen;
  std::uniform_int_distribution<int> size(1, std::min(m, 4));
  std::uniform_int_distribution<int> vert(0, m - 1);
  for (int i = 0; i < faces; ++i) {
    int s = size(rng);
    VSet f = 0;
    while (__builtin_popcountll(f) < s) f |= VSet{1} << vert(rng);
    gen.push_back(f);
  }
  VSet seen = 0;
  for (VSet f : gen) seen |= f;
  for (int v = 0; v < m; ++v)
    if (!((seen >> v) & 1)) gen.push_back(VSet{1} << v);
  return SimplicialComplex(m, gen);
}

SimplicialComplex random_flag_sphere(int subdivisions, std::mt19937_64& rng) {
  std::vector<VSet> faces;
  for (VSet c = 0; c < 8; ++c) {
    VSet f = 0;
    for (int j = 0; j < 3; ++j) f |= VSet{1} << (((c >> j) & 1) ? 3 + j : j);
    faces.push_back(f);
  }
  SimplicialComplex k(6, faces);
  for (int i = 0; i < subdivisions; ++i) {
    std::vector<VSet> edges;
    for (VSet s : brute_faces(k))
      if (__builtin_popcountll(s) == 2) edges.push_back(s);
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    k = brute_stellar(k, edges[pick(rng)], "");
  }
  return k;
}

namespace {

template <class F>
F random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(1, 3);
  int v = c(rng);
  if (rng() & 1) v = -v;
  return mac::FieldTraits<F>::from_int(v);
}

}  // namespace

template <class F>
mac::KoszulElement<F> random_element(const SimplicialComplex& k, int terms, std::mt19937_64& rng) {
  auto faces = brute_faces(k);
  std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
  std::bernoulli_distribution coin(0.3);
  mac::KoszulElement<F> x;
  for (int i = 0; i < terms; ++i) {
    VSet s = faces[pick(rng)];
    VSet u = 0;
    for (int v = 0; v < k.m(); ++v)
      if (!((s >> v) & 1) && coin(rng)) u |= VSet{1} << v;
    x.add(mac::Monomial{u, s}, random_coeff<F>(rng));
  }
  return x;
}

template <class F>
mac::KoszulElement<F> random_homogeneous(const SimplicialComplex& k, int terms, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  VSet t = 0;
  for (int v = 0; v < k.m(); ++v)
    if (coin(rng)) t |= VSet{1} << v;
  std::map<int, std::vector<mac::Monomial>> levels;
  for (VSet s : brute_faces(k))
    if ((s & ~t) == 0) levels[__builtin_popcountll(s)].push_back({t & ~s, s});
  std::vector<int> keys;
  for (auto& [s, v] : levels) keys.push_back(s);
  std::uniform_int_distribution<std::size_t> pk(0, keys.size() - 1);
  const auto& mon = levels[keys[pk(rng)]];
  std::uniform_int_distribution<std::size_t> pm(0, mon.size() - 1);
  mac::KoszulElement<F> x;
  for (int i = 0; i < terms; ++i) x.add(mon[pm(rng)], random_coeff<F>(rng));
  return x;
}

template mac::KoszulElement<mac::Gf2> random_element<mac::Gf2>(const SimplicialComplex&, int, std::mt19937_64&);
template mac::KoszulElement<mac::Rational> random_element<mac::Rational>(const SimplicialComplex&, int,
                                                                         std::mt19937_64&);
template mac::KoszulElement<mac::Gf2> random_homogeneous<mac::Gf2>(const SimplicialComplex&, int,
                                                                   std::mt19937_64&);
template mac::KoszulElement<mac::Rational> random_homogeneous<mac::Rational>(const SimplicialComplex&, int,
                                                                             std::mt19937_64&);

}  // namespace oracle
