#include "mac/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "mac/kernels.hpp"

namespace mac {

namespace {

std::vector<VSet> antichain(std::vector<VSet> faces) {
  std::sort(faces.begin(), faces.end(), [](VSet a, VSet b) {
    if (card(a) != card(b)) return card(a) > card(b);
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VSet> keep;
  for (VSet f : faces)
    if (kernels::find_superset(keep.data(), keep.size(), f) < 0) keep.push_back(f);
  std::sort(keep.begin(), keep.end(), canonical_less);
  return keep;
}

void sort_unique(std::vector<VSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::sort(v.begin(), v.end(), canonical_less);
}

}  // namespace

SimplicialComplex::SimplicialComplex() : m_(0), maximal_{0} {}

SimplicialComplex::SimplicialComplex(int m, std::vector<VSet> faces, std::vector<std::string> labels,
                                     bool allow_ghosts)
    : m_(m), labels_(std::move(labels)), allow_ghosts_(allow_ghosts) {
  if (m < 0 || m > kMaxVertices) throw std::invalid_argument("vertex count must lie in [0,64], got " + std::to_string(m));
  if (!labels_.empty() && static_cast<int>(labels_.size()) != m)
    throw std::invalid_argument("label count " + std::to_string(labels_.size()) + " differs from m = " + std::to_string(m));
  for (VSet f : faces)
    if (!subset_of(f, full_set(m))) throw std::invalid_argument("face leaves the vertex range [1," + std::to_string(m) + "]");
  if (faces.empty()) faces.push_back(0);
  maximal_ = antichain(std::move(faces));
  for (VSet f : maximal_) support_ |= f;
  if (!allow_ghosts_ && support_ != full_set(m_)) {
    int g = lowest(full_set(m_) & ~support_);
    throw std::invalid_argument("vertex " + std::to_string(g + 1) + " is a ghost (in no face)");
  }
}

std::string SimplicialComplex::label(int v) const {
  if (v < static_cast<int>(labels_.size())) return labels_[v];
  return std::to_string(v + 1);
}

bool SimplicialComplex::contains(VSet s) const {
  return kernels::find_superset(maximal_.data(), maximal_.size(), s) >= 0;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (VSet f : maximal_) d = std::max(d, card(f) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  for (VSet f : maximal_)
    if (card(f) != card(maximal_.front())) return false;
  return true;
}

std::vector<VSet> SimplicialComplex::faces() const {
  std::vector<VSet> out;
  for (VSet f : maximal_) for_each_subset(f, [&](VSet s) { out.push_back(s); });
  sort_unique(out);
  return out;
}

std::vector<VSet> SimplicialComplex::faces_of_size(int k) const {
  std::vector<VSet> out;
  for (VSet f : maximal_) {
    if (card(f) < k) continue;
    for_each_subset(f, [&](VSet s) {
      if (card(s) == k) out.push_back(s);
    });
  }
  sort_unique(out);
  return out;
}

std::vector<long> SimplicialComplex::f_vector() const {
  std::vector<long> f(dim() + 2, 0);
  for (VSet s : faces()) ++f[card(s)];
  return f;
}

std::vector<VSet> SimplicialComplex::adjacency() const {
  std::vector<VSet> adj(m_, 0);
  for (VSet f : maximal_) for_each_bit(f, [&](int v) { adj[v] |= f & ~bit(v); });
  return adj;
}

SimplicialComplex SimplicialComplex::with_labels(std::vector<std::string> labels) const {
  return SimplicialComplex(m_, maximal_, std::move(labels), allow_ghosts_);
}

VSet Embedded::lift(VSet local) const {
  VSet g = 0;
  for_each_bit(local, [&](int v) { g |= bit(parent[v]); });
  return g;
}

VSet Embedded::lower(VSet global) const {
  VSet l = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (contains(global, parent[i])) l |= bit(static_cast<int>(i));
  return l;
}

VSet Embedded::image() const { return lift(full_set(static_cast<int>(parent.size()))); }

std::vector<VSet> maximal_faces_within(const SimplicialComplex& k, VSet j) {
  std::vector<VSet> cut;
  for (VSet f : k.maximal_faces()) cut.push_back(f & j);
  return antichain(std::move(cut));
}

std::vector<VSet> faces_within(const SimplicialComplex& k, VSet j) {
  std::vector<VSet> out;
  for (VSet f : maximal_faces_within(k, j)) for_each_subset(f, [&](VSet s) { out.push_back(s); });
  sort_unique(out);
  return out;
}

static std::vector<std::string> sub_labels(const SimplicialComplex& k, const std::vector<int>& parent) {
  if (k.labels().empty()) return {};
  std::vector<std::string> out;
  for (int p : parent) out.push_back(k.labels()[p]);
  return out;
}

Embedded full_subcomplex(const SimplicialComplex& k, VSet j) {
  Embedded e;
  e.parent = elements(j & full_set(k.m()));
  std::vector<VSet> local;
  for (VSet f : maximal_faces_within(k, j)) local.push_back(e.lower(f));
  e.complex = SimplicialComplex(static_cast<int>(e.parent.size()), std::move(local), sub_labels(k, e.parent),
                                k.allows_ghosts());
  return e;
}

std::vector<VSet> link_faces(const SimplicialComplex& k, VSet sigma) {
  if (!k.contains(sigma)) throw std::invalid_argument("link: simplex is not a face");
  std::vector<VSet> out;
  for (VSet f : k.maximal_faces())
    if (subset_of(sigma, f)) for_each_subset(f & ~sigma, [&](VSet s) { out.push_back(s); });
  sort_unique(out);
  return out;
}

Embedded link(const SimplicialComplex& k, VSet sigma) {
  if (!k.contains(sigma)) throw std::invalid_argument("link: simplex is not a face");
  Embedded e;
  e.parent = elements(full_set(k.m()) & ~sigma);
  std::vector<VSet> local;
  for (VSet f : k.maximal_faces())
    if (subset_of(sigma, f)) local.push_back(e.lower(f & ~sigma));
  e.complex = SimplicialComplex(static_cast<int>(e.parent.size()), std::move(local), sub_labels(k, e.parent), true);
  return e;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  int m = a.m() + b.m();
  if (m > kMaxVertices) throw std::invalid_argument("join exceeds 64 vertices");
  std::vector<VSet> faces;
  for (VSet f : a.maximal_faces())
    for (VSet g : b.maximal_faces()) faces.push_back(f | (g << a.m()));
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    for (int v = 0; v < a.m(); ++v) labels.push_back(a.label(v));
    for (int v = 0; v < b.m(); ++v) labels.push_back(b.label(v));
  }
  return SimplicialComplex(m, std::move(faces), std::move(labels), a.allows_ghosts() || b.allows_ghosts());
}

std::vector<VSet> minimal_nonfaces(const SimplicialComplex& k) {
  std::vector<VSet> out;
  VSet all = full_set(k.m());
  for (VSet s : k.faces()) {
    if (!s) continue;
    VSet above = s ? all & ~(bit(highest(s)) | (bit(highest(s)) - 1)) : all;
    for_each_bit(above, [&](int v) {
      VSet t = s | bit(v);
      if (k.contains(t)) return;
      bool minimal = true;
      for_each_bit(s, [&](int x) {
        if (minimal && !k.contains(t & ~bit(x))) minimal = false;
      });
      if (minimal) out.push_back(t);
    });
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_flag_by_nonfaces(const SimplicialComplex& k) {
  for (VSet s : minimal_nonfaces(k))
    if (card(s) != 2) return false;
  return true;
}

bool is_flag_by_links(const SimplicialComplex& k) {
  auto adj = k.adjacency();
  bool ok = true;
  for_each_bit(k.vertex_set(), [&](int v) {
    if (!ok) return;
    for (VSet g : maximal_faces_within(k, adj[v]))
      if (!k.contains(g | bit(v))) {
        ok = false;
        return;
      }
  });
  return ok;
}

bool is_flag(const SimplicialComplex& k) { return is_flag_by_nonfaces(k); }

SimplicialComplex stellar_subdivide_edge(const SimplicialComplex& k, VSet e, const std::string& new_label) {
  if (card(e) != 2) throw std::invalid_argument("stellar subdivision needs a 2-element edge");
  if (!k.contains(e)) throw std::invalid_argument("stellar subdivision: edge is not a face");
  if (k.m() + 1 > kMaxVertices) throw std::invalid_argument("stellar subdivision exceeds 64 vertices");
  int w = k.m();
  int a = lowest(e), b = highest(e);
  std::vector<VSet> faces;
  for (VSet f : k.maximal_faces()) {
    if (subset_of(e, f)) {
      faces.push_back((f & ~bit(a)) | bit(w));
      faces.push_back((f & ~bit(b)) | bit(w));
    } else {
      faces.push_back(f);
    }
  }
  std::vector<std::string> labels;
  if (!k.labels().empty() || !new_label.empty()) {
    for (int v = 0; v < k.m(); ++v) labels.push_back(k.label(v));
    labels.push_back(new_label.empty() ? std::to_string(w + 1) : new_label);
  }
  return SimplicialComplex(k.m() + 1, std::move(faces), std::move(labels), k.allows_ghosts());
}

static void bron_kerbosch(VSet r, VSet p, VSet x, const std::vector<VSet>& adj, std::vector<VSet>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  VSet px = p | x;
  int pivot = lowest(px);
  int best = -1;
  for_each_bit(px, [&](int u) {
    int c = card(p & adj[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  VSet cand = p & ~adj[pivot];
  for_each_bit(cand, [&](int v) {
    bron_kerbosch(r | bit(v), p & adj[v], x & adj[v], adj, out);
    p &= ~bit(v);
    x |= bit(v);
  });
}

SimplicialComplex clique_complex(int m, const std::vector<VSet>& adj, std::vector<std::string> labels) {
  std::vector<VSet> cliques;
  if (m > 0) bron_kerbosch(0, full_set(m), 0, adj, cliques);
  return SimplicialComplex(m, std::move(cliques), std::move(labels));
}

Embedded strip_ghosts(const SimplicialComplex& k) {
  Embedded e = full_subcomplex(k, k.vertex_set());
  e.complex = SimplicialComplex(e.complex.m(), e.complex.maximal_faces(), e.complex.labels(), false);
  return e;
}

long euler_characteristic(const SimplicialComplex& k) {
  long chi = 0;
  auto f = k.f_vector();
  for (std::size_t i = 1; i < f.size(); ++i) chi += (i % 2 == 1) ? f[i] : -f[i];
  return chi;
}

bool is_pseudomanifold(const SimplicialComplex& k) {
  if (!k.is_pure()) return false;
  const auto& mf = k.maximal_faces();
  std::map<VSet, std::vector<std::size_t>> ridges;
  for (std::size_t i = 0; i < mf.size(); ++i) for_each_bit(mf[i], [&](int v) { ridges[mf[i] & ~bit(v)].push_back(i); });
  std::vector<std::size_t> comp(mf.size());
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (auto& [r, owners] : ridges) {
    if (owners.size() != 2) return false;
    comp[find(owners[0])] = find(owners[1]);
  }
  for (std::size_t i = 0; i < mf.size(); ++i)
    if (find(i) != find(0)) return false;
  return true;
}

VSet map_set(VSet s, const std::vector<int>& f) {
  VSet out = 0;
  for_each_bit(s, [&](int v) { out |= bit(f[v]); });
  return out;
}

namespace {

// Vertex colours refined jointly on both complexes so that colour ids are comparable.
std::pair<std::vector<long>, std::vector<long>> joint_colours(const SimplicialComplex& a, const SimplicialComplex& b) {
  const SimplicialComplex* ks[2] = {&a, &b};
  std::vector<VSet> adj[2] = {a.adjacency(), b.adjacency()};
  std::vector<std::vector<long>> col(2);
  for (int s = 0; s < 2; ++s) {
    const auto& k = *ks[s];
    col[s].resize(k.m());
    for (int v = 0; v < k.m(); ++v) {
      long inmax = static_cast<long>(kernels::count_supersets(k.maximal_faces().data(), k.maximal_faces().size(), bit(v)));
      long ghost = contains(k.vertex_set(), v) ? 0 : 1;
      col[s][v] = (ghost << 40) | (static_cast<long>(card(adj[s][v])) << 20) | inmax;
    }
  }
  std::size_t classes = 0;
  for (int round = 0; round <= a.m(); ++round) {
    std::map<std::vector<long>, long> ids;
    std::vector<std::vector<std::vector<long>>> sig(2);
    for (int s = 0; s < 2; ++s) {
      for (int v = 0; v < ks[s]->m(); ++v) {
        std::vector<long> g{col[s][v]};
        std::vector<long> nb;
        for_each_bit(adj[s][v], [&](int u) { nb.push_back(col[s][u]); });
        std::sort(nb.begin(), nb.end());
        g.insert(g.end(), nb.begin(), nb.end());
        sig[s].push_back(std::move(g));
        ids.emplace(sig[s].back(), 0);
      }
    }
    long next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (int s = 0; s < 2; ++s)
      for (int v = 0; v < ks[s]->m(); ++v) col[s][v] = ids[sig[s][v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {col[0], col[1]};
}

}  // namespace

std::optional<std::vector<int>> iso_check(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.m() != b.m() || a.maximal_faces().size() != b.maximal_faces().size()) return std::nullopt;
  if (a.f_vector() != b.f_vector()) return std::nullopt;
  const int m = a.m();
  if (m == 0) return std::vector<int>{};
  auto [ca, cb] = joint_colours(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  auto adja = a.adjacency(), adjb = b.adjacency();
  std::map<long, int> class_size;
  for (long c : ca) ++class_size[c];

  // order: greedily take the vertex with most already-ordered neighbours, then smallest class
  std::vector<int> order;
  VSet placed = 0;
  while (static_cast<int>(order.size()) < m) {
    int best = -1;
    std::tuple<int, int, int> key{};
    for (int v = 0; v < m; ++v) {
      if (contains(placed, v)) continue;
      std::tuple<int, int, int> k{-card(adja[v] & placed), class_size[ca[v]], v};
      if (best < 0 || k < key) {
        best = v;
        key = k;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;
  // maximal faces of a that become fully assigned at step i
  std::vector<std::vector<VSet>> completes(m);
  for (VSet f : a.maximal_faces()) {
    int last = -1;
    for_each_bit(f, [&](int v) { last = std::max(last, pos[v]); });
    if (last >= 0) completes[last].push_back(f);
  }

  std::vector<int> f(m, -1);
  VSet used = 0;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == m) {
      std::vector<VSet> img;
      for (VSet g : a.maximal_faces()) img.push_back(map_set(g, f));
      std::sort(img.begin(), img.end(), canonical_less);
      return img == b.maximal_faces();
    }
    int v = order[i];
    for (int u = 0; u < m; ++u) {
      if (contains(used, u) || cb[u] != ca[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int w = order[j];
        if (contains(adja[v], w) != contains(adjb[u], f[w])) ok = false;
      }
      if (!ok) continue;
      f[v] = u;
      for (VSet g : completes[i])
        if (!b.contains(map_set(g, f))) {
          ok = false;
          break;
        }
      if (ok) {
        used |= bit(u);
        if (self(self, i + 1)) return true;
        used &= ~bit(u);
      }
      f[v] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return f;
  return std::nullopt;
}

}  // namespace mac
