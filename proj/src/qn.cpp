#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "mac/polytope.hpp"

namespace mac {

std::vector<Cut> qn_cuts(int n) {
  std::vector<Cut> out;
  for (int i = 1; i <= n - 2; ++i)
    for (int k = 1; k <= n - i; ++k) out.push_back({k, k + i});
  return out;
}

std::vector<Cut> qn_truncation_order(int n) {
  auto cuts = qn_cuts(n);
  auto key = [n](Cut c) { return c.l < n ? std::pair{c.l + 1, c.k} : std::pair{c.k + 1, INT_MAX}; };
  std::sort(cuts.begin(), cuts.end(), [&](Cut a, Cut b) { return key(a) < key(b); });
  return cuts;
}

int qn_cut_vertex(int n, Cut c) {
  auto cuts = qn_cuts(n);
  auto it = std::find(cuts.begin(), cuts.end(), c);
  if (it == cuts.end()) throw std::invalid_argument("not a cut of Q^" + std::to_string(n));
  return 2 * n + static_cast<int>(it - cuts.begin());
}

std::string qn_cut_label(int n, Cut c) { return "w" + std::to_string(c.k) + "," + std::to_string(n + c.l); }

std::vector<VSet> qn_generators(int n) {
  if (n <= 0) return {};
  auto cuts = qn_cuts(n);
  auto order = qn_truncation_order(n);
  // depth of the cut at position t of the order is 3^{-t}; scaled to integers
  std::map<std::pair<int, int>, mpz_class> depth;
  for (std::size_t t = 0; t < order.size(); ++t) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 3, order.size() - t);
    depth[{order[t].k, order[t].l}] = d;
  }
  auto dep = [&](int k, int l) -> mpz_class {
    auto it = depth.find({k, l});
    return it == depth.end() ? mpz_class(0) : it->second;
  };
  auto x0 = [](int j) { return j - 1; };      // facet x_j = 0
  auto x1 = [n](int j) { return n + j - 1; };  // facet x_j = 1
  auto w = [&](Cut c) { return qn_cut_vertex(n, c); };

  std::vector<VSet> gens;
  auto add = [&](int a, int b) { gens.push_back(bit(a) | bit(b)); };
  for (int j = 1; j <= n; ++j) add(x0(j), x1(j));
  for (Cut c : cuts) add(x0(c.k), x1(c.l));
  for (Cut c : cuts) {
    mpz_class own = dep(c.k, c.l);
    for (int j = 1; j <= n; ++j) {
      if (j == c.l || dep(j, c.l) > own) add(w(c), x0(j));
      if (j == c.k || dep(c.k, j) > own) add(w(c), x1(j));
    }
  }
  for (std::size_t a = 0; a < cuts.size(); ++a) {
    for (std::size_t b = a + 1; b < cuts.size(); ++b) {
      Cut c = cuts[a], e = cuts[b];
      bool disjoint = c.k == e.l || e.k == c.l ||
                      dep(c.k, e.l) + dep(e.k, c.l) > dep(c.k, c.l) + dep(e.k, e.l);
      if (disjoint) add(w(c), w(e));
    }
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

CombPolytope gen_qn(int n) {
  if (n < 0) throw std::invalid_argument("gen_qn: n must be nonnegative");
  if (n == 0) return CombPolytope(0, SimplicialComplex());
  auto cuts = qn_cuts(n);
  int m = 2 * n + static_cast<int>(cuts.size());
  if (m > kMaxVertices) throw std::invalid_argument("gen_qn: too many facets for n = " + std::to_string(n));
  std::vector<VSet> adj(m, full_set(m));
  for (int v = 0; v < m; ++v) adj[v] &= ~bit(v);
  for (VSet g : qn_generators(n)) {
    int a = lowest(g), b = highest(g);
    adj[a] &= ~bit(b);
    adj[b] &= ~bit(a);
  }
  std::vector<std::string> labels;
  for (int j = 1; j <= 2 * n; ++j) labels.push_back("v" + std::to_string(j));
  for (Cut c : cuts) labels.push_back(qn_cut_label(n, c));
  return CombPolytope(n, clique_complex(m, adj, std::move(labels)));
}

}  // namespace mac
