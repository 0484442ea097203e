#include "mac/hochster.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "mac/linalg.hpp"

namespace mac {

namespace {

// Faces of K_J grouped by cardinality, each group sorted by mask value for lookup.
struct FaceLevels {
  std::vector<std::vector<VSet>> by_size;

  FaceLevels(const SimplicialComplex& k, VSet j) {
    for (VSet f : faces_within(k, j)) {
      int s = card(f);
      if (static_cast<int>(by_size.size()) <= s) by_size.resize(s + 1);
      by_size[s].push_back(f);
    }
    for (auto& v : by_size) std::sort(v.begin(), v.end());
  }

  const std::vector<VSet>& size(int s) const {
    static const std::vector<VSet> none;
    return s < static_cast<int>(by_size.size()) ? by_size[s] : none;
  }

  long index(int s, VSet f) const {
    const auto& v = size(s);
    auto it = std::lower_bound(v.begin(), v.end(), f);
    return it != v.end() && *it == f ? it - v.begin() : -1;
  }
};

// rank of delta_q : C^q -> C^{q+1}, i.e. between faces of size q+1 and q+2
long coboundary_rank_f2(const FaceLevels& lv, int q) {
  const auto& rows = lv.size(q + 2);
  const auto& cols = lv.size(q + 1);
  if (rows.empty() || cols.empty()) return 0;
  BitMatrix a(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for_each_bit(rows[r], [&](int x) { a.set(r, lv.index(q + 1, rows[r] & ~bit(x)), true); });
  return static_cast<long>(rank_f2(a));
}

template <class F>
Matrix<F> coboundary_matrix(const FaceLevels& lv, int q) {
  const auto& rows = lv.size(q + 2);
  const auto& cols = lv.size(q + 1);
  Matrix<F> a(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int pos = 0;
    for_each_bit(rows[r], [&](int x) {
      a(r, lv.index(q + 1, rows[r] & ~bit(x))) = F(pos % 2 ? -1 : 1);
      ++pos;
    });
  }
  return a;
}

// Forward elimination only; enough for ranks.
long rank_q(Matrix<Rational> a) {
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c) / a(row, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (sgn(a(row, k)) != 0) a(i, k) -= f * a(row, k);
    }
    ++row;
  }
  return static_cast<long>(row);
}

ReducedRanks ranks_from_levels(const FaceLevels& lv, FieldTag field) {
  int top = static_cast<int>(lv.by_size.size()) - 1;  // largest face size
  ReducedRanks out;
  // delta ranks for q = -1 .. top-2
  std::vector<long> d(top + 1, 0);
  for (int q = -1; q + 2 <= top; ++q)
    d[q + 1] = field == FieldTag::F2 ? coboundary_rank_f2(lv, q) : rank_q(coboundary_matrix<Rational>(lv, q));
  for (int q = -1; q + 1 <= top; ++q) {
    long dim = static_cast<long>(lv.size(q + 1).size());
    long out_rank = d[q + 1];
    long in_rank = q >= 0 ? d[q] : 0;
    out.cochain_dims.push_back(dim);
    out.ranks.push_back(dim - out_rank - in_rank);
  }
  return out;
}

}  // namespace

ReducedRanks reduced_ranks(const SimplicialComplex& k, VSet j, FieldTag field) {
  return ranks_from_levels(FaceLevels(k, j), field);
}

template <class F>
Cochain<F> coboundary(const SimplicialComplex& k, VSet j, const Cochain<F>& c) {
  Cochain<F> out;
  if (c.empty()) return out;
  for (const auto& [s, v] : c) {
    if (is_zero(v)) continue;
    // cofaces s + x with x in J
    for_each_bit(j & ~s, [&](int x) {
      VSet t = s | bit(x);
      if (!k.contains(t)) return;
      F term = rank_in(t, x) % 2 ? F(0) - v : v;
      auto it = out.find(t);
      if (it == out.end()) out.emplace(t, term);
      else it->second += term;
    });
  }
  for (auto it = out.begin(); it != out.end();) {
    if (is_zero(it->second)) it = out.erase(it);
    else ++it;
  }
  return out;
}

template <class F>
static std::vector<F> dense(const Cochain<F>& c, const std::vector<VSet>& basis) {
  std::vector<F> v(basis.size(), F(0));
  for (const auto& [s, x] : c) {
    auto it = std::lower_bound(basis.begin(), basis.end(), s);
    if (it == basis.end() || *it != s) throw std::invalid_argument("cochain supported outside the complex");
    v[it - basis.begin()] = x;
  }
  return v;
}

template <class F>
std::vector<HochsterClass<F>> cohomology_basis(const SimplicialComplex& k, VSet j, int q) {
  FaceLevels lv(k, j);
  const auto& cols = lv.size(q + 1);
  std::vector<HochsterClass<F>> out;
  if (cols.empty()) return out;
  Matrix<F> dq = coboundary_matrix<F>(lv, q);
  std::vector<std::vector<F>> kernel;
  if (dq.rows() == 0) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::vector<F> e(cols.size(), F(0));
      e[i] = F(1);
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = nullspace(dq);
  }
  SpanBasis<F> span(cols.size());
  if (q >= 0 && !lv.size(q).empty()) {
    Matrix<F> prev = coboundary_matrix<F>(lv, q - 1);
    for (std::size_t c = 0; c < prev.cols(); ++c) {
      std::vector<F> col(prev.rows());
      for (std::size_t r = 0; r < prev.rows(); ++r) col[r] = prev(r, c);
      span.insert(std::move(col));
    }
  }
  for (auto& z : kernel) {
    if (!span.insert(z)) continue;
    HochsterClass<F> h;
    h.j = j;
    h.q = q;
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (!is_zero(z[i])) h.cocycle.emplace(cols[i], z[i]);
    out.push_back(std::move(h));
  }
  return out;
}

template <class F>
CohomologyData<F> reduced_cohomology(const SimplicialComplex& k, VSet j) {
  CohomologyData<F> d;
  d.ranks = reduced_ranks(k, j, FieldTraits<F>::tag);
  for (int q = -1; q + 1 < static_cast<int>(d.ranks.ranks.size()); ++q) {
    d.basis.push_back(cohomology_basis<F>(k, j, q));
    if (static_cast<long>(d.basis.back().size()) != d.ranks.rank(q))
      throw std::logic_error("reduced_cohomology: basis size differs from rank");
  }
  return d;
}

template <class F>
bool is_coboundary(const SimplicialComplex& k, const HochsterClass<F>& a) {
  if (!coboundary(k, a.j, a.cocycle).empty()) throw std::invalid_argument("is_coboundary: not a cocycle");
  if (a.cocycle.empty()) return true;
  FaceLevels lv(k, a.j);
  if (a.q < 0 || lv.size(a.q).empty()) return false;
  Matrix<F> prev = coboundary_matrix<F>(lv, a.q - 1);
  return solve(prev, dense(a.cocycle, lv.size(a.q + 1))).has_value();
}

template <class F>
HochsterClass<F> cup_product(const SimplicialComplex& k, const HochsterClass<F>& a, const HochsterClass<F>& b) {
  HochsterClass<F> c;
  c.j = a.j | b.j;
  c.q = a.q + b.q + 1;
  if (a.j & b.j) return c;
  for (const auto& [s, x] : a.cocycle)
    for (const auto& [t, y] : b.cocycle) {
      if (!k.contains(s | t)) continue;
      F v = x * y;
      if (shuffle_sign(s, t) < 0) v = F(0) - v;
      if (!is_zero(v)) c.cocycle[s | t] += v;
    }
  for (auto it = c.cocycle.begin(); it != c.cocycle.end();) {
    if (is_zero(it->second)) it = c.cocycle.erase(it);
    else ++it;
  }
  return c;
}

template <class F>
HochsterClass<F> unit_class() {
  HochsterClass<F> u;
  u.cocycle.emplace(0, F(1));
  return u;
}

void BettiTable::set(int p, VSet j, long rank) {
  if (rank == 0) entries_.erase({p, j});
  else entries_[{p, j}] = rank;
}

long BettiTable::at(int p, VSet j) const {
  auto it = entries_.find({p, j});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<long> BettiTable::totals() const {
  std::vector<long> t;
  for (const auto& [key, r] : entries_) {
    if (static_cast<int>(t.size()) <= key.first) t.resize(key.first + 1, 0);
    t[key.first] += r;
  }
  return t;
}

static void fill(BettiTable& t, const SimplicialComplex& k, VSet j, FieldTag field, VSet key) {
  auto r = reduced_ranks(k, j, field);
  for (int q = -1; q + 1 < static_cast<int>(r.ranks.size()); ++q)
    if (r.rank(q)) t.set(q + card(j) + 1, key, r.rank(q));
}

BettiTable betti_table(const SimplicialComplex& k, FieldTag field, int threads) {
  const VSet all = full_set(k.m());
  if (k.m() > 30) throw std::invalid_argument("betti_table: 2^m subsets is too many for m = " + std::to_string(k.m()));
  const std::uint64_t count = std::uint64_t{1} << k.m();
  int t = std::max(1, threads);
  std::vector<BettiTable> parts(t, BettiTable(k.m()));
  auto run = [&](int w) {
    for (std::uint64_t j = w; j < count; j += t) fill(parts[w], k, j & all, field, j);
  };
  if (t == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  BettiTable out(k.m());
  for (auto& p : parts)
    for (const auto& [key, r] : p.entries()) out.set(key.first, key.second, r);
  return out;
}

BettiTable betti_table_within(const SimplicialComplex& k, VSet j, FieldTag field) {
  BettiTable out(k.m());
  for_each_subset(j, [&](VSet s) { fill(out, k, s, field, s); });
  return out;
}

SummandReport is_direct_summand_witness(const SimplicialComplex& k, VSet j, FieldTag field) {
  SummandReport rep;
  Embedded e = full_subcomplex(k, j);
  BettiTable amb = betti_table_within(k, j, field);
  rep.ambient = BettiTable(e.complex.m());
  for (const auto& [key, r] : amb.entries()) rep.ambient.set(key.first, e.lower(key.second), r);
  rep.sub = betti_table(e.complex, field);
  rep.entries_compared = static_cast<long>(std::max(rep.ambient.entries().size(), rep.sub.entries().size()));
  rep.equal = rep.ambient == rep.sub;
  return rep;
}

#define MAC_INSTANTIATE(F)                                                                                    \
  template Cochain<F> coboundary<F>(const SimplicialComplex&, VSet, const Cochain<F>&);                      \
  template std::vector<HochsterClass<F>> cohomology_basis<F>(const SimplicialComplex&, VSet, int);             \
  template CohomologyData<F> reduced_cohomology<F>(const SimplicialComplex&, VSet);                            \
  template bool is_coboundary<F>(const SimplicialComplex&, const HochsterClass<F>&);                          \
  template HochsterClass<F> cup_product<F>(const SimplicialComplex&, const HochsterClass<F>&,                 \
                                           const HochsterClass<F>&);                                          \
  template HochsterClass<F> unit_class<F>();

MAC_INSTANTIATE(Gf2)
MAC_INSTANTIATE(Rational)

}  // namespace mac
