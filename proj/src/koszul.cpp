#include "mac/koszul.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mac {

std::string to_string(const Monomial& x) {
  std::string s;
  for_each_bit(x.u, [&](int i) { s += (s.empty() ? "" : " ") + ("u" + std::to_string(i + 1)); });
  for_each_bit(x.v, [&](int i) { s += (s.empty() ? "" : " ") + ("v" + std::to_string(i + 1)); });
  return s.empty() ? "1" : s;
}

template <class F>
bool KoszulElement<F>::homogeneous() const {
  if (terms_.empty()) return true;
  const Monomial& f = terms_.begin()->first;
  for (const auto& [x, c] : terms_)
    if (x.multidegree() != f.multidegree() || x.total_degree() != f.total_degree()) return false;
  return true;
}

template <class F>
VSet KoszulElement<F>::multidegree() const {
  VSet t = 0;
  for (const auto& [x, c] : terms_) t |= x.multidegree();
  return t;
}

template <class F>
int KoszulElement<F>::total_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.total_degree();
}

template <class F>
long Component<F>::index(int s, const Monomial& x) const {
  if (s < 0 || s >= static_cast<int>(levels.size())) return -1;
  const auto& l = levels[s];
  auto it = std::lower_bound(l.begin(), l.end(), x);
  return it != l.end() && *it == x ? it - l.begin() : -1;
}

template <class F>
std::vector<F> Component<F>::coordinates(int s, const KoszulElement<F>& x) const {
  std::vector<F> c(dim(s), F(0));
  for (const auto& [mono, coef] : x.terms()) {
    long i = index(s, mono);
    if (i < 0) throw std::invalid_argument("element has a term outside component level");
    c[i] = coef;
  }
  return c;
}

template <class F>
KoszulElement<F> Component<F>::element(int s, const std::vector<F>& coords) const {
  KoszulElement<F> x;
  for (std::size_t i = 0; i < coords.size(); ++i) x.add(levels[s][i], coords[i]);
  return x;
}

template <class F>
Koszul<F>::Koszul(SimplicialComplex k) : k_(std::move(k)) {}

template <class F>
KoszulElement<F> Koszul<F>::differential(const KoszulElement<F>& x) const {
  KoszulElement<F> out;
  for (const auto& [mono, c] : x.terms()) {
    for_each_bit(mono.u, [&](int j) {
      VSet sigma = mono.v | bit(j);
      if (!k_.contains(sigma)) return;
      F coef = rank_in(mono.u, j) % 2 ? F(0) - c : c;
      out.add(Monomial{mono.u & ~bit(j), sigma}, coef);
    });
  }
  return out;
}

template <class F>
KoszulElement<F> Koszul<F>::multiply(const KoszulElement<F>& x, const KoszulElement<F>& y) const {
  KoszulElement<F> out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      if (a.multidegree() & b.multidegree()) continue;
      VSet sigma = a.v | b.v;
      if (!k_.contains(sigma)) continue;
      F c = ca * cb;
      if (shuffle_sign(a.u, b.u) < 0) c = F(0) - c;
      out.add(Monomial{a.u | b.u, sigma}, c);
    }
  return out;
}

template <class F>
std::shared_ptr<const Component<F>> Koszul<F>::component(VSet t) const {
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
  }
  if (!subset_of(t, full_set(k_.m()))) throw std::invalid_argument("multidegree outside the vertex set");
  auto c = std::make_shared<Component<F>>();
  c->t = t;
  for (VSet sigma : faces_within(k_, t)) {
    int s = card(sigma);
    if (static_cast<int>(c->levels.size()) <= s) c->levels.resize(s + 1);
    c->levels[s].push_back(Monomial{t & ~sigma, sigma});
  }
  for (auto& l : c->levels) std::sort(l.begin(), l.end());
  for (std::size_t s = 0; s < c->levels.size(); ++s) {
    std::size_t rows = s + 1 < c->levels.size() ? c->levels[s + 1].size() : 0;
    Matrix<F> d(rows, c->levels[s].size());
    if (rows)
      for (std::size_t col = 0; col < c->levels[s].size(); ++col) {
        const Monomial& x = c->levels[s][col];
        for_each_bit(x.u, [&](int j) {
          Monomial y{x.u & ~bit(j), x.v | bit(j)};
          long r = c->index(static_cast<int>(s) + 1, y);
          if (r >= 0) d(r, col) = F(rank_in(x.u, j) % 2 ? -1 : 1);
        });
      }
    c->d.push_back(std::move(d));
  }
  std::unique_lock lock(mu_);
  auto [it, fresh] = cache_.emplace(t, std::move(c));
  return it->second;
}

template <class F>
ComponentCohomology<F> Koszul<F>::cohomology(VSet t, int i) const {
  ComponentCohomology<F> out;
  out.t = t;
  out.i = i;
  auto c = component(t);
  int s = card(t) - i;
  if (s < 0 || c->dim(s) == 0) return out;
  out.cochain_dim = static_cast<long>(c->dim(s));
  auto z = cocycles(t, s);
  SpanBasis<F> span(c->dim(s));
  if (s >= 1 && c->dim(s - 1) > 0) {
    const Matrix<F>& prev = c->d[s - 1];
    for (std::size_t col = 0; col < prev.cols(); ++col) {
      std::vector<F> v(prev.rows());
      for (std::size_t r = 0; r < prev.rows(); ++r) v[r] = prev(r, col);
      span.insert(std::move(v));
    }
  }
  for (auto& e : z)
    if (span.insert(c->coordinates(s, e))) out.representatives.push_back(e);
  out.dimension = static_cast<long>(out.representatives.size());
  return out;
}

template <class F>
ComponentCohomology<F> Koszul<F>::cohomology(const std::vector<int>& a, int i) const {
  VSet t = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != 0 && a[j] != 1) {
      ComponentCohomology<F> zero;
      zero.i = i;
      return zero;
    }
    if (a[j]) t |= bit(static_cast<int>(j));
  }
  return cohomology(t, i);
}

template <class F>
std::vector<KoszulElement<F>> Koszul<F>::cocycles(VSet t, int s) const {
  auto c = component(t);
  std::vector<KoszulElement<F>> out;
  if (c->dim(s) == 0) return out;
  const Matrix<F>& d = c->d[s];
  std::vector<std::vector<F>> basis;
  if (d.rows() == 0) {
    for (std::size_t i = 0; i < c->dim(s); ++i) {
      std::vector<F> e(c->dim(s), F(0));
      e[i] = F(1);
      basis.push_back(std::move(e));
    }
  } else {
    basis = nullspace(d);
  }
  for (const auto& b : basis) out.push_back(c->element(s, b));
  return out;
}

template <class F>
std::optional<KoszulElement<F>> Koszul<F>::solve_in(VSet t, int s, const KoszulElement<F>& x) const {
  if (x.is_zero()) return KoszulElement<F>();
  if (s < 1) return std::nullopt;
  auto c = component(t);
  if (c->dim(s - 1) == 0) return std::nullopt;
  auto y = solve(c->d[s - 1], c->coordinates(s, x));
  if (!y) return std::nullopt;
  return c->element(s - 1, *y);
}

template <class F>
std::optional<KoszulElement<F>> Koszul<F>::is_coboundary(const KoszulElement<F>& x) const {
  if (!is_cocycle(x)) throw std::invalid_argument("is_coboundary: element is not a cocycle");
  std::map<std::pair<VSet, int>, KoszulElement<F>> parts;
  for (const auto& [mono, c] : x.terms()) parts[{mono.multidegree(), card(mono.v)}].add(mono, c);
  KoszulElement<F> y;
  for (const auto& [key, part] : parts) {
    auto p = solve_in(key.first, key.second, part);
    if (!p) return std::nullopt;
    y += *p;
  }
  return y;
}

template <class F>
long Koszul<F>::total_dimension() const {
  long total = 0;
  for (VSet s : k_.faces()) total += 1L << (k_.m() - card(s));
  return total;
}

template <class F>
KoszulElement<F> Koszul<F>::from_hochster(const HochsterClass<F>& h) const {
  KoszulElement<F> x;
  for (const auto& [sigma, c] : h.cocycle) {
    int e = 0;
    for_each_bit(sigma, [&](int s) { e += rank_in(h.j, s); });
    x.add(Monomial{h.j & ~sigma, sigma}, e % 2 ? F(0) - c : c);
  }
  return x;
}

template <class F>
HochsterClass<F> Koszul<F>::to_hochster(const KoszulElement<F>& x) const {
  HochsterClass<F> h;
  if (x.is_zero()) return h;
  h.j = x.terms().begin()->first.multidegree();
  h.q = card(x.terms().begin()->first.v) - 1;
  for (const auto& [mono, c] : x.terms()) {
    if (mono.multidegree() != h.j || card(mono.v) - 1 != h.q)
      throw std::invalid_argument("to_hochster: element is not homogeneous");
    int e = 0;
    for_each_bit(mono.v, [&](int s) { e += rank_in(h.j, s); });
    h.cocycle.emplace(mono.v, e % 2 ? F(0) - c : c);
  }
  return h;
}

template <class F>
KoszulElement<F> Koszul<F>::parse_monomial(const std::string& s) const {
  std::istringstream in(s);
  std::string tok;
  KoszulElement<F> x(Monomial{0, 0});
  bool first = true;
  while (in >> tok) {
    if (tok == "*") continue;
    char g = static_cast<char>(std::tolower(tok[0]));
    if (g == 'u' || g == 'v') {
      int idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoi(tok.substr(1), &used);
        if (used + 1 != tok.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad generator '" + tok + "'");
      }
      if (idx < 1 || idx > k_.m()) throw std::invalid_argument("generator index out of range in '" + tok + "'");
      Monomial gen = g == 'u' ? Monomial{bit(idx - 1), 0} : Monomial{0, bit(idx - 1)};
      if (g == 'v' && !k_.contains(bit(idx - 1))) {
        x = KoszulElement<F>();
      } else {
        x = multiply(x, KoszulElement<F>(gen));
      }
    } else if (first) {
      x = x.scaled(FieldTraits<F>::parse(tok));
    } else {
      throw std::invalid_argument("unexpected token '" + tok + "' in monomial");
    }
    first = false;
  }
  return x;
}

template class KoszulElement<Gf2>;
template class KoszulElement<Rational>;
template struct Component<Gf2>;
template struct Component<Rational>;
template class Koszul<Gf2>;
template class Koszul<Rational>;

}  // namespace mac
