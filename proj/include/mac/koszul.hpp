#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "mac/field.hpp"
#include "mac/hochster.hpp"
#include "mac/linalg.hpp"
#include "mac/simplicial_complex.hpp"

namespace mac {

// u_J v_sigma with J and sigma disjoint, sigma a face.
struct Monomial {
  VSet u = 0;
  VSet v = 0;
  VSet multidegree() const { return u | v; }
  int total_degree() const { return card(u) + 2 * card(v); }
  int homological() const { return -card(u); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (card(a.u) != card(b.u)) return card(a.u) < card(b.u);
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.u == b.u && a.v == b.v; }
};

std::string to_string(const Monomial& x);

template <class F>
class KoszulElement {
 public:
  using Terms = std::map<Monomial, F>;
  KoszulElement() = default;
  explicit KoszulElement(Monomial x, F c = F(1)) { add(x, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  F coefficient(const Monomial& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add(const Monomial& x, const F& c) {
    if (mac::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(x, c);
    if (!fresh) {
      it->second += c;
      if (mac::is_zero(it->second)) terms_.erase(it);
    }
  }
  KoszulElement& operator+=(const KoszulElement& o) {
    for (const auto& [x, c] : o.terms_) add(x, c);
    return *this;
  }
  KoszulElement& operator-=(const KoszulElement& o) {
    for (const auto& [x, c] : o.terms_) add(x, F(0) - c);
    return *this;
  }
  friend KoszulElement operator+(KoszulElement a, const KoszulElement& b) { return a += b; }
  friend KoszulElement operator-(KoszulElement a, const KoszulElement& b) { return a -= b; }
  KoszulElement scaled(const F& s) const {
    KoszulElement r;
    if (mac::is_zero(s)) return r;
    for (const auto& [x, c] : terms_) r.terms_.emplace(x, c * s);
    return r;
  }
  KoszulElement operator-() const { return scaled(F(-1)); }
  friend bool operator==(const KoszulElement& a, const KoszulElement& b) { return a.terms_ == b.terms_; }

  // (-1)^{deg} applied to each homogeneous part
  KoszulElement bar() const {
    KoszulElement r;
    for (const auto& [x, c] : terms_) r.terms_.emplace(x, x.total_degree() % 2 ? F(0) - c : c);
    return r;
  }

  // All monomials share one multidegree and one total degree.
  bool homogeneous() const;
  VSet multidegree() const;  // union over terms
  int total_degree() const;  // of the first term; -1 when zero

 private:
  Terms terms_;
};

// One multidegree T of R(K): level s holds the monomials u_{T\sigma} v_sigma with |sigma| = s.
template <class F>
struct Component {
  VSet t = 0;
  std::vector<std::vector<Monomial>> levels;
  std::vector<Matrix<F>> d;  // d[s]: level s -> level s+1

  long index(int s, const Monomial& x) const;
  std::vector<F> coordinates(int s, const KoszulElement<F>& x) const;
  KoszulElement<F> element(int s, const std::vector<F>& coords) const;
  std::size_t dim(int s) const { return s >= 0 && s < static_cast<int>(levels.size()) ? levels[s].size() : 0; }
};

template <class F>
struct ComponentCohomology {
  VSet t = 0;
  int i = 0;              // number of u's; bidegree (-i, 2|T|)
  long dimension = 0;
  std::vector<KoszulElement<F>> representatives;
  long cochain_dim = 0;
};

template <class F>
class Koszul {
 public:
  explicit Koszul(SimplicialComplex k);

  const SimplicialComplex& complex() const { return k_; }

  KoszulElement<F> differential(const KoszulElement<F>& x) const;
  KoszulElement<F> multiply(const KoszulElement<F>& x, const KoszulElement<F>& y) const;
  bool is_cocycle(const KoszulElement<F>& x) const { return differential(x).is_zero(); }

  // Cached per multidegree; concurrent readers, exclusive insert.
  std::shared_ptr<const Component<F>> component(VSet t) const;

  ComponentCohomology<F> cohomology(VSet t, int i) const;
  // Multidegree given as an integer vector; zero unless it is a 0/1 vector.
  ComponentCohomology<F> cohomology(const std::vector<int>& a, int i) const;

  // y with d y = x, or nothing; x must be a cocycle.
  std::optional<KoszulElement<F>> is_coboundary(const KoszulElement<F>& x) const;

  // Basis of the cocycles with multidegree t and |sigma| = s.
  std::vector<KoszulElement<F>> cocycles(VSet t, int s) const;

  // y with d y = x inside the homogeneous part of x, plus nothing if none exists.
  std::optional<KoszulElement<F>> solve_in(VSet t, int s, const KoszulElement<F>& x) const;

  // Sum of 2^{m-|sigma|} over faces.
  long total_dimension() const;

  KoszulElement<F> from_hochster(const HochsterClass<F>& h) const;
  HochsterClass<F> to_hochster(const KoszulElement<F>& x) const;

  // Parses "v1 u4" style products of generators (1-based) with an optional leading coefficient.
  KoszulElement<F> parse_monomial(const std::string& s) const;

 private:
  SimplicialComplex k_;
  mutable std::shared_mutex mu_;
  mutable std::map<VSet, std::shared_ptr<const Component<F>>> cache_;
};

}  // namespace mac
