#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mac/field.hpp"
#include "mac/simplicial_complex.hpp"

namespace mac {

// ranks[q+1] = dim H~^q(K_J), q = -1, 0, 1, ...
struct ReducedRanks {
  std::vector<long> ranks;
  std::vector<long> cochain_dims;  // dim C^q, same indexing
  long rank(int q) const {
    return q + 1 >= 0 && q + 1 < static_cast<int>(ranks.size()) ? ranks[q + 1] : 0;
  }
};

// Reduced cohomology ranks of K_J (faces of K inside J), exact over the field.
ReducedRanks reduced_ranks(const SimplicialComplex& k, VSet j, FieldTag field);
inline ReducedRanks reduced_ranks(const SimplicialComplex& k, FieldTag field) {
  return reduced_ranks(k, full_set(k.m()), field);
}

// Sparse cochain on simplices of K_J, keyed by the simplex in ambient labels.
template <class F>
using Cochain = std::map<VSet, F>;

template <class F>
struct HochsterClass {
  VSet j = 0;
  int q = -1;  // simplicial degree; Z_K degree is q + |J| + 1
  Cochain<F> cocycle;
  int degree() const { return q + card(j) + 1; }
};

template <class F>
Cochain<F> coboundary(const SimplicialComplex& k, VSet j, const Cochain<F>& c);

// Basis cocycles of H~^q(K_J).
template <class F>
std::vector<HochsterClass<F>> cohomology_basis(const SimplicialComplex& k, VSet j, int q);

template <class F>
struct CohomologyData {
  ReducedRanks ranks;
  std::vector<std::vector<HochsterClass<F>>> basis;  // by q+1
};

template <class F>
CohomologyData<F> reduced_cohomology(const SimplicialComplex& k, VSet j);

template <class F>
bool is_coboundary(const SimplicialComplex& k, const HochsterClass<F>& a);

// Zero if the supports meet; otherwise the join-shifted cochain restricted to K_{J1 u J2}.
template <class F>
HochsterClass<F> cup_product(const SimplicialComplex& k, const HochsterClass<F>& a, const HochsterClass<F>& b);

template <class F>
HochsterClass<F> unit_class();

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int m) : m_(m) {}
  int m() const { return m_; }
  void set(int p, VSet j, long rank);
  long at(int p, VSet j) const;
  // rank of Tor^{-i,2J} = H~^{|J|-i-1}(K_J)
  long bigraded(int i, VSet j) const { return at(card(j) - i - 1 + card(j) + 1, j); }
  // sum over J at fixed p, indexed 0..max p
  std::vector<long> totals() const;
  const std::map<std::pair<int, VSet>, long>& entries() const { return entries_; }
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.m_ == b.m_ && a.entries_ == b.entries_; }

 private:
  int m_ = 0;
  std::map<std::pair<int, VSet>, long> entries_;  // (p, J) -> rank, zeros omitted
};

BettiTable betti_table(const SimplicialComplex& k, FieldTag field, int threads = 1);
// Entries for J' inside the given set only.
BettiTable betti_table_within(const SimplicialComplex& k, VSet j, FieldTag field);

struct SummandReport {
  bool equal = false;
  long entries_compared = 0;
  BettiTable ambient;  // entries of K supported in J, re-indexed to K_J
  BettiTable sub;      // table of the full subcomplex
};

SummandReport is_direct_summand_witness(const SimplicialComplex& k, VSet j, FieldTag field);

}  // namespace mac
