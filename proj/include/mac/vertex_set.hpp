#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mac {

// Subset of [m] as a bitmask; bit i is vertex i+1.
using VSet = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int card(VSet s) { return std::popcount(s); }
inline bool contains(VSet s, int v) { return (s >> v) & 1u; }
inline bool subset_of(VSet a, VSet b) { return (a & ~b) == 0; }
inline VSet bit(int v) { return VSet{1} << v; }
inline VSet full_set(int m) { return m >= 64 ? ~VSet{0} : (VSet{1} << m) - 1; }
inline int lowest(VSet s) { return std::countr_zero(s); }
inline int highest(VSet s) { return 63 - std::countl_zero(s); }

// Position of v among the elements of s below it.
inline int rank_in(VSet s, int v) { return std::popcount(s & (bit(v) - 1)); }

template <class Fn>
inline void for_each_bit(VSet s, Fn&& fn) {
  while (s) {
    int v = std::countr_zero(s);
    fn(v);
    s &= s - 1;
  }
}

inline std::vector<int> elements(VSet s) {
  std::vector<int> out;
  for_each_bit(s, [&](int v) { out.push_back(v); });
  return out;
}

// 1-based list, as used in every file format.
inline std::vector<int> to_one_based(VSet s) {
  std::vector<int> out;
  for_each_bit(s, [&](int v) { out.push_back(v + 1); });
  return out;
}

inline VSet from_one_based(const std::vector<int>& vs, int m) {
  VSet s = 0;
  for (int v : vs) {
    if (v < 1 || v > m) throw std::out_of_range("vertex " + std::to_string(v) + " outside [1," + std::to_string(m) + "]");
    s |= bit(v - 1);
  }
  return s;
}

// Canonical order: by size, then by the sorted vertex list.
inline bool canonical_less(VSet a, VSet b) {
  int ca = card(a), cb = card(b);
  if (ca != cb) return ca < cb;
  while (a && b) {
    int x = lowest(a), y = lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

// Bitstring with vertex 1 first.
inline std::string to_bitstring(VSet s, int m) {
  std::string out(m, '0');
  for (int i = 0; i < m; ++i)
    if (contains(s, i)) out[i] = '1';
  return out;
}

// Sign of the permutation sorting the concatenation (a, b) with a, b disjoint.
inline int shuffle_sign(VSet a, VSet b) {
  int inv = 0;
  for_each_bit(b, [&](int v) { inv += card(a >> v) - contains(a, v); });
  return (inv & 1) ? -1 : 1;
}

template <class Fn>
inline void for_each_subset(VSet s, Fn&& fn) {
  VSet t = 0;
  while (true) {
    fn(t);
    if (t == s) break;
    t = (t - s) & s;
  }
}

}  // namespace mac
