#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mac/koszul.hpp"

namespace mac {

// Upper-triangular C with c_{i,i+1} = a_i; indices are 0-based, c(0,k) is never stored.
template <class F>
struct DefiningSystem {
  int k = 0;
  std::vector<KoszulElement<F>> reps;
  std::map<std::pair<int, int>, KoszulElement<F>> c;

  KoszulElement<F> entry(int i, int j) const {
    if (j == i + 1) return reps[i];
    auto it = c.find({i, j});
    return it == c.end() ? KoszulElement<F>() : it->second;
  }
};

enum class Verdict { NotDefined, Trivial, Nontrivial, Undecided };
const char* verdict_name(Verdict v);

enum class Strategy { Exhaustive, Sampled, Coset };
const char* strategy_name(Strategy s);
Strategy parse_strategy(const std::string& s);

struct SearchOptions {
  Strategy strategy = Strategy::Exhaustive;
  std::uint64_t seed = 1;
  long budget = 1'000'000;   // leaves for exhaustive, attempts for sampled
  double time_limit = 600;   // seconds
};

template <class F>
struct MasseyReport {
  bool defined = false;
  std::optional<DefiningSystem<F>> witness;  // vanishing system when trivial, else the first system found
  KoszulElement<F> value;                    // a(C) of the witness
  bool value_is_coboundary = false;
  Verdict verdict = Verdict::NotDefined;
  Strategy strategy = Strategy::Exhaustive;
  std::string note;
  int k = 0;
  VSet multidegree = 0;
  int degree = 0;
  long systems = 0;  // complete systems evaluated
  long nodes = 0;    // partial choices visited
  long indeterminacy_dim = -1;  // coset rule only
  bool complete = false;        // search covered every system
  std::uint64_t seed = 0;
};

// Checks that each rep is a homogeneous cocycle; throws otherwise.
template <class F>
void check_classes(const Koszul<F>& r, const std::vector<KoszulElement<F>>& reps);

// First system in deterministic order; over Q choices range over {0, 1, -1} combinations.
template <class F>
std::optional<DefiningSystem<F>> find_defining_system(const Koszul<F>& r, const std::vector<KoszulElement<F>>& reps);

// a(C) = -(C-bar C)_{1,k+1}; throws std::logic_error if it is not a cocycle of the expected degree.
template <class F>
KoszulElement<F> massey_value(const Koszul<F>& r, const DefiningSystem<F>& sys);

// Complete decision for k = 3 over either field.
template <class F>
MasseyReport<F> triple_massey(const Koszul<F>& r, const std::vector<KoszulElement<F>>& reps);

template <class F>
MasseyReport<F> massey_nontrivial(const Koszul<F>& r, const std::vector<KoszulElement<F>>& reps,
                                  const SearchOptions& opt = {});

// Representatives v_i u_{n+i}, i = 1..n.
template <class F>
std::vector<KoszulElement<F>> qn_default_classes(int n);

// Parses "v1 u4; v2 u5" into elements.
template <class F>
std::vector<KoszulElement<F>> parse_classes(const Koszul<F>& r, const std::string& s);

}  // namespace mac
