#include "mac/massey.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mac {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NotDefined: return "not-defined";
    case Verdict::Trivial: return "trivial";
    case Verdict::Nontrivial: return "nontrivial";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Exhaustive: return "exhaustive";
    case Strategy::Sampled: return "sampled";
    case Strategy::Coset: return "coset";
  }
  return "?";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "exhaustive") return Strategy::Exhaustive;
  if (s == "sampled") return Strategy::Sampled;
  if (s == "coset") return Strategy::Coset;
  throw std::invalid_argument("unknown strategy '" + s + "' (expected exhaustive, sampled or coset)");
}

template <class F>
void check_classes(const Koszul<F>& r, const std::vector<KoszulElement<F>>& reps) {
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!reps[i].homogeneous())
      throw std::invalid_argument("class " + std::to_string(i + 1) + " is not homogeneous");
    if (!r.is_cocycle(reps[i]))
      throw std::invalid_argument("class " + std::to_string(i + 1) + " is not a cocycle");
  }
}

namespace {

template <class F>
struct Slot {
  int i = 0, j = 0;
  bool zero = false;  // supports overlap: the component vanishes
  VSet t = 0;
  int level = 0;      // |sigma| of c_{i,j}
  KoszulElement<F> particular;
  std::vector<KoszulElement<F>> cocycles;
};

template <class F>
class Search {
 public:
  Search(const Koszul<F>& r, const std::vector<KoszulElement<F>>& reps) : r_(r), sys_() {
    check_classes(r, reps);
    sys_.k = static_cast<int>(reps.size());
    sys_.reps = reps;
    int k = sys_.k;
    for (int len = 2; len <= k; ++len)
      for (int i = 0; i + len <= k; ++i)
        if (!(i == 0 && i + len == k)) order_.push_back({i, i + len});
    for (const auto& a : reps) {
      deg_.push_back(a.is_zero() ? 0 : a.total_degree());
      md_.push_back(a.multidegree());
    }
  }

  DefiningSystem<F>& system() { return sys_; }
  int k() const { return sys_.k; }
  std::size_t slots() const { return order_.size(); }

  // Degree and multidegree of c_{i,j}; nullopt multidegree when supports overlap.
  int degree(int i, int j) const {
    int d = 0;
    for (int t = i; t < j; ++t) d += deg_[t];
    return d - (j - i) + 1;
  }
  std::optional<VSet> range(int i, int j) const {
    VSet t = 0;
    for (int s = i; s < j; ++s) {
      if (t & md_[s]) return std::nullopt;
      t |= md_[s];
    }
    return t;
  }

  KoszulElement<F> obstruction(int i, int j) const {
    KoszulElement<F> w;
    for (int t = i + 1; t < j; ++t) w += r_.multiply(sys_.entry(i, t).bar(), sys_.entry(t, j));
    return w;
  }

  // Particular solution and cocycle space for the slot, or nothing when d c = w is unsolvable.
  std::optional<Slot<F>> prepare(std::size_t idx) const {
    auto [i, j] = order_[idx];
    Slot<F> s;
    s.i = i;
    s.j = j;
    KoszulElement<F> w = obstruction(i, j);
    if (!r_.is_cocycle(w)) throw std::logic_error("defining system obstruction is not a cocycle");
    auto t = range(i, j);
    if (!t) {
      if (!w.is_zero()) throw std::logic_error("nonzero obstruction in a vanishing component");
      s.zero = true;
      return s;
    }
    s.t = *t;
    s.level = degree(i, j) - card(*t);
    if (!w.is_zero()) {
      auto p = r_.solve_in(*t, s.level + 1, w);
      if (!p) return std::nullopt;
      s.particular = std::move(*p);
    }
    if (s.level >= 0) s.cocycles = r_.cocycles(*t, s.level);
    return s;
  }

  KoszulElement<F> value() const { return massey_value(r_, sys_); }

  const std::vector<std::pair<int, int>>& order() const { return order_; }

 private:
  const Koszul<F>& r_;
  DefiningSystem<F> sys_;
  std::vector<std::pair<int, int>> order_;
  std::vector<int> deg_;
  std::vector<VSet> md_;
};

// Coefficient digit for enumeration: F2 uses {0,1}, Q uses {0,1,-1}.
template <class F>
constexpr int kBase = FieldTraits<F>::tag == FieldTag::F2 ? 2 : 3;

template <class F>
F digit_value(int d) {
  return d == 0 ? F(0) : d == 1 ? F(1) : F(-1);
}

template <class F>
KoszulElement<F> combine(const Slot<F>& s, const std::vector<int>& digits) {
  KoszulElement<F> c = s.particular;
  for (std::size_t t = 0; t < digits.size(); ++t)
    if (digits[t]) c += s.cocycles[t].scaled(digit_value<F>(digits[t]));
  return c;
}

// Advances a base-b counter; false once it wraps.
bool next_digits(std::vector<int>& d, int base) {
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (++d[t] < base) return true;
    d[t] = 0;
  }
  return false;
}

using Clock = std::chrono::steady_clock;

template <class F>
struct Walk {
  Walk(Search<F>& s, long b, double limit) : search(s), budget(b), time_limit(limit) {}
  Search<F>& search;
  long budget;
  double time_limit;
  Clock::time_point start = Clock::now();
  long leaves = 0;
  long nodes = 0;
  bool exhausted = false;  // budget or time ran out
  // Called at each complete system; returning true stops the walk.
  std::function<bool()> on_leaf;

  bool out_of_budget() {
    if (leaves >= budget) return true;
    if ((nodes & 255) == 0) {
      double el = std::chrono::duration<double>(Clock::now() - start).count();
      if (el > time_limit) return true;
    }
    return false;
  }

  // Deterministic enumeration; true if stopped by on_leaf.
  bool run(std::size_t idx) {
    if (idx == search.slots()) {
      ++leaves;
      return on_leaf();
    }
    auto slot = search.prepare(idx);
    if (!slot) return false;
    auto key = search.order()[idx];
    std::vector<int> digits(slot->cocycles.size(), 0);
    do {
      if (out_of_budget()) {
        exhausted = true;
        return false;
      }
      ++nodes;
      search.system().c[key] = combine(*slot, digits);
      if (run(idx + 1)) return true;
      if (exhausted) return false;
    } while (next_digits(digits, kBase<F>));
    search.system().c.erase(key);
    return false;
  }
};

template <class F>
bool value_is_coboundary(const Koszul<F>& r, const KoszulElement<F>& a) {
  return a.is_zero() || r.is_coboundary(a).has_value();
}

template <class F>
void fill_degrees(MasseyReport<F>& rep, const Search<F>& s) {
  rep.k = s.k();
  auto t = s.range(0, s.k());
  rep.multidegree = t.value_or(0);
  rep.degree = s.degree(0, s.k()) + 1;
}

}  // namespace

template <class F>
KoszulElement<F> massey_value(const Koszul<F>& r, const DefiningSystem<F>& sys) {
  int k = sys.k;
  KoszulElement<F> w;
  for (int t = 1; t < k; ++t) w += r.multiply(sys.entry(0, t).bar(), sys.entry(t, k));
  KoszulElement<F> a = -w;
  if (!r.is_cocycle(a)) throw std::logic_error("Massey value is not a cocycle");
  if (!a.is_zero()) {
    int expected = 0;
    for (const auto& x : sys.reps) expected += x.total_degree();
    expected += 2 - k;
    if (!a.homogeneous() || a.total_degree() != expected)
      throw std::logic_error("Massey value has degree " + std::to_string(a.total_degree()) + ", expected " +
                             std::to_string(expected));
  }
  return a;
}

template <class F>
std::optional<DefiningSystem<F>> find_defining_system(const Koszul<F>& r, const std::vector<KoszulElement<F>>& reps) {
  if (reps.size() < 2) throw std::invalid_argument("a Massey product needs at least two classes");
  Search<F> s(r, reps);
  Walk<F> walk(s, 1, 1e300);
  walk.on_leaf = [] { return true; };
  if (!walk.run(0)) return std::nullopt;
  return s.system();
}

template <class F>
MasseyReport<F> triple_massey(const Koszul<F>& r, const std::vector<KoszulElement<F>>& reps) {
  if (reps.size() != 3) throw std::invalid_argument("triple_massey needs exactly three classes");
  MasseyReport<F> rep;
  rep.strategy = Strategy::Coset;
  Search<F> s(r, reps);
  fill_degrees(rep, s);
  rep.complete = true;
  std::vector<Slot<F>> slots;
  for (std::size_t idx = 0; idx < s.slots(); ++idx) {
    auto slot = s.prepare(idx);
    if (!slot) {
      rep.verdict = Verdict::NotDefined;
      rep.note = "product of consecutive classes is nonzero";
      return rep;
    }
    s.system().c[s.order()[idx]] = slot->particular;
    slots.push_back(std::move(*slot));
  }
  rep.defined = true;
  rep.systems = 1;
  rep.witness = s.system();
  rep.value = s.value();
  rep.value_is_coboundary = value_is_coboundary(r, rep.value);

  auto t = s.range(0, 3);
  if (!t) {
    rep.verdict = Verdict::Trivial;
    rep.indeterminacy_dim = 0;
    rep.note = "supports overlap; the value component vanishes";
    return rep;
  }
  int level = rep.degree - card(*t);
  auto comp = r.component(*t);
  std::size_t dim = comp->dim(level);
  SpanBasis<F> span(dim);
  if (level >= 1 && dim > 0) {
    const auto& d = comp->d[level - 1];
    for (std::size_t c = 0; c < d.cols(); ++c) {
      std::vector<F> v(d.rows());
      for (std::size_t row = 0; row < d.rows(); ++row) v[row] = d(row, c);
      span.insert(std::move(v));
    }
  }
  std::size_t boundaries = span.dim();
  // slot order is (0,2) then (1,3)
  const auto& a1 = reps[0];
  const auto& a3 = reps[2];
  for (const auto& slot : slots) {
    for (const auto& z : slot.cocycles) {
      KoszulElement<F> shift = slot.i == 0 ? r.multiply(z.bar(), a3) : r.multiply(a1.bar(), z);
      if (!shift.is_zero()) span.insert(comp->coordinates(level, shift));
    }
  }
  rep.indeterminacy_dim = static_cast<long>(span.dim() - boundaries);
  bool in_coset = rep.value.is_zero() || span.contains(comp->coordinates(level, rep.value));
  rep.verdict = in_coset ? Verdict::Trivial : Verdict::Nontrivial;
  return rep;
}

template <class F>
MasseyReport<F> massey_nontrivial(const Koszul<F>& r, const std::vector<KoszulElement<F>>& reps,
                                  const SearchOptions& opt) {
  int k = static_cast<int>(reps.size());
  if (k < 2) throw std::invalid_argument("a Massey product needs at least two classes");
  constexpr bool f2 = FieldTraits<F>::tag == FieldTag::F2;

  if (opt.strategy == Strategy::Coset || (opt.strategy == Strategy::Exhaustive && !f2 && k == 3)) {
    if (k != 3) throw std::invalid_argument("the coset rule applies to triple products only");
    auto rep = triple_massey(r, reps);
    rep.seed = opt.seed;
    return rep;
  }

  MasseyReport<F> rep;
  rep.strategy = opt.strategy;
  rep.seed = opt.seed;
  Search<F> s(r, reps);
  fill_degrees(rep, s);

  if (opt.strategy == Strategy::Exhaustive) {
    Walk<F> walk(s, opt.budget, opt.time_limit);
    walk.on_leaf = [&] {
      KoszulElement<F> a = s.value();
      bool vanishes = value_is_coboundary(r, a);
      if (!rep.witness || vanishes) {
        rep.witness = s.system();
        rep.value = a;
        rep.value_is_coboundary = vanishes;
      }
      return vanishes;
    };
    bool stopped = walk.run(0);
    rep.systems = walk.leaves;
    rep.nodes = walk.nodes;
    rep.defined = rep.witness.has_value();
    rep.complete = (f2 || s.slots() == 0) && !walk.exhausted;
    if (stopped) {
      rep.verdict = Verdict::Trivial;
      rep.complete = true;
    } else if (rep.complete) {
      rep.verdict = rep.defined ? Verdict::Nontrivial : Verdict::NotDefined;
    } else {
      rep.verdict = Verdict::Undecided;
      rep.note = walk.exhausted ? "search budget exhausted" : "choices over Q limited to coefficients in {0,1,-1}";
    }
    return rep;
  }

  // sampled: independent random paths through the choice tree
  std::mt19937_64 rng(opt.seed);
  auto start = Clock::now();
  for (long attempt = 0; attempt < opt.budget; ++attempt) {
    if (std::chrono::duration<double>(Clock::now() - start).count() > opt.time_limit) break;
    s.system().c.clear();
    bool ok = true;
    for (std::size_t idx = 0; idx < s.slots() && ok; ++idx) {
      auto slot = s.prepare(idx);
      if (!slot) {
        ok = false;
        break;
      }
      ++rep.nodes;
      std::vector<int> digits(slot->cocycles.size());
      for (auto& d : digits) d = static_cast<int>(rng() % kBase<F>);
      s.system().c[s.order()[idx]] = combine(*slot, digits);
    }
    if (!ok) continue;
    ++rep.systems;
    KoszulElement<F> a = s.value();
    bool vanishes = value_is_coboundary(r, a);
    if (!rep.witness || vanishes) {
      rep.witness = s.system();
      rep.value = a;
      rep.value_is_coboundary = vanishes;
    }
    if (vanishes) break;
  }
  rep.defined = rep.witness.has_value();
  rep.verdict = rep.value_is_coboundary ? Verdict::Trivial : Verdict::Undecided;
  if (rep.verdict == Verdict::Undecided) rep.note = "no vanishing system among the sampled ones";
  return rep;
}

template <class F>
std::vector<KoszulElement<F>> qn_default_classes(int n) {
  std::vector<KoszulElement<F>> out;
  for (int i = 0; i < n; ++i) out.emplace_back(Monomial{bit(n + i), bit(i)});
  return out;
}

template <class F>
std::vector<KoszulElement<F>> parse_classes(const Koszul<F>& r, const std::string& s) {
  std::vector<KoszulElement<F>> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    KoszulElement<F> x;
    std::stringstream terms(part);
    std::string term;
    while (std::getline(terms, term, '+'))
      if (term.find_first_not_of(" \t") != std::string::npos) x += r.parse_monomial(term);
    out.push_back(std::move(x));
  }
  if (out.empty()) throw std::invalid_argument("no classes given");
  return out;
}

#define MAC_INSTANTIATE(F)                                                                                  \
  template void check_classes<F>(const Koszul<F>&, const std::vector<KoszulElement<F>>&);                  \
  template std::optional<DefiningSystem<F>> find_defining_system<F>(const Koszul<F>&,                      \
                                                                     const std::vector<KoszulElement<F>>&); \
  template KoszulElement<F> massey_value<F>(const Koszul<F>&, const DefiningSystem<F>&);                   \
  template MasseyReport<F> triple_massey<F>(const Koszul<F>&, const std::vector<KoszulElement<F>>&);       \
  template MasseyReport<F> massey_nontrivial<F>(const Koszul<F>&, const std::vector<KoszulElement<F>>&,    \
                                                const SearchOptions&);                                      \
  template std::vector<KoszulElement<F>> qn_default_classes<F>(int);                                       \
  template std::vector<KoszulElement<F>> parse_classes<F>(const Koszul<F>&, const std::string&);

MAC_INSTANTIATE(Gf2)
MAC_INSTANTIATE(Rational)

}  // namespace mac
