// Runs acceptance criteria 1-11; one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "mac/geometry.hpp"
#include "mac/hochster.hpp"
#include "mac/io.hpp"
#include "mac/koszul.hpp"
#include "mac/massey.hpp"
#include "mac/polytope.hpp"
#include "oracles/oracles.hpp"

using namespace mac;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED(" << what << ")";
    }
  }
};

int failures = 0;

void run(int id, const char* title, double budget, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0 && secs > budget) {
    out.pass = false;
    out.detail << " over budget " << budget << " s";
  }
  if (!out.pass) ++failures;
  std::printf("criterion %2d %s  %s |%s (%.2f s)\n", id, out.pass ? "PASS" : "FAIL", title, out.detail.str().c_str(),
              secs);
  std::fflush(stdout);
}

std::string vec_str(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string set_str(VSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : to_one_based(s)) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::vector<long> trim(std::vector<long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

SimplicialComplex cycle(int m) {
  std::vector<VSet> e;
  for (int i = 0; i < m; ++i) e.push_back(bit(i) | bit((i + 1) % m));
  return SimplicialComplex(m, e);
}

template <class F>
KoszulElement<F> random_element(const SimplicialComplex& k, const std::vector<VSet>& faces, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
  std::uniform_int_distribution<int> terms(1, 4), coeff(-3, 3);
  std::bernoulli_distribution coin(0.25);
  KoszulElement<F> x;
  for (int t = terms(rng); t > 0; --t) {
    VSet s = faces[pick(rng)], u = 0;
    for (int v = 0; v < k.m(); ++v)
      if (!((s >> v) & 1) && coin(rng)) u |= bit(v);
    x.add({u, s}, FieldTraits<F>::from_int(coeff(rng)));
  }
  return x;
}

template <class F>
KoszulElement<F> parity_part(const KoszulElement<F>& x, int parity) {
  KoszulElement<F> r;
  for (const auto& [mon, c] : x.terms())
    if (mon.total_degree() % 2 == parity) r.add(mon, c);
  return r;
}

template <class F>
long dga_violations(const SimplicialComplex& k, int trials, std::uint64_t seed) {
  Koszul<F> r(k);
  auto faces = k.faces();
  std::mt19937_64 rng(seed);
  long bad = 0;
  for (int t = 0; t < trials; ++t) {
    auto x = random_element<F>(k, faces, rng);
    auto y = random_element<F>(k, faces, rng);
    if (!r.differential(r.differential(x)).is_zero()) ++bad;
    auto lhs = r.differential(r.multiply(x, y));
    auto rhs = r.multiply(r.differential(x), y) + r.multiply(parity_part(x, 0), r.differential(y)) -
               r.multiply(parity_part(x, 1), r.differential(y));
    if (!(lhs == rhs)) ++bad;
  }
  return bad;
}

template <class F>
long koszul_hochster_mismatches(const SimplicialComplex& k, long& compared) {
  Koszul<F> r(k);
  long bad = 0;
  for (VSet j = 0; j <= full_set(k.m()); ++j) {
    auto h = reduced_ranks(k, j, FieldTraits<F>::tag);
    for (int i = 0; i <= card(j); ++i) {
      ++compared;
      if (r.cohomology(j, i).dimension != h.rank(card(j) - i - 1)) ++bad;
    }
    if (j == full_set(k.m())) break;
  }
  return bad;
}

std::vector<CorpusItem> corpus() {
  static const auto c = standard_corpus();
  return c;
}

}  // namespace

int main() {
  run(1, "facet count m(Q^n) = n(n+3)/2 - 1, n = 2..6", 1, [](Outcome& o) {
    for (int n = 2; n <= 6; ++n) {
      int m = gen_qn(n).m();
      o.detail << " n=" << n << ":m=" << m;
      o.require(m == n * (n + 3) / 2 - 1, "n=" + std::to_string(n));
    }
  });

  run(2, "Q^n flag by both algorithms; algorithms agree on random complexes", 30, [](Outcome& o) {
    for (int n = 2; n <= 6; ++n) {
      auto k = gen_qn(n).nerve();
      o.require(is_flag_by_nonfaces(k) && is_flag_by_links(k), "Q^" + std::to_string(n) + " not flag");
    }
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> m(3, 10), f(1, 10);
    long flags = 0, disagree = 0;
    for (int t = 0; t < 500; ++t) {
      auto k = oracle::random_complex(m(rng), f(rng), rng);
      bool a = is_flag_by_nonfaces(k), b = is_flag_by_links(k);
      if (a != b || a != oracle::brute_is_flag(k)) ++disagree;
      flags += a;
    }
    o.detail << " Q^2..Q^6 flag; 500 random complexes, " << flags << " flag, " << disagree << " disagreements";
    o.require(disagree == 0, "algorithms disagree");
  });

  run(3, "link of vertices n-1 and 2n-1 in K_{Q^n} is K_{Q^{n-1}}, n = 3,4,5", 10, [](Outcome& o) {
    for (int n = 3; n <= 5; ++n) {
      auto k = gen_qn(n).nerve();
      auto target = gen_qn(n - 1).nerve();
      for (int v : {n - 1, 2 * n - 1}) {
        auto lk = strip_ghosts(link(k, bit(v - 1)).complex).complex;
        bool iso = iso_check(lk, target).has_value();
        o.detail << " n=" << n << ",v=" << v << ":" << (iso ? "iso" : "noniso");
        o.require(iso, "n=" + std::to_string(n) + " v=" + std::to_string(v));
      }
    }
  });

  run(4, "Hochster totals of the pentagon and the 4-cycle", 5, [](Outcome& o) {
    auto pent = nerve_from_hrep(pentagon_hrep()).nerve();
    std::vector<long> want5{1, 0, 0, 5, 5, 0, 0, 1}, want4{1, 0, 0, 2, 0, 0, 1};
    for (FieldTag f : {FieldTag::F2, FieldTag::Q}) {
      auto t = betti_table(pent, f).totals();
      auto oracle_t = trim(oracle::betti_totals(pent, f));
      o.detail << " pentagon/" << field_name(f) << "=" << vec_str(t);
      o.require(t == want5, std::string("pentagon ") + field_name(f));
      o.require(oracle_t == want5, std::string("pentagon oracle ") + field_name(f));
      auto c4 = betti_table(cycle(4), f).totals();
      o.detail << " 4-cycle/" << field_name(f) << "=" << vec_str(c4);
      o.require(c4 == want4 && trim(oracle::betti_totals(cycle(4), f)) == want4,
                std::string("4-cycle ") + field_name(f));
    }
  });

  run(5, "Koszul cohomology equals Hochster ranks on corpus complexes with m <= 8", 120, [](Outcome& o) {
    long compared = 0, bad = 0;
    int complexes = 0;
    for (const auto& item : corpus()) {
      auto k = nerve_of(item.value);
      if (k.m() > 8) continue;
      ++complexes;
      long b2 = koszul_hochster_mismatches<Gf2>(k, compared);
      long bq = koszul_hochster_mismatches<Rational>(k, compared);
      if (b2 + bq) o.detail << " " << item.name << ":" << b2 + bq << " mismatches";
      bad += b2 + bq;
    }
    o.detail << " " << complexes << " complexes, " << compared << " (i,J,field) entries, " << bad << " mismatches";
    o.require(bad == 0, "rank mismatch");
  });

  run(6, "d^2 = 0 and graded Leibniz, 1000 random pairs per corpus complex and field", 60, [](Outcome& o) {
    long bad = 0;
    int complexes = 0;
    std::uint64_t seed = 6;
    for (const auto& item : corpus()) {
      auto k = nerve_of(item.value);
      ++complexes;
      bad += dga_violations<Gf2>(k, 1000, ++seed) + dga_violations<Rational>(k, 1000, ++seed);
    }
    o.detail << " " << complexes << " complexes, " << bad << " violations";
    o.require(bad == 0, "DGA law violated");
  });

  run(7, "triple product <v1u4, v2u5, v3u6> in R(K_{Q^3}) over F2 is nontrivial", 60, [](Outcome& o) {
    Koszul<Gf2> r(gen_qn(3).nerve());
    auto reps = qn_default_classes<Gf2>(3);
    auto ex = massey_nontrivial(r, reps, {Strategy::Exhaustive});
    auto co = massey_nontrivial(r, reps, {Strategy::Coset});
    o.detail << " exhaustive=" << verdict_name(ex.verdict) << " (systems=" << ex.systems
             << ", complete=" << ex.complete << ") coset=" << verdict_name(co.verdict)
             << " (indeterminacy dim " << co.indeterminacy_dim << ")";
    o.require(ex.defined && co.defined, "not defined");
    o.require(ex.verdict == Verdict::Nontrivial && ex.complete, "exhaustive");
    o.require(co.verdict == Verdict::Nontrivial, "coset");
  });

  run(8, "triple product on the Q^3 facet of Q^4; 4-fold product in R(K_{Q^4})", 900, [](Outcome& o) {
    auto q4 = gen_qn(4);
    auto k = q4.nerve();
    auto face = face_of(q4, bit(2));  // F_{n-1}, n = 4
    auto iso = iso_check(face.polytope.nerve(), gen_qn(3).nerve());
    o.require(iso.has_value(), "facet not Q^3");
    if (!iso) return;
    // Q^3 vertex -> ambient vertex
    std::vector<int> to_ambient(iso->size());
    for (std::size_t v = 0; v < iso->size(); ++v) to_ambient[(*iso)[v]] = face.map.phi[v];
    VSet j = face.map.image();
    std::vector<KoszulElement<Gf2>> reps;
    for (const auto& a : qn_default_classes<Gf2>(3)) {
      KoszulElement<Gf2> b;
      for (const auto& [mon, c] : a.terms()) b.add({map_set(mon.u, to_ambient), map_set(mon.v, to_ambient)}, c);
      reps.push_back(b);
    }
    Koszul<Gf2> rk(k);
    auto amb = massey_nontrivial(rk, reps, {Strategy::Coset});
    auto sub = full_subcomplex(k, j);
    std::vector<KoszulElement<Gf2>> local;
    for (const auto& a : reps) {
      KoszulElement<Gf2> b;
      for (const auto& [mon, c] : a.terms()) b.add({sub.lower(mon.u), sub.lower(mon.v)}, c);
      local.push_back(b);
    }
    Koszul<Gf2> rj(sub.complex);
    auto res = massey_nontrivial(rj, local, {Strategy::Exhaustive});
    o.detail << " J=" << set_str(j) << " in K_{Q^4}: " << verdict_name(amb.verdict) << "; in K_J: "
             << verdict_name(res.verdict) << " (complete=" << res.complete << ")";
    o.require(amb.defined && amb.verdict == Verdict::Nontrivial, "triple in K_{Q^4}");
    o.require(res.defined && res.verdict == Verdict::Nontrivial, "triple in K_J");
    auto four = massey_nontrivial(rk, qn_default_classes<Gf2>(4), {Strategy::Exhaustive, 1, 1'000'000, 600});
    o.detail << "; 4-fold: defined=" << four.defined << " value_is_coboundary=" << four.value_is_coboundary
             << " verdict=" << verdict_name(four.verdict) << " (systems=" << four.systems
             << ", complete=" << four.complete << ")";
    o.require(four.defined && !four.value.is_zero() && !four.value_is_coboundary, "4-fold canonical value");
    o.require(four.verdict == Verdict::Nontrivial || four.verdict == Verdict::Undecided, "4-fold verdict");
  });

  run(9, "flag <=> every face full, over the corpus; prism witness", 120, [](Outcome& o) {
    int polytopes = 0, flags = 0;
    for (const auto& item : corpus()) {
      auto p = polytope_of(item.value);
      auto r = flag_criterion_report(p);
      ++polytopes;
      flags += r.flag_by_nonfaces;
      o.require(r.consistent(), item.name);
    }
    o.detail << " " << polytopes << " polytopes (" << flags << " flag), all consistent";
    o.require(polytopes >= 20, "corpus too small");
    auto prism = nerve_from_hrep(prism_hrep());
    auto quad = face_fullness(prism, bit(1));
    bool diag = std::find(quad.extra.begin(), quad.extra.end(), bit(2) | bit(3)) != quad.extra.end();
    bool tri = is_face_full(prism, bit(0));
    o.detail << "; prism quad facet F_2 full=" << quad.full << " extra face {3,4}=" << diag
             << ", triangle F_1 full=" << tri;
    o.require(!quad.full && diag, "quad facet witness");
    o.require(tri, "triangle facet");
  });

  run(10, "face embeddings: pentagon F_1 and the Q^4 face F_3", 10, [](Outcome& o) {
    auto pent = pentagon_hrep();
    auto rep = embed_and_check(pent, bit(0), 100, 10);
    auto e = face_embedding_data(pent, bit(0));
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(0, 1), ph(0, 2 * std::numbers::pi);
    double formula = 0;
    for (int t = 0; t < 100; ++t) {
      // uniform point of |z2|^2 + |z5|^2 = 2
      double a = 2 * u(rng);
      std::complex<double> z2 = std::polar(std::sqrt(a), ph(rng)), z5 = std::polar(std::sqrt(2 - a), ph(rng));
      auto z = apply_embedding(e, 5, {z2, z5});
      std::vector<std::complex<double>> want{0, z2, std::sqrt(2.0), std::sqrt(3 - std::norm(z2)), z5};
      for (int j = 0; j < 5; ++j) formula = std::max(formula, std::abs(z[j] - want[j]));
    }
    o.detail << " pentagon: residual=" << rep.max_residual << " formula deviation=" << formula;
    o.require(rep.max_residual < 1e-9, "pentagon residual");
    o.require(formula < 1e-12, "pentagon formula");
    auto q4 = qn_realization(4);
    auto f3 = embed_and_check(q4, bit(2), 100, 10);
    std::string zeros;
    for (int c : f3.zero_coords) zeros += (zeros.empty() ? "" : ",") + std::to_string(c);
    o.detail << "; Q^4 face F_3 (r=" << f3.r << "): residual=" << f3.max_residual << " zero coords={" << zeros
             << "}, expected {2,3,6,7}";
    o.require(f3.max_residual < 1e-9, "Q^4 residual");
    o.require(f3.zero_coords == std::vector<int>{2, 3, 6, 7}, "z2=z3=z6=z7=0");
  });

  run(11, "fc laws over the corpus; facet counts separate fc^k(Q^l) and fc^l(Q^k)", 30, [](Outcome& o) {
    long cuts = 0;
    for (const auto& item : corpus()) {
      auto p = polytope_of(item.value);
      bool flag = is_flag(p.nerve());
      std::vector<int> facets;
      if (p.m() <= 12)
        for (int i = 0; i < p.m(); ++i) facets.push_back(i);
      else
        facets.push_back(auto_facet(p));
      for (int i : facets) {
        auto q = fc(p, i);
        ++cuts;
        o.require(q.m() == p.m() + 3, item.name + " facet count");
        if (flag) o.require(is_flag(q.nerve()), item.name + " flagness");
        int bottom = p.m();
        auto lk = strip_ghosts(link(q.nerve(), bit(bottom)).complex).complex;
        o.require(iso_check(lk, p.nerve()).has_value(), item.name + " bottom link");
      }
    }
    o.detail << " " << cuts << " cuts checked";
    int pairs = 0;
    for (int k = 2; k <= 5; ++k)
      for (int l = k + 1; l <= 5; ++l) {
        auto a = fc_power(gen_qn(l), k), b = fc_power(gen_qn(k), l);
        o.require(a.n() == b.n(), "dimension");
        if ((l - k) * (l + k - 3) != 0) {
          ++pairs;
          o.require(a.m() != b.m(), "fc^" + std::to_string(k) + "(Q^" + std::to_string(l) + ")");
        }
      }
    o.detail << "; " << pairs << " (k,l) pairs with distinct facet counts";
  });

  std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
