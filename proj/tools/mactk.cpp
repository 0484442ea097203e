#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "mac/geometry.hpp"
#include "mac/hochster.hpp"
#include "mac/io.hpp"
#include "mac/kernels.hpp"
#include "mac/massey.hpp"
#include "mac/polytope.hpp"

using namespace mac;
namespace fs = std::filesystem;

namespace {

struct Globals {
  std::string field = "f2";
  std::uint64_t seed = 1;
  int threads = 1;
  std::string format = "json";
  long samples = 100;
  double tolerance = 1e-9;
};

struct Loaded_ {
  Loaded value;
  InputRef ref;
};

Loaded_ load_input(const std::string& path) {
  std::string text = read_file(path);
  json j = parse_json(text, path);
  try {
    return {load_any(j), {path, sha256_hex(text)}};
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// 0 when no expectation was given or it matched.
int expect_code(const std::string& expect, const std::string& actual) {
  if (expect.empty()) return 0;
  if (expect == actual) return 0;
  std::cerr << "expected " << expect << ", got " << actual << "\n";
  return 1;
}

void summarize(const CombPolytope& p, bool to_stderr) {
  (to_stderr ? std::cerr : std::cout) << "m=" << p.m() << " n=" << p.n()
                                      << " flag=" << (is_flag(p.nerve()) ? "true" : "false") << "\n";
}

int write_polytope(const CombPolytope& p, const std::string& out) {
  emit(to_json(p).dump(1) + "\n", out);
  summarize(p, out.empty());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for nerves of simple polytopes, moment-angle cohomology and Massey products"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "Coefficient field")->check(CLI::IsMember({"f2", "q"}));
  app.add_option("--seed", g.seed, "Seed for every random stream");
  app.add_option("--threads", g.threads, "Worker cap")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--samples", g.samples, "Samples for residual checks")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", g.tolerance, "Residual tolerance");
  std::string simd = "auto";
  app.add_option("--simd", simd, "Kernel family")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  std::string in, out, expect;
  int code = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate complexes and polytopes");
  gen->require_subcommand(1);

  int qn_n = 3;
  auto* gen_q = gen->add_subcommand("qn", "The 2-truncated cube Q^n");
  gen_q->add_option("--n", qn_n, "Dimension")->required()->check(CLI::NonNegativeNumber);
  gen_q->add_option("--out", out, "Output file (stdout if absent)");
  gen_q->callback([&] { code = write_polytope(gen_qn(qn_n), out); });

  std::string facet = "auto";
  int power = 1;
  auto* gen_fc = gen->add_subcommand("fc", "Cut a codimension-2 face of P x I");
  gen_fc->add_option("--in", in, "Input polytope")->required();
  gen_fc->add_option("--facet", facet, "Facet (1-based) or auto");
  gen_fc->add_option("--power", power, "Number of iterations")->check(CLI::NonNegativeNumber);
  gen_fc->add_option("--out", out, "Output file");
  gen_fc->callback([&] {
    CombPolytope p = polytope_of(load_input(in).value);
    FacetPolicy pol;
    if (facet != "auto") {
      int f = std::stoi(facet);
      if (f < 1 || f > p.m()) throw std::out_of_range("--facet " + facet + " outside [1," + std::to_string(p.m()) + "]");
      pol = FacetPolicy::fixed(f - 1);
    }
    code = write_polytope(fc_power(p, power, pol), out);
  });

  auto* gen_p = gen->add_subcommand("product", "P x I");
  gen_p->add_option("--in", in, "Input polytope")->required();
  gen_p->add_option("--out", out, "Output file");
  gen_p->callback([&] { code = write_polytope(product_with_interval(polytope_of(load_input(in).value)), out); });

  std::string facets;
  auto* gen_f = gen->add_subcommand("face", "Face cut out by a set of facets");
  gen_f->add_option("--in", in, "Input polytope")->required();
  gen_f->add_option("--facets", facets, "Comma-separated 1-based facets")->required();
  gen_f->add_option("--out", out, "Output file");
  gen_f->callback([&] {
    CombPolytope p = polytope_of(load_input(in).value);
    Face f = face_of(p, from_one_based(parse_int_list(facets), p.m()));
    code = write_polytope(f.polytope, out);
    std::vector<int> phi;
    for (int j : f.map.phi) phi.push_back(j + 1);
    std::cerr << "phi=" << json(phi).dump() << "\n";
  });

  std::string hkind = "pentagon";
  auto* gen_h = gen->add_subcommand("hrep", "Exact H-representation of a standard polytope");
  gen_h->add_option("--kind", hkind, "pentagon, prism, cube, polygon or qn")
      ->check(CLI::IsMember({"pentagon", "prism", "cube", "polygon", "qn"}));
  gen_h->add_option("--n", qn_n, "Dimension, or vertex count for polygon");
  gen_h->add_option("--out", out, "Output file");
  gen_h->callback([&] {
    HPolytope h = hkind == "pentagon" ? pentagon_hrep()
                  : hkind == "prism"  ? prism_hrep()
                  : hkind == "cube"   ? cube_hrep(qn_n)
                  : hkind == "polygon" ? polygon_hrep(qn_n)
                                       : qn_realization(qn_n);
    emit(to_json(h).dump(1) + "\n", out);
    summarize(nerve_from_hrep(h), out.empty());
  });

  // analyze
  auto* an = app.add_subcommand("analyze", "Compute invariants and verdicts");
  an->require_subcommand(1);

  auto* an_b = an->add_subcommand("betti", "Multigraded Betti table via the Hochster decomposition");
  an_b->add_option("--in", in, "Input complex or polytope")->required();
  an_b->add_option("--out", out, "Output file");
  an_b->add_option("--expect", expect, "Comma-separated totals by degree");
  an_b->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    auto x = load_input(in);
    BettiTable t = betti_table(nerve_of(x.value), parse_field(g.field), g.threads);
    std::string actual;
    for (long v : t.totals()) actual += (actual.empty() ? "" : ",") + std::to_string(v);
    if (g.format == "tsv") {
      emit(betti_tsv(t), out);
    } else {
      json res = to_json(t);
      res["field"] = g.field;
      emit(make_report("analyze betti", {x.ref}, g.seed, res, ms_since(t0)).dump(1) + "\n", out);
    }
    std::string want;
    if (!expect.empty())
      for (int v : parse_int_list(expect)) want += (want.empty() ? "" : ",") + std::to_string(v);
    code = expect_code(want, actual);
  });

  auto* an_f = an->add_subcommand("flag", "Flagness and the face-fullness criterion");
  an_f->add_option("--in", in, "Input polytope")->required();
  an_f->add_option("--out", out, "Output file");
  an_f->add_option("--expect", expect, "flag or nonflag")->check(CLI::IsMember({"flag", "nonflag"}));
  an_f->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    auto x = load_input(in);
    CombPolytope p = polytope_of(x.value);
    FlagReport r = flag_criterion_report(p, g.threads);
    emit(make_report("analyze flag", {x.ref}, g.seed, to_json(r, p), ms_since(t0)).dump(1) + "\n", out);
    if (!r.consistent()) {
      std::cerr << "criteria disagree\n";
      code = 1;
      return;
    }
    code = expect_code(expect, r.flag_by_nonfaces ? "flag" : "nonflag");
  });

  std::string classes = "default", strategy = "exhaustive";
  long budget = 1'000'000;
  double time_limit = 600;
  auto* an_m = an->add_subcommand("massey", "Massey products in the Koszul algebra");
  an_m->add_option("--in", in, "Input complex or polytope")->required();
  an_m->add_option("--classes", classes, "default, or representatives like \"v1 u4; v2 u5; v3 u6\"");
  an_m->add_option("--strategy", strategy, "exhaustive, sampled or coset")
      ->check(CLI::IsMember({"exhaustive", "sampled", "coset"}));
  an_m->add_option("--budget", budget, "Maximum systems (exhaustive) or attempts (sampled)");
  an_m->add_option("--time-limit", time_limit, "Seconds before the search gives up");
  an_m->add_option("--out", out, "Output file");
  an_m->add_option("--expect", expect, "trivial, nontrivial, undecided, not-defined or defined");
  an_m->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    auto x = load_input(in);
    SimplicialComplex k = nerve_of(x.value);
    SearchOptions opt{parse_strategy(strategy), g.seed, budget, time_limit};
    with_field(parse_field(g.field), [&]<class F>() {
      Koszul<F> r(k);
      std::vector<KoszulElement<F>> reps;
      if (classes == "default") {
        int n = polytope_of(x.value).n();
        if (2 * n > k.m()) throw std::invalid_argument("default classes need at least 2n facets");
        reps = qn_default_classes<F>(n);
      } else {
        reps = parse_classes(r, classes);
      }
      MasseyReport<F> rep = massey_nontrivial(r, reps, opt);
      emit(make_report("analyze massey", {x.ref}, g.seed, to_json(rep), ms_since(t0)).dump(1) + "\n", out);
      std::string actual = verdict_name(rep.verdict);
      if (expect == "defined") actual = rep.defined ? "defined" : actual;
      code = expect_code(expect, actual);
    });
  });

  std::string face = "1", zeros;
  auto* an_e = an->add_subcommand("embed-verify", "Sample the face embedding and check the ambient quadrics");
  an_e->add_option("--in", in, "Input H-polytope")->required();
  an_e->add_option("--face", face, "Comma-separated 1-based facets containing the face");
  an_e->add_option("--zero", zeros, "Coordinates (1-based) that must vanish on every sample");
  an_e->add_option("--out", out, "Output file");
  an_e->add_option("--expect", expect, "pass or fail")->check(CLI::IsMember({"pass", "fail"}));
  an_e->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    auto x = load_input(in);
    auto* h = std::get_if<HPolytope>(&x.value);
    if (!h) throw std::invalid_argument(in + ": embed-verify needs an H-polytope with \"A\" and \"b\"");
    VSet s = from_one_based(parse_int_list(face), h->m());
    ResidualReport r = embed_and_check(*h, s, g.samples, g.seed, g.threads);
    json res = to_json(r);
    res["tolerance"] = g.tolerance;
    bool pass = r.max_residual < g.tolerance;
    if (!zeros.empty()) {
      std::vector<int> want = parse_int_list(zeros), missing;
      for (int z : want)
        if (std::find(r.zero_coords.begin(), r.zero_coords.end(), z) == r.zero_coords.end()) missing.push_back(z);
      res["required_zero"] = want;
      res["not_zero"] = missing;
      pass = pass && missing.empty();
    }
    res["pass"] = pass;
    if (r.clamps) std::cerr << "warning: " << r.clamps << " negative radicands clamped to zero\n";
    emit(make_report("analyze embed-verify", {x.ref}, g.seed, res, ms_since(t0)).dump(1) + "\n", out);
    code = expect_code(expect, pass ? "pass" : "fail");
  });

  std::string against;
  int facet_i = 1, against_qn = -1;
  auto* an_i = an->add_subcommand("facet-iso", "Compare a facet with another polytope up to combinatorial type");
  an_i->add_option("--in", in, "Input polytope")->required();
  an_i->add_option("--facet", facet_i, "Facet (1-based)")->required();
  auto* ag = an_i->add_option("--against", against, "Polytope to compare with");
  an_i->add_option("--qn", against_qn, "Compare with Q^n")->excludes(ag);
  an_i->add_option("--out", out, "Output file");
  an_i->add_option("--expect", expect, "iso or noniso")->check(CLI::IsMember({"iso", "noniso"}));
  an_i->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    auto x = load_input(in);
    CombPolytope p = polytope_of(x.value);
    if (facet_i < 1 || facet_i > p.m()) throw std::out_of_range("--facet outside [1," + std::to_string(p.m()) + "]");
    std::vector<InputRef> refs{x.ref};
    CombPolytope q;
    if (against_qn >= 0) {
      q = gen_qn(against_qn);
    } else if (!against.empty()) {
      auto y = load_input(against);
      refs.push_back(y.ref);
      q = polytope_of(y.value);
    } else {
      throw std::invalid_argument("facet-iso needs --against or --qn");
    }
    Face f = face_of(p, bit(facet_i - 1));
    auto iso = iso_check(f.polytope.nerve(), q.nerve());
    json res;
    res["facet"] = facet_i;
    res["facet_m"] = f.polytope.m();
    res["other_m"] = q.m();
    res["iso"] = iso.has_value();
    if (iso) {
      json map = json::array();
      for (std::size_t v = 0; v < iso->size(); ++v) map.push_back({f.map.phi[v] + 1, (*iso)[v] + 1});
      res["bijection"] = map;  // ambient facet -> vertex of the other nerve
    }
    emit(make_report("analyze facet-iso", refs, g.seed, res, ms_since(t0)).dump(1) + "\n", out);
    code = expect_code(expect, iso ? "iso" : "noniso");
  });

  // corpus
  const char* env = std::getenv("MACTK_CORPUS_ROOT");
  std::string root = env ? env : "corpus";
  auto* co = app.add_subcommand("corpus", "Manage the on-disk corpus");
  co->require_subcommand(1);
  auto* co_b = co->add_subcommand("build", "Write the standard corpus and its manifest");
  co_b->add_option("--root", root, "Corpus directory (default $MACTK_CORPUS_ROOT or ./corpus)");
  co_b->callback([&] {
    std::vector<std::pair<std::string, json>> items;
    for (const auto& c : standard_corpus()) items.emplace_back(c.name, to_json(c.value));
    corpus_write(root, items);
    std::cout << items.size() << " entries written to " << root << "\n";
  });
  auto* co_v = co->add_subcommand("verify", "Check manifest hashes and parse every entry");
  co_v->add_option("--root", root, "Corpus directory (default $MACTK_CORPUS_ROOT or ./corpus)");
  co_v->callback([&] {
    auto problems = corpus_verify(root);
    json res;
    res["root"] = root;
    res["entries"] = problems.empty() ? json(corpus_manifest(root).size()) : json(nullptr);
    json list = json::array();
    for (const auto& p : problems) list.push_back({{"name", p.name}, {"problem", p.what}});
    res["problems"] = list;
    res["ok"] = problems.empty();
    std::cout << res.dump(1) << "\n";
    code = problems.empty() ? 0 : 1;
  });

  app.parse_complete_callback([&] {
    if (simd != "auto") kernels::set_isa(simd == "avx2" ? kernels::Isa::Avx2 : kernels::Isa::Scalar);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
