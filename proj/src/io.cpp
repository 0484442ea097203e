#include "mac/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace mac {

namespace fs = std::filesystem;

ParseError::ParseError(std::string file, int line, int col, const std::string& what)
    : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
      file_(std::move(file)),
      line_(line),
      col_(col) {}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return ss.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t pos = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto cut = msg.find("parse error");
    throw ParseError(origin, line, col, cut == std::string::npos ? msg : msg.substr(cut));
  }
}

json load_json(const fs::path& p) { return parse_json(read_file(p), p.string()); }

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

std::vector<std::string> labels_from(const json& j, const std::string& where) {
  std::vector<std::string> out;
  if (!j.is_array()) bad(where, "expected an array of strings");
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) bad(where + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

Rational rational_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(where, "expected a rational as a string");
  try {
    return FieldTraits<Rational>::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    bad(where, e.what());
  }
}

json vset_json(VSet s) { return to_one_based(s); }

json matrix_json(const QMat& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

SimplicialComplex complex_from_json_at(const json& j, const std::string& where) {
  int m = as_int(field(j, "m", where), where + "/m");
  if (m < 0 || m > kMaxVertices) bad(where + "/m", "vertex count must lie in [0,64]");
  const json& mf = field(j, "maximal_faces", where);
  if (!mf.is_array()) bad(where + "/maximal_faces", "expected an array");
  std::vector<VSet> faces;
  for (std::size_t i = 0; i < mf.size(); ++i) {
    std::string w = where + "/maximal_faces/" + std::to_string(i);
    if (!mf[i].is_array()) bad(w, "expected an array of vertices");
    std::vector<int> vs;
    for (std::size_t t = 0; t < mf[i].size(); ++t) vs.push_back(as_int(mf[i][t], w + "/" + std::to_string(t)));
    try {
      faces.push_back(from_one_based(vs, m));
    } catch (const std::exception& e) {
      bad(w, e.what());
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = labels_from(j["labels"], where + "/labels");
  bool ghosts = j.value("allow_ghosts", false);
  try {
    return SimplicialComplex(m, faces, labels, ghosts);
  } catch (const std::exception& e) {
    bad(where, e.what());
  }
}

}  // namespace

json to_json(const SimplicialComplex& k) {
  json j;
  j["m"] = k.m();
  json mf = json::array();
  for (VSet f : k.maximal_faces()) mf.push_back(vset_json(f));
  j["maximal_faces"] = mf;
  if (!k.labels().empty()) j["labels"] = k.labels();
  if (k.allows_ghosts()) j["allow_ghosts"] = true;
  return j;
}

SimplicialComplex complex_from_json(const json& j) { return complex_from_json_at(j, ""); }

json to_json(const CombPolytope& p) {
  json j;
  j["n"] = p.n();
  json nerve = to_json(p.nerve());
  nerve.erase("labels");
  j["nerve"] = nerve;
  std::vector<std::string> labels;
  for (int i = 0; i < p.m(); ++i) labels.push_back(p.facet_label(i));
  j["facet_labels"] = labels;
  return j;
}

CombPolytope polytope_from_json(const json& j) {
  int n = as_int(field(j, "n", ""), "/n");
  SimplicialComplex k = complex_from_json_at(field(j, "nerve", ""), "/nerve");
  if (j.contains("facet_labels")) {
    auto labels = labels_from(j["facet_labels"], "/facet_labels");
    if (static_cast<int>(labels.size()) != k.m()) bad("/facet_labels", "one label per facet expected");
    k = k.with_labels(labels);
  }
  try {
    return CombPolytope(n, k);
  } catch (const std::exception& e) {
    bad("/nerve", e.what());
  }
}

json to_json(const HPolytope& p) {
  json j;
  j["n"] = p.n();
  j["A"] = matrix_json(p.a());
  j["b"] = vector_json(p.b());
  if (!p.labels().empty()) j["labels"] = p.labels();
  return j;
}

HPolytope hpolytope_from_json(const json& j) {
  int n = as_int(field(j, "n", ""), "/n");
  const json& a = field(j, "A", "");
  const json& b = field(j, "b", "");
  if (!a.is_array() || !b.is_array()) bad("", "\"A\" and \"b\" must be arrays");
  if (a.size() != b.size()) bad("/b", "length " + std::to_string(b.size()) + " does not match " +
                                          std::to_string(a.size()) + " rows of A");
  QMat am(a.size(), n);
  QVec bv(b.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    std::string w = "/A/" + std::to_string(r);
    if (!a[r].is_array() || static_cast<int>(a[r].size()) != n) bad(w, "expected " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) am(r, c) = rational_from(a[r][c], w + "/" + std::to_string(c));
    bv[r] = rational_from(b[r], "/b/" + std::to_string(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = labels_from(j["labels"], "/labels");
  try {
    return HPolytope(n, std::move(am), std::move(bv), labels);
  } catch (const std::exception& e) {
    bad("", e.what());
  }
}

Loaded load_any(const json& j) {
  if (!j.is_object()) bad("", "expected a JSON object");
  if (j.contains("A")) return hpolytope_from_json(j);
  if (j.contains("nerve")) return polytope_from_json(j);
  if (j.contains("maximal_faces")) return complex_from_json(j);
  if (j.contains("base")) return build_sequence(j);
  bad("", "not a complex, polytope, H-polytope or sequence spec");
}

SimplicialComplex nerve_of(const Loaded& x) {
  if (auto* k = std::get_if<SimplicialComplex>(&x)) return *k;
  return polytope_of(x).nerve();
}

CombPolytope polytope_of(const Loaded& x) {
  if (auto* p = std::get_if<CombPolytope>(&x)) return *p;
  if (auto* h = std::get_if<HPolytope>(&x)) return nerve_from_hrep(*h);
  throw std::invalid_argument("input is a bare simplicial complex; a polytope is required");
}

template <class F>
json to_json(const KoszulElement<F>& x) {
  json out = json::array();
  for (const auto& [mono, c] : x.terms())
    out.push_back({{"u", vset_json(mono.u)}, {"v", vset_json(mono.v)}, {"coeff", FieldTraits<F>::to_string(c)}});
  return out;
}

template <class F>
KoszulElement<F> element_from_json(const json& j, int m) {
  if (!j.is_array()) bad("", "element must be an array of terms");
  KoszulElement<F> x;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string w = "/" + std::to_string(i);
    auto set = [&](const char* key) {
      const json& a = field(j[i], key, w);
      if (!a.is_array()) bad(w + "/" + key, "expected an array");
      std::vector<int> vs;
      for (const auto& v : a) vs.push_back(as_int(v, w + "/" + key));
      return from_one_based(vs, m);
    };
    Monomial mono{set("u"), set("v")};
    if (mono.u & mono.v) bad(w, "u and v parts overlap");
    const json& c = field(j[i], "coeff", w);
    F coef = c.is_string() ? FieldTraits<F>::parse(c.get<std::string>()) : FieldTraits<F>::from_int(as_int(c, w));
    x.add(mono, coef);
  }
  return x;
}

template <class F>
json to_json(const DefiningSystem<F>& s) {
  json j;
  j["k"] = s.k;
  json entries = json::array();
  for (int len = 1; len <= s.k; ++len)
    for (int i = 0; i + len <= s.k; ++i) {
      if (i == 0 && len == s.k) continue;
      entries.push_back({{"i", i + 1}, {"j", i + len + 1}, {"element", to_json(s.entry(i, i + len))}});
    }
  j["entries"] = entries;
  return j;
}

template <class F>
json to_json(const MasseyReport<F>& r) {
  json j;
  j["k"] = r.k;
  j["field"] = field_name(FieldTraits<F>::tag);
  j["defined"] = r.defined;
  j["verdict"] = verdict_name(r.verdict);
  j["strategy"] = strategy_name(r.strategy);
  j["complete"] = r.complete;
  j["degree"] = r.degree;
  j["multidegree"] = vset_json(r.multidegree);
  j["value"] = to_json(r.value);
  j["value_is_coboundary"] = r.value_is_coboundary;
  j["systems"] = r.systems;
  j["nodes"] = r.nodes;
  if (r.indeterminacy_dim >= 0) j["indeterminacy_dim"] = r.indeterminacy_dim;
  j["seed"] = r.seed;
  if (!r.note.empty()) j["note"] = r.note;
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return j;
}

json to_json(const BettiTable& t) {
  json j;
  j["m"] = t.m();
  j["totals"] = t.totals();
  json entries = json::array();
  for (const auto& [key, rank] : t.entries())
    entries.push_back({{"p", key.first}, {"J", vset_json(key.second)}, {"rank", rank}});
  j["entries"] = entries;
  return j;
}

std::string betti_tsv(const BettiTable& t) {
  std::ostringstream out;
  out << "p\t|J|\tJ\trank\n";
  for (const auto& [key, rank] : t.entries())
    out << key.first << '\t' << card(key.second) << '\t' << to_bitstring(key.second, t.m()) << '\t' << rank << '\n';
  return out.str();
}

json to_json(const FlagReport& r, const CombPolytope& p) {
  json j;
  j["flag"] = r.flag_by_nonfaces;
  j["flag_by_nonfaces"] = r.flag_by_nonfaces;
  j["flag_by_links"] = r.flag_by_links;
  j["all_faces_full"] = r.all_faces_full;
  j["faces_checked"] = r.faces_checked;
  j["consistent"] = r.consistent();
  if (r.witness) {
    json w;
    w["face"] = vset_json(*r.witness);
    std::vector<std::string> labels;
    for_each_bit(*r.witness, [&](int v) { labels.push_back(p.facet_label(v)); });
    w["facet_labels"] = labels;
    json extra = json::array();
    for (VSet s : r.witness_extra) extra.push_back(vset_json(s));
    w["missing_faces"] = extra;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const ResidualReport& r) {
  json j;
  j["max_residual"] = r.max_residual;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["zero_coords"] = r.zero_coords;
  j["clamps"] = r.clamps;
  j["r"] = r.r;
  j["frame_order"] = r.frame_order;
  return j;
}

json to_json(const FaceEmbeddingData& e) {
  json j;
  j["face"] = vset_json(e.s);
  j["r"] = e.r;
  std::vector<int> order, phi, other;
  for (int x : e.frame.order) order.push_back(x + 1);
  for (int x : e.face_facets) phi.push_back(x + 1);
  for (int x : e.other_facets) other.push_back(x + 1);
  j["frame"] = {{"T", matrix_json(e.frame.t_mat)}, {"t", vector_json(e.frame.t_vec)}, {"order", order}};
  j["phi"] = phi;
  j["other_facets"] = other;
  j["A_I"] = matrix_json(e.a_i);
  j["b_I"] = vector_json(e.b_i);
  j["A_II"] = matrix_json(e.a_ii);
  j["b_II"] = vector_json(e.b_ii);
  j["C"] = matrix_json(e.c);
  j["D"] = vector_json(e.d);
  return j;
}

CombPolytope build_sequence(const json& spec) {
  std::string base = field(spec, "base", "").get<std::string>();
  if (base != "qn") bad("/base", "only \"qn\" is supported");
  int n = as_int(field(spec, "n", ""), "/n");
  if (n < 0) bad("/n", "must be nonnegative");
  CombPolytope p = gen_qn(n);
  if (!spec.contains("ops")) return p;
  const json& ops = spec["ops"];
  if (!ops.is_array()) bad("/ops", "expected an array");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    std::string w = "/ops/" + std::to_string(i);
    if (ops[i].contains("product")) {
      p = product_with_interval(p);
    } else if (ops[i].contains("fc")) {
      const json& f = ops[i]["fc"];
      int facet = auto_facet(p);
      if (f.contains("facet") && !(f["facet"].is_string() && f["facet"] == "auto")) {
        facet = as_int(f["facet"], w + "/fc/facet") - 1;
        if (facet < 0 || facet >= p.m()) bad(w + "/fc/facet", "facet out of range");
      }
      p = fc(p, facet);
    } else {
      bad(w, "unknown operation");
    }
  }
  return p;
}

json to_json(const Loaded& x) {
  return std::visit([](const auto& v) { return to_json(v); }, x);
}

std::vector<CorpusItem> standard_corpus() {
  std::vector<CorpusItem> c;
  for (int n = 2; n <= 5; ++n) c.push_back({"q" + std::to_string(n), gen_qn(n)});
  c.push_back({"triangle", simplex_polytope(2)});
  c.push_back({"tetrahedron", simplex_polytope(3)});
  c.push_back({"pentagon", pentagon_hrep()});
  c.push_back({"hexagon", polygon_hrep(6)});
  c.push_back({"heptagon", polygon_hrep(7)});
  c.push_back({"square", cube_hrep(2)});
  c.push_back({"cube3", cube_hrep(3)});
  c.push_back({"cube4", cube_hrep(4)});
  c.push_back({"prism", prism_hrep()});
  c.push_back({"tetrahedron_x_i", product_with_interval(simplex_polytope(3))});
  c.push_back({"pentagon_x_i", product_with_interval(nerve_from_hrep(pentagon_hrep()))});
  c.push_back({"q3_x_i", product_with_interval(gen_qn(3))});
  c.push_back({"fc_q2", fc(gen_qn(2), auto_facet(gen_qn(2)))});
  c.push_back({"fc2_q2", fc_power(gen_qn(2), 2)});
  c.push_back({"fc_q3", fc_power(gen_qn(3), 1)});
  c.push_back({"fc2_q3", fc_power(gen_qn(3), 2)});
  c.push_back({"fc_triangle", fc(simplex_polytope(2), 0)});
  c.push_back({"fc_pentagon_f3", fc(nerve_from_hrep(pentagon_hrep()), 2)});
  c.push_back({"seq_s_101", sequence_s({1, 0, 1})});
  c.push_back({"seq_s_1100", sequence_s({1, 1, 0, 0})});
  c.push_back({"seq_k_3_2", sequence_k(3, 2)});
  return c;
}

json make_report(const std::string& command, const std::vector<InputRef>& inputs, std::uint64_t seed,
                 const json& result, double millis) {
  json j;
  j["command"] = command;
  json in = json::array();
  for (const auto& i : inputs) in.push_back({{"path", i.path}, {"sha256", i.sha256}});
  j["inputs"] = in;
  j["seed"] = seed;
  j["tool_version"] = kToolVersion;
  j["result"] = result;
  j["timing"] = {{"wall_ms", millis}};
  return j;
}

void corpus_write(const fs::path& root, const std::vector<std::pair<std::string, json>>& items) {
  fs::create_directories(root);
  json manifest;
  json entries = json::array();
  std::set<std::string> names;
  for (const auto& [name, doc] : items) {
    if (!names.insert(name).second) throw std::invalid_argument("duplicate corpus name " + name);
    std::string text = doc.dump(1) + "\n";
    std::string file = name + ".json";
    write_file(root / file, text);
    std::string kind = doc.contains("A") ? "hpolytope" : doc.contains("nerve") ? "polytope" : "complex";
    entries.push_back({{"name", name}, {"file", file}, {"kind", kind}, {"sha256", sha256_hex(text)}});
  }
  manifest["entries"] = entries;
  write_file(root / "manifest.json", manifest.dump(1) + "\n");
}

std::vector<CorpusEntry> corpus_manifest(const fs::path& root) {
  json m = load_json(root / "manifest.json");
  std::vector<CorpusEntry> out;
  const json& entries = field(m, "entries", "manifest");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& e = entries[i];
    std::string w = "manifest/entries/" + std::to_string(i);
    out.push_back({field(e, "name", w).get<std::string>(), field(e, "file", w).get<std::string>(),
                   e.value("kind", std::string("complex")), field(e, "sha256", w).get<std::string>()});
  }
  return out;
}

std::vector<CorpusProblem> corpus_verify(const fs::path& root) {
  std::vector<CorpusProblem> problems;
  std::vector<CorpusEntry> entries;
  try {
    entries = corpus_manifest(root);
  } catch (const std::exception& e) {
    return {{"manifest", e.what()}};
  }
  std::set<std::string> names;
  for (const auto& e : entries) {
    if (!names.insert(e.name).second) problems.push_back({e.name, "duplicate name"});
    fs::path p = root / e.file;
    if (!fs::exists(p)) {
      problems.push_back({e.name, "missing file " + e.file});
      continue;
    }
    std::string text = read_file(p);
    if (sha256_hex(text) != e.sha256) {
      problems.push_back({e.name, "hash mismatch"});
      continue;
    }
    try {
      load_any(parse_json(text, p.string()));
    } catch (const std::exception& ex) {
      problems.push_back({e.name, ex.what()});
    }
  }
  return problems;
}

template json to_json<Gf2>(const KoszulElement<Gf2>&);
template json to_json<Rational>(const KoszulElement<Rational>&);
template KoszulElement<Gf2> element_from_json<Gf2>(const json&, int);
template KoszulElement<Rational> element_from_json<Rational>(const json&, int);
template json to_json<Gf2>(const DefiningSystem<Gf2>&);
template json to_json<Rational>(const DefiningSystem<Rational>&);
template json to_json<Gf2>(const MasseyReport<Gf2>&);
template json to_json<Rational>(const MasseyReport<Rational>&);

}  // namespace mac
