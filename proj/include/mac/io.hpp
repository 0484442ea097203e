#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mac/geometry.hpp"
#include "mac/hochster.hpp"
#include "mac/massey.hpp"
#include "mac/polytope.hpp"
#include "mac/simplicial_complex.hpp"

namespace mac {

using json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.3.0";

// Carries file/line/column context for malformed input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, int line, int col, const std::string& what);
  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  std::string file_;
  int line_, col_;
};

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);
std::string sha256_hex(const std::string& data);

// Parses JSON text; syntax errors are rethrown as ParseError with line and column.
json parse_json(const std::string& text, const std::string& origin = "<input>");
json load_json(const std::filesystem::path& p);

json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

json to_json(const CombPolytope& p);
CombPolytope polytope_from_json(const json& j);

json to_json(const HPolytope& p);
HPolytope hpolytope_from_json(const json& j);

// Whatever a file holds, in the most specific form available.
using Loaded = std::variant<SimplicialComplex, CombPolytope, HPolytope>;
Loaded load_any(const json& j);
SimplicialComplex nerve_of(const Loaded& x);
// Combinatorial polytope for polytope-valued inputs; throws for bare complexes.
CombPolytope polytope_of(const Loaded& x);

template <class F>
json to_json(const KoszulElement<F>& x);
template <class F>
KoszulElement<F> element_from_json(const json& j, int m);

template <class F>
json to_json(const DefiningSystem<F>& s);
template <class F>
json to_json(const MasseyReport<F>& r);

json to_json(const BettiTable& t);
// Columns p, |J|, J as bitstring (vertex 1 first), rank.
std::string betti_tsv(const BettiTable& t);

json to_json(const FlagReport& r, const CombPolytope& p);
json to_json(const ResidualReport& r);
json to_json(const FaceEmbeddingData& e);

// {"base": "qn", "n": int, "ops": [{"fc": {"facet": int | "auto"}}, {"product": {}}]}; facets 1-based.
CombPolytope build_sequence(const json& spec);

json to_json(const Loaded& x);

struct CorpusItem {
  std::string name;
  Loaded value;
};

// The built-in polytope collection used by the acceptance suite and `corpus build`.
std::vector<CorpusItem> standard_corpus();

struct InputRef {
  std::string path;
  std::string sha256;
};

// Report envelope; timing is kept out of the payload so reruns compare equal.
json make_report(const std::string& command, const std::vector<InputRef>& inputs, std::uint64_t seed,
                 const json& result, double millis);

struct CorpusEntry {
  std::string name;
  std::string file;
  std::string kind;
  std::string sha256;
};

struct CorpusProblem {
  std::string name;
  std::string what;
};

// Writes each item as <name>.json plus manifest.json.
void corpus_write(const std::filesystem::path& root, const std::vector<std::pair<std::string, json>>& items);
std::vector<CorpusEntry> corpus_manifest(const std::filesystem::path& root);
// Empty when the corpus is intact.
std::vector<CorpusProblem> corpus_verify(const std::filesystem::path& root);

}  // namespace mac
