#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mac/simplicial_complex.hpp"

namespace mac {

// A simple polytope known through its labelled nerve.
class CombPolytope {
 public:
  CombPolytope() = default;
  // Throws unless the nerve is pure of dimension n-1 without ghost vertices.
  CombPolytope(int n, SimplicialComplex nerve);

  int n() const { return n_; }
  int m() const { return nerve_.m(); }
  const SimplicialComplex& nerve() const { return nerve_; }
  std::string facet_label(int i) const { return nerve_.label(i); }
  int find_facet(const std::string& label) const;

  friend bool operator==(const CombPolytope& a, const CombPolytope& b) {
    return a.n_ == b.n_ && a.nerve_ == b.nerve_ && a.nerve_.labels() == b.nerve_.labels();
  }

 private:
  int n_ = 0;
  SimplicialComplex nerve_;
};

// Truncation order used to realize the 2-truncated cube Q^n: pairs (k,l), 1 <= k < l <= n,
// (k,l) != (1,n); the cut at (k,l) removes the face {x_k = 0, x_l = 1}.
struct Cut {
  int k, l;
  friend bool operator==(const Cut& a, const Cut& b) { return a.k == b.k && a.l == b.l; }
};
std::vector<Cut> qn_cuts(int n);
// Cuts listed deepest first.
std::vector<Cut> qn_truncation_order(int n);
// Vertex index (0-based) of a cut in the nerve of gen_qn(n).
int qn_cut_vertex(int n, Cut c);
std::string qn_cut_label(int n, Cut c);

// Nerve built as the clique complex of the quadratic Stanley-Reisner generators.
CombPolytope gen_qn(int n);
// The quadratic generators of I_{Q^n}, as 0-based vertex pairs.
std::vector<VSet> qn_generators(int n);

// The n-simplex: n+1 facets, every n of them meeting at a vertex.
CombPolytope simplex_polytope(int n);

CombPolytope product_with_interval(const CombPolytope& p);

// Cuts the codimension-2 face F_i x {1} of P x I (facet i is 0-based).
CombPolytope fc(const CombPolytope& p, int facet);

struct FacetPolicy {
  bool automatic = true;
  int facet = 0;  // 0-based, used when !automatic
  static FacetPolicy fixed(int f) { return {false, f}; }
};
// Facet chosen by the automatic policy: the newest cut vertex, else facet 1.
int auto_facet(const CombPolytope& p);
CombPolytope fc_power(const CombPolytope& p, int k, FacetPolicy policy = {});

// P_s^n for a 0/1 prefix s = (s_1, ..., s_n).
CombPolytope sequence_s(const std::vector<int>& s);
// P_k^n = fc^{k-1}(Q^n).
CombPolytope sequence_k(int k, int n);

struct FaceMap {
  VSet s = 0;                      // facets containing the face
  int r = 0;                       // face dimension
  std::vector<int> phi;            // face facet -> ambient facet
  VSet image() const;
};

struct Face {
  CombPolytope polytope;
  FaceMap map;
};

Face face_of(const CombPolytope& p, VSet s);

// Faces of the complex Phi(K_F) in ambient labels.
std::vector<VSet> phi_image_faces(const CombPolytope& p, const FaceMap& f);

struct FullnessCheck {
  bool full = false;
  bool by_images = false;       // Phi(K_F) equals the full subcomplex
  bool by_intersections = false;  // every face of K on phi[m(r)] stays a face after adding S
  std::vector<VSet> extra;      // minimal faces of the full subcomplex missing from Phi(K_F)
};

FullnessCheck face_fullness(const CombPolytope& p, VSet s);
bool is_face_full(const CombPolytope& p, VSet s);

struct FlagReport {
  bool flag_by_nonfaces = false;
  bool flag_by_links = false;
  bool all_faces_full = false;
  long faces_checked = 0;
  std::optional<VSet> witness;           // first non-full face in canonical order
  std::vector<VSet> witness_extra;       // its missing faces
  bool consistent() const {
    return flag_by_nonfaces == flag_by_links && flag_by_nonfaces == all_faces_full;
  }
};

FlagReport flag_criterion_report(const CombPolytope& p, int threads = 1);

}  // namespace mac
