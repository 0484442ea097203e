#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mac/field.hpp"
#include "mac/linalg.hpp"
#include "mac/polytope.hpp"

namespace mac {

using QVec = std::vector<Rational>;
using QMat = Matrix<Rational>;

struct HVertex {
  QVec x;
  VSet facets = 0;
};

// P = {x : A x + b >= 0}, validated bounded, irredundant and simple on construction.
class HPolytope {
 public:
  HPolytope() = default;
  HPolytope(int n, QMat a, QVec b, std::vector<std::string> labels = {});

  int n() const { return n_; }
  int m() const { return static_cast<int>(a_.rows()); }
  const QMat& a() const { return a_; }
  const QVec& b() const { return b_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<HVertex>& vertices() const { return vertices_; }

  // A x + b
  QVec slack(const QVec& x) const;
  bool contains(const QVec& x) const;

 private:
  int n_ = 0;
  QMat a_;
  QVec b_;
  std::vector<std::string> labels_;
  std::vector<HVertex> vertices_;
};

// Brute force over n-subsets of facets; throws on empty, unbounded, non-simple or redundant input.
std::vector<HVertex> vertex_enumeration(int n, const QMat& a, const QVec& b);

CombPolytope nerve_from_hrep(const HPolytope& p);

// Rows c_t with c_t . y = d_t for every y = A x + b.
struct QuadricSystem {
  QMat c;
  QVec d;
};

QuadricSystem quadric_system(const HPolytope& p);

std::vector<std::complex<double>> lift_point(const HPolytope& p, const QVec& x, const std::vector<double>& theta);

// x' = T x + t, with the rows of T and entries of t taken from the facets through a vertex.
struct FrameChange {
  QMat t_mat;
  QVec t_vec;
  std::vector<int> order;  // ambient facets whose slacks become the new coordinates
  VSet vertex_facets = 0;
};

struct FaceEmbeddingData {
  FrameChange frame;
  QMat a_new;  // A in the new frame
  QVec b_new;
  VSet s = 0;
  int r = 0;
  std::vector<int> face_facets;   // phi: face facet alpha -> ambient facet
  std::vector<int> other_facets;  // facets missing the face and not in S
  QMat a_i;                       // m(r) x r
  QVec b_i;
  QMat a_ii;
  QVec b_ii;
  QMat c;  // r x m(r)
  QVec d;
  std::vector<int> inverse_rows;  // rows of A_I used for the left inverse
  std::vector<VSet> face_vertex_sets;
  std::vector<QVec> face_vertices;  // vertices of F in the first r new coordinates
};

FaceEmbeddingData face_embedding_data(const HPolytope& p, VSet s);

// i_C: Z_F -> Z_P for a point w of the face's moment-angle manifold.
// clamps counts negative radicands set to zero.
std::vector<std::complex<double>> apply_embedding(const FaceEmbeddingData& e, int m,
                                                  const std::vector<std::complex<double>>& w,
                                                  long* clamps = nullptr);

// |z_j|^2 as an affine function of the face coordinates: coefficient rows (r) and constant.
struct AffineForm {
  QVec coef;
  Rational constant;
};
std::vector<AffineForm> embedding_forms(const FaceEmbeddingData& e, int m);

struct ResidualReport {
  double max_residual = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<int> zero_coords;  // 1-based, zero in every sample
  long clamps = 0;
  int r = 0;
  std::vector<int> frame_order;  // 1-based
};

ResidualReport embed_and_check(const HPolytope& p, VSet s, long samples, std::uint64_t seed, int threads = 1);

// Standard realizations.
HPolytope cube_hrep(int n);
HPolytope pentagon_hrep();
HPolytope prism_hrep();
HPolytope polygon_hrep(int k);
// [0,1]^n with the cut (k,l) given by x_k - x_l + 1 - 3^{-t-1} >= 0, t its position in the truncation order.
HPolytope qn_realization(int n);

}  // namespace mac
