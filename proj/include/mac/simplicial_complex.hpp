#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mac/vertex_set.hpp"

namespace mac {

class SimplicialComplex {
 public:
  // The empty complex on zero vertices; its only face is the empty set.
  SimplicialComplex();

  // Builds from any generating family of faces; non-maximal members are dropped.
  // Throws if m > 64, a face leaves [m], or a vertex is a ghost while ghosts are disallowed.
  SimplicialComplex(int m, std::vector<VSet> faces, std::vector<std::string> labels = {},
                    bool allow_ghosts = false);

  int m() const { return m_; }
  const std::vector<VSet>& maximal_faces() const { return maximal_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;
  bool allows_ghosts() const { return allow_ghosts_; }

  bool contains(VSet s) const;
  // Vertices v with {v} a face.
  VSet vertex_set() const { return support_; }
  VSet ghosts() const { return full_set(m_) & ~support_; }
  int dim() const;
  bool is_pure() const;

  // All faces including the empty one, in canonical order.
  std::vector<VSet> faces() const;
  // Faces of the given cardinality, in canonical order.
  std::vector<VSet> faces_of_size(int k) const;
  // f_{-1}, f_0, ..., f_dim
  std::vector<long> f_vector() const;

  // Vertex neighbourhoods in the 1-skeleton.
  std::vector<VSet> adjacency() const;

  SimplicialComplex with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.maximal_ == b.maximal_;
  }

 private:
  int m_ = 0;
  std::vector<VSet> maximal_;  // sorted canonically
  std::vector<std::string> labels_;
  bool allow_ghosts_ = false;
  VSet support_ = 0;
};

// A complex together with the map from its vertices to vertices of a parent complex.
struct Embedded {
  SimplicialComplex complex;
  std::vector<int> parent;  // local vertex -> parent vertex (0-based)

  VSet lift(VSet local) const;
  // Parent set restricted to the local vertex set, in local indices.
  VSet lower(VSet global) const;
  VSet image() const;
};

Embedded full_subcomplex(const SimplicialComplex& k, VSet j);
// Faces of K contained in J, in parent labels and canonical order.
std::vector<VSet> faces_within(const SimplicialComplex& k, VSet j);
// Maximal faces of K_J in parent labels.
std::vector<VSet> maximal_faces_within(const SimplicialComplex& k, VSet j);

// Link of sigma on [m] \ sigma; ghosts permitted. Throws if sigma is not a face.
Embedded link(const SimplicialComplex& k, VSet sigma);
// Faces of the link in parent labels.
std::vector<VSet> link_faces(const SimplicialComplex& k, VSet sigma);

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

std::vector<VSet> minimal_nonfaces(const SimplicialComplex& k);

// Minimal nonfaces all of size two.
bool is_flag_by_nonfaces(const SimplicialComplex& k);
// Every vertex link is the full subcomplex on its vertex set.
bool is_flag_by_links(const SimplicialComplex& k);
bool is_flag(const SimplicialComplex& k);

// New vertex m+1; throws unless e is a face with two vertices.
SimplicialComplex stellar_subdivide_edge(const SimplicialComplex& k, VSet e, const std::string& new_label = {});

// Clique complex of a graph given by neighbourhood masks.
SimplicialComplex clique_complex(int m, const std::vector<VSet>& adj, std::vector<std::string> labels = {});

// Removes ghost vertices and re-indexes.
Embedded strip_ghosts(const SimplicialComplex& k);

long euler_characteristic(const SimplicialComplex& k);
// Pure, every codimension-one face in exactly two maximal faces, strongly connected.
bool is_pseudomanifold(const SimplicialComplex& k);

// f with f(K1) = K2 as sets of faces, f[v] is the image of vertex v; nothing if none exists.
std::optional<std::vector<int>> iso_check(const SimplicialComplex& a, const SimplicialComplex& b);

VSet map_set(VSet s, const std::vector<int>& f);

}  // namespace mac
