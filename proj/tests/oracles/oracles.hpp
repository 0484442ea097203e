#pragma once

// Deliberately naive reference computations used to cross-check the library.

#include <random>
#include <string>
#include <vector>

#include "mac/field.hpp"
#include "mac/koszul.hpp"
#include "mac/simplicial_complex.hpp"

namespace oracle {

using mac::VSet;

// Faces by testing every subset of [m] against the maximal faces.
std::vector<VSet> brute_faces(const mac::SimplicialComplex& k);
bool brute_is_face(const mac::SimplicialComplex& k, VSet s);
std::vector<VSet> brute_minimal_nonfaces(const mac::SimplicialComplex& k);
bool brute_is_flag(const mac::SimplicialComplex& k);

// Stellar subdivision of an edge by explicit face lists.
mac::SimplicialComplex brute_stellar(const mac::SimplicialComplex& k, VSet e, const std::string& label);

// Q^n by truncating the cube one codimension-2 face at a time, deepest cut first.
mac::SimplicialComplex qn_by_truncation(int n);

// dim of reduced homology H~_q(K_J) from boundary matrices, indexed q+1.
std::vector<long> reduced_homology_ranks(const mac::SimplicialComplex& k, VSet j, mac::FieldTag field);

// Total Betti numbers of Z_K, indexed by degree.
std::vector<long> betti_totals(const mac::SimplicialComplex& k, mac::FieldTag field);

// Random complex on m vertices from up to `faces` random generating faces; ghosts filled with singletons.
mac::SimplicialComplex random_complex(int m, int faces, std::mt19937_64& rng);

// Random flag 2-sphere: octahedron boundary followed by random edge subdivisions.
mac::SimplicialComplex random_flag_sphere(int subdivisions, std::mt19937_64& rng);

template <class F>
mac::KoszulElement<F> random_element(const mac::SimplicialComplex& k, int terms, std::mt19937_64& rng);

// Random homogeneous element of one multidegree and one total degree.
template <class F>
mac::KoszulElement<F> random_homogeneous(const mac::SimplicialComplex& k, int terms, std::mt19937_64& rng);

}  // namespace oracle
