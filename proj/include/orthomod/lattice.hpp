#pragma once

#include <vector>

#include "orthomod/mat.hpp"

namespace omod {

/// Hermite form of the row lattice of A: echelon, positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows dropped.
MatI hnf_rows(const MatI& A);

/// Reduce v modulo the row lattice given by its Hermite form H.
/// The result is the canonical coset representative (zero iff v is in the lattice).
std::vector<Int> reduce_mod_lattice(const MatI& H, const std::vector<Int>& v);

/// Invariant factors d1 | d2 | ... of the subgroup generated by the rows of A
/// inside Z^c (Smith normal form diagonal, zeros omitted).
std::vector<Int> smith_invariants(const MatI& A);

inline bool lattice_equal(const MatI& A, const MatI& B) { return hnf_rows(A) == hnf_rows(B); }

struct LatticeImage {
  MatI hnf;
  std::vector<Int> invariants;
  bool diagonal = false;          // Hermite basis is diagonal
  std::vector<Int> diag;          // the diagonal, when it is
};

/// Image lattice (Z^k)·S, optionally post-multiplied by a second matrix.
LatticeImage z_lattice_image(const MatI& S, const MatI* post = nullptr);

/// Membership of a matrix in the lattice { X * G : X integral }, i.e. every
/// row of M lies in the row lattice of G.
bool in_matrix_lattice(const MatI& M, const MatI& G);

}  // namespace omod
