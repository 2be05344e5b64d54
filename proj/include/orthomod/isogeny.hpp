#pragma once

#include "orthomod/forms.hpp"
#include "orthomod/symplectic.hpp"

namespace omod {

/// Coordinate dimension of the Hermitian 2x2 matrices for the kind:
/// 3 (symmetric rational), 4 (quadratic field), 6 (quaternionic).
int phi_dim(GroupKind kind);

/// phi: Hermitian 2x2 -> column coordinates (z11, coords of z12, z22), with
/// z12 expanded in (1), (1, omega) or (1, i, j, omega) respectively.
std::vector<Rat> phi(const SamplePoint& Z);
SamplePoint phi_inv(GroupKind kind, long m, const std::vector<Rat>& z);

/// Matrix of Z -> A Z D^adj + B Z^adj C^adj in the phi coordinates.
MatQ k_matrix(const GroupElem& g);

/// Image of a group element in O(S1): (k+2)x(k+2) rational matrix, integral
/// on the modular group. Commutative kinds use the closed determinant
/// formulas (already invariant under M -> -M); quaternionic lifts are
/// sign-normalized (first nonzero entry positive).
struct OrthImage {
  GroupKind kind = GroupKind::Siegel;
  long m = 0;
  MatQ U;

  int dim() const { return U.r; }
  int k() const { return U.r - 2; }  // phi dimension
  Rat alpha() const { return U.at(0, 0); }
  Rat beta() const { return U.at(0, dim() - 1); }
  Rat gamma() const { return U.at(dim() - 1, 0); }
  Rat delta() const { return U.at(dim() - 1, dim() - 1); }
  std::vector<Rat> b_col() const;      // middle of the first column
  std::vector<Rat> c_col() const;      // middle of the last column
  std::vector<Rat> a_vec() const;      // a, from row 0 = (alpha, a^t S0, beta)
  std::vector<Rat> d_vec() const;      // d, from the last row
  MatQ K() const { return U.block(1, 1, k(), k()); }
};

OrthImage lift(const GroupElem& g);

bool orth_integral(const OrthImage& im);

/// The projective factor M{z} = -(1/2) z^t S0 z * gamma + d^t S0 z + delta.
Rat orth_factor(const OrthImage& im, const std::vector<Rat>& z);

/// z -> (-(1/2) z^t S0 z * b + K z + c) / M{z}; throws NotInvertible when the
/// factor vanishes.
std::vector<Rat> orth_action(const OrthImage& im, const std::vector<Rat>& z);

struct CompatReport {
  bool checked = false;   // false when CZ+D was singular at the sample point
  bool action_ok = false; // phi(M<Z>) equals the orthogonal action at phi(Z)
  bool factor_ok = false; // factor^2 equals det(CZ+D)^2 resp. det vee(CZ+D)
};

CompatReport compat_check(const GroupElem& g, const SamplePoint& Z);

}  // namespace omod
