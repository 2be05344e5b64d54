#pragma once

#include <string>
#include <vector>

#include "orthomod/lattice.hpp"
#include "orthomod/mat.hpp"
#include "orthomod/rings.hpp"

namespace omod {

inline Rat inv_field(const Rat& x) {
  if (x == 0) throw Error(ErrorCode::NotInvertible, "division by zero");
  return 1 / x;
}
inline QuadInt inv_field(const QuadInt& x) { return quad_inv(x); }
inline CRat inv_field(const CRat& x) { return crat_inv(x); }
inline F4Elem inv_field(const F4Elem& x) { return f4_inv(x); }

/// 2x2 adjoint (swap diagonal, negate off-diagonal). For quaternionic entries
/// the input must be Hermitian.
template <class T>
Mat<T> adjoint2(const Mat<T>& X) {
  if (X.r != 2 || X.c != 2) throw Error(ErrorCode::Parameter, "adjoint2 needs a 2x2 matrix");
  Mat<T> A(2, 2);
  A.at(0, 0) = X.at(1, 1);
  A.at(0, 1) = -X.at(0, 1);
  A.at(1, 0) = -X.at(1, 0);
  A.at(1, 1) = X.at(0, 0);
  return A;
}

Mat<Quaternion> adjoint2_hermitian(const Mat<Quaternion>& X);

template <class T>
T det2(const Mat<T>& X) {
  return X.at(0, 0) * X.at(1, 1) - X.at(0, 1) * X.at(1, 0);
}

/// Determinant over a commutative field via Gaussian elimination (exact).
template <class T>
T det_field(Mat<T> A) {
  if (A.r != A.c) throw Error(ErrorCode::Parameter, "determinant of non-square matrix");
  T det(1);
  for (int col = 0; col < A.c; ++col) {
    int piv = -1;
    for (int i = col; i < A.r; ++i)
      if (!is_zero(A.at(i, col))) { piv = i; break; }
    if (piv < 0) return T(0);
    if (piv != col) {
      for (int k = 0; k < A.c; ++k) std::swap(A.at(piv, k), A.at(col, k));
      det = -det;
    }
    T p = A.at(col, col);
    det = det * p;
    T pinv = inv_field(p);
    for (int i = col + 1; i < A.r; ++i) {
      T f = A.at(i, col) * pinv;
      if (is_zero(f)) continue;
      for (int k = col; k < A.c; ++k) A.at(i, k) = A.at(i, k) - f * A.at(col, k);
    }
  }
  return det;
}

/// Inverse over a commutative field (exact Gauss-Jordan).
template <class T>
Mat<T> inv_mat_field(Mat<T> A) {
  if (A.r != A.c) throw Error(ErrorCode::Parameter, "inverse of non-square matrix");
  int n = A.r;
  Mat<T> R = Mat<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!is_zero(A.at(i, col))) { piv = i; break; }
    if (piv < 0) throw Error(ErrorCode::NotInvertible, "singular matrix");
    if (piv != col)
      for (int k = 0; k < n; ++k) {
        std::swap(A.at(piv, k), A.at(col, k));
        std::swap(R.at(piv, k), R.at(col, k));
      }
    T pinv = inv_field(A.at(col, col));
    for (int k = 0; k < n; ++k) {
      A.at(col, k) = pinv * A.at(col, k);
      R.at(col, k) = pinv * R.at(col, k);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      T f = A.at(i, col);
      if (is_zero(f)) continue;
      for (int k = 0; k < n; ++k) {
        A.at(i, k) = A.at(i, k) - f * A.at(col, k);
        R.at(i, k) = R.at(i, k) - f * R.at(col, k);
      }
    }
  }
  return R;
}

// ---- the vee embedding H -> C^{2x2}, extended entrywise ----

Mat<CRat> vee(const Quaternion& q);
Mat<CRat> vee(const Mat<Quaternion>& X);
/// Read a quaternion back from its vee image; checks the block pattern.
Quaternion unvee(const Mat<CRat>& B);
Mat<Quaternion> unvee_mat(const Mat<CRat>& V);

/// det of the vee image (always real for quaternionic input).
Rat det_vee(const Mat<Quaternion>& X);

/// Inverse of a quaternionic matrix, via the vee embedding.
Mat<Quaternion> quat_mat_inv(const Mat<Quaternion>& X);

/// Determinant of a Hermitian 2x2 quaternionic matrix: x11 x22 - x12 conj(x12).
Rat det_hermitian2(const Mat<Quaternion>& X);

/// Exact nonnegative integer square root of det(vee X); throws
/// NotLemmaTwoBlock when det(vee X) is not a perfect square.
Int sqrt_det_vee(const Mat<Quaternion>& X);

/// Content: largest positive integer l with X/l entrywise Hurwitz.
Int content_rho(const Mat<Quaternion>& X);

enum class ElemDivShape { DiagInt, DiagOnePlusI, Other };

struct ElemDivResult {
  Mat<Quaternion> U, V, D;
  ElemDivShape shape = ElemDivShape::Other;
  Int m = 0, n = 0;  // set for the two canonical shapes
};

/// Two-sided diagonalization U X V = D over the Hurwitz order by
/// norm-Euclidean reduction; U, V unimodular. Canonical shapes
/// diag(m, mn) and diag(m(1+i), mn(1+i)) (n odd) are recognized and
/// unit-normalized; anything else is reported as-is.
ElemDivResult hurwitz_elementary_divisors(const Mat<Quaternion>& X);

struct Lemma2Report {
  Int sqrt_det;
  bool sqrt_is_integer = false;       // (a)
  bool inverse_integral = false;      // (b)
  bool contents_match = false;        // (c)
  Int rho_x = 0, rho_inv = 0, elem_div_m = 0;
  bool all() const { return sqrt_is_integer && inverse_integral && contents_match; }
};

Lemma2Report lemma2_checks(const Mat<Quaternion>& X);

}  // namespace omod
