#pragma once

#include <string>
#include <variant>
#include <vector>

#include "orthomod/matrices.hpp"

namespace omod {

enum class GroupKind { Siegel, Hermitian, QuatSp, QuatSpecial, QuatExtended };

inline bool is_quat_kind(GroupKind k) {
  return k == GroupKind::QuatSp || k == GroupKind::QuatSpecial || k == GroupKind::QuatExtended;
}
std::string kind_name(GroupKind k);
GroupKind kind_from_name(const std::string& s);

using GroupMat = std::variant<MatQ, Mat<QuadInt>, Mat<Quaternion>>;

/// A 4x4 symplectic-type matrix tagged with its group. For QuatExtended the
/// element is ((1+i)/sqrt 2)^halfTurn * M with M stored exactly.
struct GroupElem {
  GroupKind kind = GroupKind::Siegel;
  long m = 0;       // field parameter, Hermitian only
  int halfTurn = 0; // QuatExtended only
  GroupMat M;

  const MatQ& rat() const { return std::get<MatQ>(M); }
  const Mat<QuadInt>& quad() const { return std::get<Mat<QuadInt>>(M); }
  const Mat<Quaternion>& quat() const { return std::get<Mat<Quaternion>>(M); }
};

GroupElem make_siegel(const MatQ& M);
GroupElem make_hermitian(long m, const Mat<QuadInt>& M);
GroupElem make_quat(GroupKind kind, const Mat<Quaternion>& M, int halfTurn = 0);
GroupElem group_identity(GroupKind kind, long m = 0);

template <class T>
Mat<T> symplectic_J4() {
  Mat<T> J(4, 4);
  J.at(0, 2) = T(1);
  J.at(1, 3) = T(1);
  J.at(2, 0) = -T(1);
  J.at(3, 1) = -T(1);
  return J;
}

struct MemberReport {
  bool ok = true;
  std::string diagnostic;  // names the first violated condition
};

MemberReport is_member(const GroupElem& g);

/// J, standard translations, and GL2 embeddings for the kind; every element
/// passes is_member. For QuatSp the list also covers the three cosets mod wp.
std::vector<GroupElem> generators(GroupKind kind, long m = 0);

GroupElem group_mul(const GroupElem& a, const GroupElem& b);
GroupElem group_inverse(const GroupElem& g);
bool group_equal(const GroupElem& a, const GroupElem& b);

/// Deterministic product of `length` uniformly chosen generators / inverses.
GroupElem sample_word(GroupKind kind, long m, int length, std::uint64_t seed);
GroupElem sample_word_rng(GroupKind kind, long m, int length, Rng& rng);

/// Entrywise conjugation by lambda = (1+i)/sqrt 2 (and its inverse).
Quaternion lambda_conj(const Quaternion& q);
Quaternion lambda_conj_inv(const Quaternion& q);

// ---- sample points and the Moebius action ----

/// Symmetric / Hermitian / quaternion-Hermitian 2x2 matrix with exact
/// rational coordinates.
struct SamplePoint {
  GroupKind kind = GroupKind::Siegel;
  long m = 0;
  GroupMat Z;

  const MatQ& rat() const { return std::get<MatQ>(Z); }
  const Mat<QuadInt>& quad() const { return std::get<Mat<QuadInt>>(Z); }
  const Mat<Quaternion>& quat() const { return std::get<Mat<Quaternion>>(Z); }
};

SamplePoint make_sample_point(GroupKind kind, long m, const GroupMat& Z);
SamplePoint random_sample_point(GroupKind kind, long m, Rng& rng);

/// M<Z> = (AZ+B)(CZ+D)^-1. Siegel path cross-checks the adjoint expansion.
SamplePoint mobius(const GroupElem& g, const SamplePoint& Z);

struct CocycleResult {
  Rat scalar;               // det(CZ+D), or det((CZ+D)-vee) for quaternions
  Mat<CRat> vee_mat;        // quaternionic kinds only
  bool quaternionic = false;
};

CocycleResult cocycle(const GroupElem& g, const SamplePoint& Z);

/// det(M mod wp) in F4; defined for Hurwitz matrices.
F4Elem f4_det(const Mat<Quaternion>& M);

}  // namespace omod
