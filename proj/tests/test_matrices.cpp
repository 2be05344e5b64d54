#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "orthomod/matrices.hpp"
#include "orthomod/symplectic.hpp"

using namespace omod;

namespace {

Quaternion qi() { return {Rat(0), Rat(1), Rat(0), Rat(0)}; }
Quaternion qj() { return {Rat(0), Rat(0), Rat(1), Rat(0)}; }
Quaternion qk() { return {Rat(0), Rat(0), Rat(0), Rat(1)}; }

Mat<Quaternion> qmat(Quaternion a, Quaternion b, Quaternion c, Quaternion d) {
  return Mat<Quaternion>(2, 2, {a, b, c, d});
}

}  // namespace

TEST_CASE("adjoint identity") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    MatQ X(2, 2);
    for (auto& e : X.e) e = Rat(rng.range(-9, 9), rng.range(1, 4));
    CHECK(X * adjoint2(X) == MatQ::identity(2).scaled(det2(X)));
  }
}

TEST_CASE("vee embedding is a ring homomorphism") {
  Rng rng(9);
  auto rand_q = [&] {
    return Quaternion(Rat(rng.range(-5, 5)), Rat(rng.range(-5, 5)), Rat(rng.range(-5, 5)),
                      Rat(rng.range(-5, 5)));
  };
  for (int t = 0; t < 100; ++t) {
    Quaternion a = rand_q(), b = rand_q();
    CHECK(vee(a * b) == vee(a) * vee(b));
    CHECK(vee(a + b) == vee(a) + vee(b));
    CHECK(unvee(vee(a)) == a);
  }
  Mat<Quaternion> X = qmat(rand_q(), rand_q(), rand_q(), rand_q());
  Mat<Quaternion> Y = qmat(rand_q(), rand_q(), rand_q(), rand_q());
  CHECK(vee(X * Y) == vee(X) * vee(Y));
  CHECK(unvee_mat(vee(X)) == X);
  CHECK(det_vee(X * Y) == det_vee(X) * det_vee(Y));
}

TEST_CASE("hermitian determinant") {
  Mat<Quaternion> X = qmat(Quaternion(2), Quaternion(1) + qi(), Quaternion(1) - qi(), Quaternion(3));
  CHECK(det_hermitian2(X) == 4);
  CHECK(det_vee(X) == 16);  // det vee = (hermitian det)^2
}

TEST_CASE("sqrt det vee counterexample value") {
  Quaternion d1 = Quaternion(1) + Quaternion(Rat(15)) * (Quaternion(Rat(20)) * qi() +
                                                         Quaternion(Rat(76)) * qj() +
                                                         Quaternion(Rat(280)) * qk());
  Quaternion d2 = Quaternion(1) + Quaternion(Rat(15)) * quat_omega();
  Mat<Quaternion> X = qmat(d1, Quaternion(0), Quaternion(0), d2);
  CHECK(sqrt_det_vee(X) == 67721);
  CHECK(67721 % 15 == 11);
}

TEST_CASE("quaternionic matrix inverse") {
  Mat<Quaternion> X = qmat(quat_omega(), qi(), Quaternion(0), Quaternion(1) - qj());
  Mat<Quaternion> Y = quat_mat_inv(X);
  CHECK(X * Y == Mat<Quaternion>::identity(2));
  CHECK(Y * X == Mat<Quaternion>::identity(2));
}

TEST_CASE("content") {
  CHECK(content_rho(Mat<Quaternion>::identity(2).scaled(Quaternion(2))) == 2);
  CHECK(content_rho(qmat(Quaternion(1) + qi(), Quaternion(0), Quaternion(0),
                         Quaternion(1) + qi())) == 1);
  long m = 3, n = 2;
  Mat<Quaternion> X = qmat(Quaternion(2), Quaternion(1) + qi(), Quaternion(1) - qi(),
                           Quaternion(Rat(n + 1)))
                          .scaled(Quaternion(Rat(m)));
  CHECK(content_rho(X) == m);
  // half-integer entries: content of 2*omega*I is 1... times 2
  CHECK(content_rho(Mat<Quaternion>::identity(2).scaled(quat_omega() * Quaternion(2))) == 2);
}

TEST_CASE("elementary divisors, canonical shapes") {
  Mat<Quaternion> X = qmat(Quaternion(3), Quaternion(0), Quaternion(0), Quaternion(6));
  ElemDivResult r = hurwitz_elementary_divisors(X);
  CHECK(r.shape == ElemDivShape::DiagInt);
  CHECK(r.m == 3);
  CHECK(r.n == 2);
  CHECK(r.U * X * r.V == r.D);

  long m = 2, n = 3;
  Mat<Quaternion> Y = qmat(Quaternion(2), Quaternion(1) + qi(), Quaternion(1) - qi(),
                           Quaternion(Rat(n + 1)))
                          .scaled(Quaternion(Rat(m)));
  ElemDivResult s = hurwitz_elementary_divisors(Y);
  CHECK(s.shape == ElemDivShape::DiagOnePlusI);
  CHECK(s.m == m);
  CHECK(s.n == n);
  CHECK(s.U * Y * s.V == s.D);
}

TEST_CASE("elementary divisors on random unimodular disguises") {
  Rng rng(31);
  const auto& units = hurwitz_units();
  for (int t = 0; t < 60; ++t) {
    long m = rng.range(1, 4), n = rng.range(1, 4);
    Mat<Quaternion> D = qmat(Quaternion(Rat(m)), Quaternion(0), Quaternion(0),
                             Quaternion(Rat(m * n)));
    // multiply by random unimodular matrices: units and shears
    Mat<Quaternion> X = D;
    for (int s = 0; s < 4; ++s) {
      Mat<Quaternion> E = Mat<Quaternion>::identity(2);
      if (rng.coin()) {
        E.at(0, 1) = units[rng.below(24)];
      } else {
        E.at(1, 0) = units[rng.below(24)];
      }
      X = rng.coin() ? E * X : X * E;
      Mat<Quaternion> U = Mat<Quaternion>::identity(2);
      U.at(0, 0) = units[rng.below(24)];
      U.at(1, 1) = units[rng.below(24)];
      X = rng.coin() ? U * X : X * U;
    }
    ElemDivResult r = hurwitz_elementary_divisors(X);
    CHECK(r.U * X * r.V == r.D);
    CHECK(r.shape == ElemDivShape::DiagInt);
    CHECK(r.m == m);
    CHECK(r.n == n);
  }
}

TEST_CASE("lemma 2 checks on symplectic blocks") {
  Rng rng(77);
  int tested = 0;
  for (int t = 0; t < 40; ++t) {
    GroupElem g = sample_word_rng(GroupKind::QuatSp, 0, 5, rng);
    const auto& M = g.quat();
    for (int bi : {0, 1})
      for (int bj : {0, 1}) {
        Mat<Quaternion> X = M.block(2 * bi, 2 * bj, 2, 2);
        if (det_vee(X) == 0) continue;
        Lemma2Report rep = lemma2_checks(X);
        CHECK(rep.all());
        ++tested;
      }
  }
  CHECK(tested > 50);
}
