#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "orthomod/symplectic.hpp"

using namespace omod;

namespace {
const std::vector<std::pair<GroupKind, long>> kFamilies = {
    {GroupKind::Siegel, 0},       {GroupKind::Hermitian, 1}, {GroupKind::Hermitian, 3},
    {GroupKind::Hermitian, 5},    {GroupKind::QuatSp, 0},    {GroupKind::QuatSpecial, 0},
    {GroupKind::QuatExtended, 0},
};
}

TEST_CASE("kind names round trip") {
  for (auto k : {GroupKind::Siegel, GroupKind::Hermitian, GroupKind::QuatSp,
                 GroupKind::QuatSpecial, GroupKind::QuatExtended})
    CHECK(kind_from_name(kind_name(k)) == k);
  CHECK_THROWS_AS(kind_from_name("nonsense"), Error);
}

TEST_CASE("generators are members") {
  for (auto [kind, m] : kFamilies) {
    for (const GroupElem& g : generators(kind, m)) {
      MemberReport r = is_member(g);
      INFO(kind_name(kind) << " m=" << m << ": " << r.diagnostic);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("group operations") {
  for (auto [kind, m] : kFamilies) {
    Rng rng(1000 + static_cast<int>(kind));
    for (int t = 0; t < 25; ++t) {
      GroupElem a = sample_word_rng(kind, m, 5, rng);
      GroupElem b = sample_word_rng(kind, m, 5, rng);
      CHECK(is_member(a).ok);
      CHECK(is_member(group_mul(a, b)).ok);
      GroupElem e = group_mul(a, group_inverse(a));
      CHECK(group_equal(e, group_identity(kind, m)));
    }
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  GroupElem a = sample_word(GroupKind::QuatSp, 0, 7, 99);
  GroupElem b = sample_word(GroupKind::QuatSp, 0, 7, 99);
  CHECK(group_equal(a, b));
}

TEST_CASE("lambda conjugation") {
  Quaternion i(Rat(0), Rat(1), Rat(0), Rat(0)), j(Rat(0), Rat(0), Rat(1), Rat(0)),
      k(Rat(0), Rat(0), Rat(0), Rat(1));
  CHECK(lambda_conj(Quaternion(1)) == Quaternion(1));
  CHECK(lambda_conj(i) == i);
  CHECK(lambda_conj(j) == k);
  CHECK(lambda_conj(k) == -j);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    Quaternion q(Rat(rng.range(-5, 5)), Rat(rng.range(-5, 5)), Rat(rng.range(-5, 5)),
                 Rat(rng.range(-5, 5)));
    Quaternion h = rng.coin() ? q : q + quat_omega();
    CHECK(lambda_conj_inv(lambda_conj(h)) == h);
    CHECK(is_hurwitz(lambda_conj(h)));          // conjugation preserves the order
    CHECK(quat_norm(lambda_conj(h)) == quat_norm(h));
  }
}

TEST_CASE("moebius action composes") {
  for (auto [kind, m] : kFamilies) {
    Rng rng(2000 + static_cast<int>(kind));
    int done = 0;
    for (int t = 0; t < 40 && done < 15; ++t) {
      GroupElem a = sample_word_rng(kind, m, 4, rng);
      GroupElem b = sample_word_rng(kind, m, 4, rng);
      SamplePoint Z = random_sample_point(kind, m, rng);
      try {
        SamplePoint lhs = mobius(a, mobius(b, Z));
        SamplePoint rhs = mobius(group_mul(a, b), Z);
        CHECK(lhs.Z == rhs.Z);
        ++done;
      } catch (const Error&) {
        // singular CZ+D at this sample; try another
      }
    }
    CHECK(done >= 15);
  }
}

TEST_CASE("cocycle is multiplicative") {
  for (auto [kind, m] : kFamilies) {
    if (kind == GroupKind::QuatExtended) continue;  // scalar defined on the vee image only
    Rng rng(3000 + static_cast<int>(kind));
    int done = 0;
    for (int t = 0; t < 40 && done < 15; ++t) {
      GroupElem a = sample_word_rng(kind, m, 4, rng);
      GroupElem b = sample_word_rng(kind, m, 4, rng);
      SamplePoint Z = random_sample_point(kind, m, rng);
      try {
        Rat jb = cocycle(b, Z).scalar;
        Rat ja = cocycle(a, mobius(b, Z)).scalar;
        Rat jab = cocycle(group_mul(a, b), Z).scalar;
        if (jb == 0 || ja == 0) continue;
        CHECK(jab == ja * jb);
        ++done;
      } catch (const Error&) {
      }
    }
    CHECK(done >= 15);
  }
}

TEST_CASE("determinant mod wp") {
  Mat<Quaternion> I4 = Mat<Quaternion>::identity(4);
  CHECK(f4_det(I4) == F4Elem(1));
  CHECK(f4_det(I4.scaled(quat_omega())) == F4Elem::omega());  // w^4 = w
  Quaternion qi(Rat(0), Rat(1), Rat(0), Rat(0));
  CHECK(f4_det(I4.scaled(qi)) == F4Elem(1));
  // the special group filter keeps exactly the det-1 elements
  for (const GroupElem& g : generators(GroupKind::QuatSpecial, 0))
    CHECK(f4_det(g.quat()) == F4Elem(1));
}

TEST_CASE("half turn composition") {
  GroupElem h = group_identity(GroupKind::QuatExtended, 0);
  h.halfTurn = 1;
  GroupElem sq = group_mul(h, h);
  CHECK(sq.halfTurn == 0);
  // (lambda I)^2 = i I
  Mat<Quaternion> expect =
      Mat<Quaternion>::identity(4).scaled(Quaternion(Rat(0), Rat(1), Rat(0), Rat(0)));
  CHECK(sq.quat() == expect);
  GroupElem inv = group_inverse(h);
  CHECK(group_equal(group_mul(h, inv), group_identity(GroupKind::QuatExtended, 0)));
}
