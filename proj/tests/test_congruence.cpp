#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "orthomod/congruence.hpp"

using namespace omod;

TEST_CASE("spec parsing and validation") {
  SubgroupSpec s = parse_subgroup("principal-siegel", 0, 0, 4);
  CHECK(s.fam == Family::PrincipalSiegel);
  CHECK(ambient_kind(s) == GroupKind::Siegel);
  CHECK_THROWS_AS(parse_subgroup("siegel-nN", 0, 5, 12), Error);    // 5 does not divide 12
  CHECK_THROWS_AS(parse_subgroup("ideal-principal", 5, 0, 3), Error);  // 3 does not divide 20
  CHECK_THROWS_AS(parse_subgroup("nonsense", 0, 0, 2), Error);
  CHECK(parse_subgroup("wp-principal", 0, 0, 0).fam == Family::WpPrincipal);
}

TEST_CASE("identity and minus identity membership") {
  for (const char* fam : {"principal-siegel", "siegel-nN", "principal-hermitian", "hermitian-nN",
                          "ideal-principal", "quat-level"}) {
    long m = (std::string(fam).find("herm") != std::string::npos ||
              std::string(fam) == "ideal-principal")
                 ? 5
                 : 0;
    long N = std::string(fam) == "ideal-principal" ? 5 : 6;
    long n = std::string(fam).find("nN") != std::string::npos ? 3 : 0;
    SubgroupSpec s = parse_subgroup(fam, m, n, N);
    GroupElem id = group_identity(ambient_kind(s), s.m);
    CHECK(in_subgroup(s, id).ok);
    GroupElem neg = id;
    // -I is congruent to (N-1) I
    switch (ambient_kind(s)) {
      case GroupKind::Siegel: neg = make_siegel(-id.rat()); break;
      case GroupKind::Hermitian: neg = make_hermitian(s.m, -id.quad()); break;
      default: neg = make_quat(id.kind, -id.quat()); break;
    }
    CHECK(in_subgroup(s, neg).ok);
  }
}

TEST_CASE("wp principal membership") {
  SubgroupSpec s = parse_subgroup("wp-principal", 0, 0, 0);
  GroupElem id = group_identity(GroupKind::QuatSp, 0);
  CHECK(in_subgroup(s, id).ok);
  GroupElem wI = make_quat(GroupKind::QuatSp, id.quat().scaled(quat_omega()));
  CHECK(in_subgroup(s, wI).ok);  // eps = omega
  Quaternion i(Rat(0), Rat(1), Rat(0), Rat(0));
  GroupElem iI = make_quat(GroupKind::QuatSp, id.quat().scaled(i));
  CHECK(in_subgroup(s, iI).ok);  // i = 1 mod wp
  Mat<Quaternion> T = Mat<Quaternion>::identity(4);
  T.at(0, 2) = Quaternion(1);  // translation by an odd quaternion
  CHECK(!in_subgroup(s, make_quat(GroupKind::QuatSp, T)).ok);
}

TEST_CASE("non-members are rejected") {
  SubgroupSpec s = parse_subgroup("principal-siegel", 0, 0, 2);
  MatQ J = symplectic_J4<Rat>();
  CHECK(!in_subgroup(s, make_siegel(J)).ok);
  OrthImage im = lift(make_siegel(J));
  CHECK(!kernel_test(s, im));
}

TEST_CASE("generators lie in their subgroup and pass the kernel test") {
  for (auto spec : {parse_subgroup("principal-siegel", 0, 0, 3),
                    parse_subgroup("siegel-nN", 0, 2, 4),
                    parse_subgroup("principal-hermitian", 3, 0, 2),
                    parse_subgroup("hermitian-nN", 1, 2, 2),
                    parse_subgroup("ideal-principal", 15, 0, 15),
                    parse_subgroup("quat-level", 0, 0, 4),
                    parse_subgroup("wp-principal", 0, 0, 0)}) {
    for (const GroupElem& g : subgroup_generators(spec)) {
      InReport r = in_subgroup(spec, g);
      INFO(spec_name(spec) << ": " << r.detail);
      CHECK(r.ok);
      CHECK(kernel_test(spec, lift(g)));
    }
  }
}

TEST_CASE("principal subgroup of level N*n is contained in the n-N subgroup") {
  SubgroupSpec big = parse_subgroup("siegel-nN", 0, 2, 4);
  SubgroupSpec small = parse_subgroup("principal-siegel", 0, 0, 8);
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    GroupElem g = sample_member(small, rng);
    CHECK(in_subgroup(small, g).ok);
    CHECK(in_subgroup(big, g).ok);
  }
}

TEST_CASE("n=1 case matches the familiar congruence subgroup") {
  SubgroupSpec s = parse_subgroup("siegel-nN", 0, 1, 3);
  auto familiar = [](const MatQ& M, long N) {
    MatQ A = M.block(0, 0, 2, 2), C = M.block(2, 0, 2, 2), D = M.block(2, 2, 2, 2);
    for (const Rat& x : C.e)
      if (mod_pos(to_int(x), N) != 0) return false;
    return mod_pos(to_int(det2(A)) - 1, N) == 0 && mod_pos(to_int(det2(D)) - 1, N) == 0;
  };
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    GroupElem g = rng.coin() ? sample_member(s, rng) : sample_word_rng(GroupKind::Siegel, 0, 5, rng);
    CHECK(in_subgroup(s, g).ok == familiar(g.rat(), 3));
  }
}

TEST_CASE("verification harness") {
  for (auto spec : {parse_subgroup("principal-siegel", 0, 0, 4),
                    parse_subgroup("hermitian-nN", 3, 3, 6),
                    parse_subgroup("quat-level", 0, 0, 3)}) {
    VerifyReport rep = verify_theorem(spec, 40, 40, 12345);
    INFO(spec_name(spec) << (rep.failures.empty() ? "" : ": " + rep.failures.front()));
    CHECK(rep.ok());
    CHECK(rep.forward_pass == 40);
    CHECK(rep.backward_hits >= 10);
  }
  // determinism
  VerifyReport a = verify_theorem(parse_subgroup("principal-siegel", 0, 0, 2), 15, 15, 9);
  VerifyReport b = verify_theorem(parse_subgroup("principal-siegel", 0, 0, 2), 15, 15, 9);
  CHECK(a.forward_pass == b.forward_pass);
  CHECK(a.backward_hits == b.backward_hits);
}
