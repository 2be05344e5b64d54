#pragma once

#include "orthomod/isogeny.hpp"

namespace omod {

enum class Family {
  PrincipalSiegel,    // M = eps I mod N, eps^2 = 1 mod N
  Thm1c,              // Siegel congruence subgroup of type (n | N)
  PrincipalHermitian, // M = eps I mod N over O_K
  Eq14,               // Hermitian congruence subgroup of type (n | N)
  IdealPrincipal,     // M = eps I mod I_N, N squarefree | d_K
  QuatLevel,          // special quaternionic group, M = eps I mod N
  WpPrincipal,        // M = eps I mod wp, eps in {1, w, wbar}
};

struct SubgroupSpec {
  Family fam = Family::PrincipalSiegel;
  long m = 0;  // field parameter (Hermitian families)
  long n = 0;  // inner level (Thm1c / Eq14)
  long N = 0;  // level
};

SubgroupSpec parse_subgroup(const std::string& family, long m, long n, long N);
std::string spec_name(const SubgroupSpec& s);
GroupKind ambient_kind(const SubgroupSpec& s);

struct InReport {
  bool ok = false;
  std::string detail;   // violated condition, or the accepted unit witness
};

/// Membership in the congruence subgroup, including ambient membership.
InReport in_subgroup(const SubgroupSpec& s, const GroupElem& g);

/// The orthogonal-side predicate paired with the family (discriminant kernel,
/// conjugated kernel or unit variant). Quaternionic kinds are tested
/// projectively (U or -U).
bool kernel_test(const SubgroupSpec& s, const OrthImage& im);

/// A subgroup member built as a word in family-specific generators.
GroupElem sample_member(const SubgroupSpec& s, Rng& rng, int length = 6);
std::vector<GroupElem> subgroup_generators(const SubgroupSpec& s);

struct VerifyReport {
  std::string subgroup;
  std::uint64_t seed = 0;
  int forward_total = 0, forward_pass = 0, forward_fail = 0;
  int backward_total = 0, backward_hits = 0, backward_pass = 0, backward_fail = 0;
  std::vector<std::string> failures;
  bool ok() const { return forward_fail == 0 && backward_fail == 0; }
};

/// Forward: members map into the paired kernel. Backward: over mixed ambient
/// and member samples, subgroup membership and the kernel predicate agree.
VerifyReport verify_theorem(const SubgroupSpec& s, int forward_samples,
                            int backward_samples, std::uint64_t seed);

}  // namespace omod
