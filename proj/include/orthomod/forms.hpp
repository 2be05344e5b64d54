#pragma once

#include <string>
#include <vector>

#include "orthomod/symplectic.hpp"

namespace omod {

/// Even symmetric bilinear lattice with a fixed positive 2-plane (when the
/// signature is (2,n)) used to pin the connected component SO0.
struct EvenForm {
  MatI gram;
  int p = 0, q = 0;     // signature
  std::string name;
  bool has_plane = false;
  MatI plane;           // rows span a positive definite 2-plane

  int dim() const { return gram.r; }
};

/// Validates symmetry and even diagonal, computes the signature exactly, and
/// picks a positive 2-plane for indefinite forms of signature (2,n).
EvenForm make_even_form(const MatI& gram, const std::string& name);

std::pair<int, int> signature_of(const MatI& gram);

// ---- the standard forms of the construction ----

MatI gram_U2();                      // hyperbolic plane [[0,1],[1,0]]
MatI gram_U2_scaled(long N);         // [[0,N],[N,0]]
MatI gram_SK(long m);                // trace form of O_K, [[2,t],[t,2n]]
MatI gram_T(long m, long N);         // trace form of I_N, [[2N,t],[t,2n/N]]
MatI gram_hurwitz_S();               // trace form of the Hurwitz basis (1,i,j,w)

MatI gram_S0(GroupKind kind, long m = 0);   // U + (-2) / U + (-S_K) / U + (-S)
MatI gram_S1(GroupKind kind, long m = 0);   // U + S0
MatI diag_concat(const std::vector<MatI>& blocks);
MatI scaled_gram(const MatI& g, long N);

EvenForm form_S1(GroupKind kind, long m = 0);
EvenForm form_thm1c(long n, long N);         // U(N) + U(n) + (-2)
EvenForm form_thm2c(long m, long n, long N); // U(N) + U(n) + (-S_K)
EvenForm form_thm3(long m, long N);          // U(N) + U(N) + (-T)
EvenForm form_cor2();                        // U(2) + U(2) + (-S)
EvenForm form_remark_a3(long m, long N);     // U(N) + U(N) + diag(-2N, -2m/N)

/// Named lookup for the CLI; throws Parameter for unknown names.
EvenForm build_form(const std::string& name, long m, long n, long N);

// ---- membership predicates ----

bool is_orthogonal(const MatI& U, const EvenForm& f);    // U^t G U = G, det U = 1
bool is_so0(const MatI& U, const EvenForm& f);           // + preserves the component

/// Discriminant kernel of scale*gram: SO0 and U - I integral against
/// (scale*gram)^-1, i.e. every row of U - I in the row lattice of scale*gram.
bool in_discriminant_kernel(const MatI& U, const EvenForm& f, long scale = 1);

/// Variant with a unit scalar: SO0(S1) and U = rho*I mod N*S1 for some odd
/// rho with rho^2 = 1 mod N. Returns the witness rho through `rho_out`.
bool in_kernel_variant23(const MatI& U, const EvenForm& f, long N, Int* rho_out = nullptr);

/// Conjugated kernel test: W = F^-1 U F (invert_left) or F U F^-1, then W must
/// be integral and in the discriminant kernel of `inner`.
bool conjugated_kernel_test(const MatQ& U, const EvenForm& inner, const MatQ& F,
                            bool invert_left);

MatQ diag_rational(const std::vector<Rat>& d);

/// All determinant-1 automorphs of a positive definite even form (exhaustive
/// backtracking; intended for small ranks).
std::vector<MatI> enumerate_aut(const EvenForm& f);

}  // namespace omod
