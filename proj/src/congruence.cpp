#include "orthomod/congruence.hpp"

#include <map>
#include <sstream>

namespace omod {

namespace {

bool is_divisor_ideal_level(long m, long N) {
  return N >= 1 && is_squarefree(N) && field_discriminant(m) % N == 0;
}

}  // namespace

SubgroupSpec parse_subgroup(const std::string& family, long m, long n, long N) {
  SubgroupSpec s;
  s.m = m;
  s.n = n;
  s.N = N;
  if (family == "principal-siegel") s.fam = Family::PrincipalSiegel;
  else if (family == "siegel-nN") s.fam = Family::Thm1c;
  else if (family == "principal-hermitian") s.fam = Family::PrincipalHermitian;
  else if (family == "hermitian-nN") s.fam = Family::Eq14;
  else if (family == "ideal-principal") s.fam = Family::IdealPrincipal;
  else if (family == "quat-level") s.fam = Family::QuatLevel;
  else if (family == "wp-principal") s.fam = Family::WpPrincipal;
  else throw Error(ErrorCode::Parameter, "unknown subgroup family: " + family);

  switch (s.fam) {
    case Family::PrincipalSiegel:
    case Family::QuatLevel:
      if (N < 1) throw Error(ErrorCode::Parameter, "level N must be positive");
      break;
    case Family::Thm1c:
      if (n < 1 || N < 1 || N % n != 0)
        throw Error(ErrorCode::Parameter, "levels must satisfy n | N");
      break;
    case Family::PrincipalHermitian:
      if (N < 1 || !is_squarefree(m))
        throw Error(ErrorCode::Parameter, "need positive N and squarefree m");
      break;
    case Family::Eq14:
      if (n < 1 || N < 1 || N % n != 0 || !is_squarefree(m))
        throw Error(ErrorCode::Parameter, "need squarefree m and n | N");
      break;
    case Family::IdealPrincipal:
      if (!is_squarefree(m) || !is_divisor_ideal_level(m, N))
        throw Error(ErrorCode::Parameter, "N must be a squarefree divisor of the discriminant");
      break;
    case Family::WpPrincipal:
      break;
  }
  return s;
}

std::string spec_name(const SubgroupSpec& s) {
  std::ostringstream os;
  switch (s.fam) {
    case Family::PrincipalSiegel: os << "principal-siegel(N=" << s.N << ")"; break;
    case Family::Thm1c: os << "siegel-nN(n=" << s.n << ",N=" << s.N << ")"; break;
    case Family::PrincipalHermitian:
      os << "principal-hermitian(m=" << s.m << ",N=" << s.N << ")";
      break;
    case Family::Eq14: os << "hermitian-nN(m=" << s.m << ",n=" << s.n << ",N=" << s.N << ")"; break;
    case Family::IdealPrincipal: os << "ideal-principal(m=" << s.m << ",N=" << s.N << ")"; break;
    case Family::QuatLevel: os << "quat-level(N=" << s.N << ")"; break;
    case Family::WpPrincipal: os << "wp-principal"; break;
  }
  return os.str();
}

GroupKind ambient_kind(const SubgroupSpec& s) {
  switch (s.fam) {
    case Family::PrincipalSiegel:
    case Family::Thm1c: return GroupKind::Siegel;
    case Family::PrincipalHermitian:
    case Family::Eq14:
    case Family::IdealPrincipal: return GroupKind::Hermitian;
    case Family::QuatLevel: return GroupKind::QuatSpecial;
    case Family::WpPrincipal: return GroupKind::QuatSp;
  }
  throw Error(ErrorCode::Parameter, "unknown family");
}

// ---- congruence helpers ----

namespace {

bool int_cong(const Rat& x, const Rat& y, long mod) {
  Rat d = (x - y) / mod;
  return is_integer(d);
}

bool quad_cong(const QuadInt& x, const QuadInt& y, long mod) {
  QuadInt d = x - y;
  return int_cong(d.a, 0, mod) && int_cong(d.b, 0, mod);
}

bool quat_cong(const Quaternion& x, const Quaternion& y, long mod) {
  Quaternion d = x - y;
  for (Rat& v : d.c) v /= mod;
  return is_hurwitz(d);
}

bool quad_in_ideal(const QuadInt& x, const IdealBasis& I) {
  if (!quad_is_integral(x)) return false;
  return I.contains(quad_coords(x));
}

bool quat_in_ideal(const Quaternion& x, const IdealBasis& I) {
  if (!is_hurwitz(x)) return false;
  return I.contains(quat_coords_doubled(x));
}

// eps in [0, mod) with eps^2 = 1 (mod mod)
std::vector<long> unit_candidates(long mod) {
  std::vector<long> out;
  for (long e = 0; e < mod; ++e)
    if ((e * e - 1) % mod == 0) out.push_back(e);
  return out;
}

InReport fail(const std::string& d) { return {false, d}; }
InReport pass(const std::string& w) { return {true, w}; }

// eps I mod `mod` congruence, entrywise over the three scalar types
template <class T, class CongFn>
bool scalar_congruent(const Mat<T>& M, const T& eps, CongFn cong) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!cong(M.at(i, j), i == j ? eps : T(0))) return false;
  return true;
}

InReport check_principal_siegel(const SubgroupSpec& s, const MatQ& M) {
  for (long e : unit_candidates(s.N)) {
    if (scalar_congruent(M, Rat(e), [&](const Rat& x, const Rat& y) {
          return int_cong(x, y, s.N);
        }))
      return pass("eps=" + std::to_string(e));
  }
  return fail("not congruent to a unit multiple of I mod N");
}

InReport check_thm1c(const SubgroupSpec& s, const MatQ& M) {
  MatQ A = M.block(0, 0, 2, 2), B = M.block(0, 2, 2, 2);
  MatQ C = M.block(2, 0, 2, 2), D = M.block(2, 2, 2, 2);
  long n = s.n, N = s.N;
  if (!int_cong(det2(A), 1, N)) return fail("det A != 1 mod N");
  if (!int_cong(det2(D), 1, N)) return fail("det D != 1 mod N");
  if (!int_cong(A.at(1, 0), 0, n)) return fail("a21 != 0 mod n");
  if (!int_cong(B.at(1, 1), 0, n)) return fail("b22 != 0 mod n");
  if (!int_cong(D.at(0, 1), 0, n)) return fail("d12 != 0 mod n");
  if (!int_cong(C.at(0, 0), 0, N * n)) return fail("c11 != 0 mod Nn");
  if (!int_cong(C.at(0, 1), 0, N)) return fail("c12 != 0 mod N");
  if (!int_cong(C.at(1, 0), 0, N)) return fail("c21 != 0 mod N");
  if (!int_cong(C.at(1, 1), 0, N)) return fail("c22 != 0 mod N");
  for (long e : unit_candidates(n)) {
    if (int_cong(A.at(0, 0), e, n) && int_cong(A.at(1, 1), e, n) &&
        int_cong(D.at(0, 0), e, n) && int_cong(D.at(1, 1), e, n))
      return pass("eps=" + std::to_string(e));
  }
  return fail("diagonal entries not congruent to a common unit mod n");
}

InReport check_principal_hermitian(const SubgroupSpec& s, const Mat<QuadInt>& M) {
  for (long e : unit_candidates(s.N)) {
    if (scalar_congruent(M, QuadInt(Rat(e)), [&](const QuadInt& x, const QuadInt& y) {
          return quad_cong(x, y, s.N);
        }))
      return pass("eps=" + std::to_string(e));
  }
  return fail("not congruent to a unit multiple of I mod N");
}

InReport check_eq14(const SubgroupSpec& s, const Mat<QuadInt>& M) {
  auto A = M.block(0, 0, 2, 2), B = M.block(0, 2, 2, 2);
  auto C = M.block(2, 0, 2, 2), D = M.block(2, 2, 2, 2);
  long n = s.n, N = s.N;
  QuadInt one(1), zero(0);
  if (!quad_cong(det2(A), one, N)) return fail("det A != 1 mod N");
  if (!quad_cong(det2(D), one, N)) return fail("det D != 1 mod N");
  if (!quad_cong(A.at(1, 0), zero, n)) return fail("a21 != 0 mod n");
  if (!quad_cong(B.at(1, 1), zero, n)) return fail("b22 != 0 mod n");
  if (!quad_cong(D.at(0, 1), zero, n)) return fail("d12 != 0 mod n");
  if (!quad_cong(C.at(0, 0), zero, N * n)) return fail("c11 != 0 mod Nn");
  if (!quad_cong(C.at(0, 1), zero, N)) return fail("c12 != 0 mod N");
  if (!quad_cong(C.at(1, 0), zero, N)) return fail("c21 != 0 mod N");
  if (!quad_cong(C.at(1, 1), zero, N)) return fail("c22 != 0 mod N");
  for (long ea = 0; ea < n || (n == 1 && ea == 0); ++ea)
    for (long eb = 0; eb < n || (n == 1 && eb == 0); ++eb) {
      QuadInt eps(Rat(ea), Rat(eb), s.m);
      QuadInt nrm = eps * conj(eps);
      if (!quad_cong(nrm, one, n)) continue;
      if (quad_cong(A.at(0, 0), eps, n) && quad_cong(D.at(0, 0), eps, n) &&
          quad_cong(conj(A.at(1, 1)), eps, n) && quad_cong(conj(D.at(1, 1)), eps, n))
        return pass("eps=" + to_string(eps));
    }
  return fail("diagonal entries not congruent to a common unit mod n");
}

InReport check_ideal_principal(const SubgroupSpec& s, const Mat<QuadInt>& M) {
  IdealBasis I = ideal_IN(s.m, s.N);
  for (long e : unit_candidates(s.N)) {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = 0; j < 4 && ok; ++j) {
        QuadInt d = M.at(i, j) - (i == j ? QuadInt(Rat(e)) : QuadInt(0));
        if (!quad_in_ideal(d, I)) ok = false;
      }
    if (ok) return pass("eps=" + std::to_string(e));
  }
  return fail("not congruent to a unit multiple of I mod the ideal");
}

InReport check_quat_level(const SubgroupSpec& s, const Mat<Quaternion>& M) {
  for (long e : unit_candidates(s.N)) {
    if (!scalar_congruent(M, Quaternion(Rat(e)), [&](const Quaternion& x, const Quaternion& y) {
          return quat_cong(x, y, s.N);
        }))
      continue;
    if (s.N % 2 == 0) {
      Quaternion t = Quaternion(Rat(e)) * (M.at(0, 0) + M.at(1, 1)) - Quaternion(Rat(e * e + 1));
      if (!quat_in_ideal(t, ideal_N_wp(s.N))) return fail("trace condition mod N wp fails");
    }
    return pass("eps=" + std::to_string(e));
  }
  return fail("not congruent to a unit multiple of I mod N");
}

InReport check_wp_principal(const Mat<Quaternion>& M) {
  std::vector<std::pair<Quaternion, std::string>> units = {
      {Quaternion(1), "1"}, {quat_omega(), "w"}, {conj(quat_omega()), "wbar"}};
  for (const auto& [eps, name] : units) {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = 0; j < 4 && ok; ++j) {
        Quaternion d = M.at(i, j) - (i == j ? eps : Quaternion(0));
        if (!is_hurwitz(d) || residue_mod_wp(d) != F4Elem(0)) ok = false;
      }
    if (ok) return pass("eps=" + name);
  }
  return fail("not congruent to a unit multiple of I mod wp");
}

}  // namespace

InReport in_subgroup(const SubgroupSpec& s, const GroupElem& g) {
  if (g.kind != ambient_kind(s) || (g.kind == GroupKind::Hermitian && g.m != s.m))
    return fail("element is not in the ambient group of the family");
  MemberReport amb = is_member(g);
  if (!amb.ok) return fail("ambient membership: " + amb.diagnostic);
  switch (s.fam) {
    case Family::PrincipalSiegel: return check_principal_siegel(s, g.rat());
    case Family::Thm1c: return check_thm1c(s, g.rat());
    case Family::PrincipalHermitian: return check_principal_hermitian(s, g.quad());
    case Family::Eq14: return check_eq14(s, g.quad());
    case Family::IdealPrincipal: return check_ideal_principal(s, g.quad());
    case Family::QuatLevel: return check_quat_level(s, g.quat());
    case Family::WpPrincipal: return check_wp_principal(g.quat());
  }
  return fail("unknown family");
}

// ---- the paired orthogonal predicates ----

namespace {

// Orthogonal counterpart of conjugation by diag(1+i, 1, (1+i)/2, 1): the point
// map Z -> diag(1+i,1) Z diag(1-i,1) reads (z11, z12, z22) -> (2 z11, (1+i)z12, z22),
// a rational similitude of S1 with factor 2 (scalars drop out of conjugation).
MatQ wp_conjugator() {
  MatQ R = MatQ::identity(8);
  R.at(0, 0) = 2;
  R.at(1, 1) = 2;
  // left multiplication by 1+i in the basis (1, i, j, omega)
  static const int L[4][4] = {{1, -1, -1, -1}, {1, 1, -1, 0}, {0, 0, 0, -1}, {0, 0, 2, 2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) R.at(2 + i, 2 + j) = Rat(L[i][j]);
  return R;
}

bool kernel_test_one(const SubgroupSpec& s, const MatQ& U) {
  switch (s.fam) {
    case Family::PrincipalSiegel:
      return is_integral(U) &&
             in_discriminant_kernel(to_integral(U), form_S1(GroupKind::Siegel), s.N);
    case Family::Thm1c: {
      std::vector<Rat> d = {Rat(1), Rat(1), Rat(1), Rat(s.n), Rat(s.N)};
      return conjugated_kernel_test(U, form_thm1c(s.n, s.N), diag_rational(d), true);
    }
    case Family::PrincipalHermitian:
      return is_integral(U) &&
             in_discriminant_kernel(to_integral(U), form_S1(GroupKind::Hermitian, s.m), s.N);
    case Family::Eq14: {
      std::vector<Rat> d = {Rat(1), Rat(1), Rat(1), Rat(1), Rat(s.n), Rat(s.N)};
      return conjugated_kernel_test(U, form_thm2c(s.m, s.n, s.N), diag_rational(d), true);
    }
    case Family::IdealPrincipal: {
      std::vector<Rat> d = {Rat(1), Rat(1), Rat(1), Rat(s.N), Rat(1), Rat(1)};
      return conjugated_kernel_test(U, form_thm3(s.m, s.N), diag_rational(d), false);
    }
    case Family::QuatLevel:
      return is_integral(U) &&
             in_kernel_variant23(to_integral(U), form_S1(GroupKind::QuatSp), s.N);
    case Family::WpPrincipal: {
      std::vector<Rat> d(8, Rat(1));
      d[6] = 2;
      d[7] = 2;
      MatQ R = wp_conjugator();
      MatQ Uc = inv_mat_field(R) * U * R;
      return conjugated_kernel_test(Uc, form_cor2(), diag_rational(d), true);
    }
  }
  return false;
}

}  // namespace

bool kernel_test(const SubgroupSpec& s, const OrthImage& im) {
  if (kernel_test_one(s, im.U)) return true;
  if (is_quat_kind(im.kind)) return kernel_test_one(s, -im.U);
  return false;
}

// ---- member construction ----

namespace {

// U in SL2(Z) with U = eps I mod n (eps^2 = 1 mod n), as 2x2 integer data
MatI eps_unit_gl2(long eps, long n) {
  if (n == 1) return MatI::identity(2);
  long kappa = (eps * eps - 1) / n;
  long delta = -kappa * eps;
  MatI U(2, 2);
  U.at(0, 0) = eps;
  U.at(0, 1) = -kappa * kappa * n;
  U.at(1, 0) = n;
  U.at(1, 1) = eps + delta * n;
  if (U.at(0, 0) * U.at(1, 1) - U.at(0, 1) * U.at(1, 0) != 1)
    throw Error(ErrorCode::Domain, "unit embedding construction failed");
  return U;
}

template <class T>
Mat<T> scalar_mat2(const MatI& A) {
  Mat<T> M(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M.at(i, j) = T(Rat(A.at(i, j)));
  return M;
}

template <class T>
Mat<T> upper_t(const Mat<T>& S) {
  Mat<T> M = Mat<T>::identity(4);
  M.set_block(0, 2, S);
  return M;
}

template <class T>
Mat<T> lower_t(const Mat<T>& S) {
  Mat<T> M = Mat<T>::identity(4);
  M.set_block(2, 0, S);
  return M;
}

template <class T>
Mat<T> embed_gl(const Mat<T>& U, const Mat<T>& Uict) {
  Mat<T> M(4, 4);
  M.set_block(0, 0, U);
  M.set_block(2, 2, Uict);
  return M;
}

template <class T>
Mat<T> herm_s(const T& d1, const T& x, const T& d2) {
  Mat<T> S(2, 2);
  S.at(0, 0) = d1;
  S.at(0, 1) = x;
  S.at(1, 0) = conj(x);
  S.at(1, 1) = d2;
  return S;
}

template <class T, class InvCt>
void add_embed(std::vector<Mat<T>>& out, const Mat<T>& U, InvCt ict) {
  out.push_back(embed_gl(U, ict(U)));
}

}  // namespace

std::vector<GroupElem> subgroup_generators(const SubgroupSpec& s) {
  std::vector<GroupElem> out;
  long N = s.N, n = s.n;
  switch (s.fam) {
    case Family::PrincipalSiegel:
    case Family::Thm1c: {
      std::vector<MatQ> mats;
      Rat z(0), o(1);
      long upper_n = s.fam == Family::Thm1c ? n : N;
      long lower_N = s.fam == Family::Thm1c ? N : N;
      long lower_nn = s.fam == Family::Thm1c ? N * n : N;
      // upper translations: s22 divisible by the inner level (or all by N)
      if (s.fam == Family::Thm1c) {
        mats.push_back(upper_t(herm_s(o, z, z)));
        mats.push_back(upper_t(herm_s(z, o, z)));
        mats.push_back(upper_t(herm_s(z, z, Rat(upper_n))));
      } else {
        mats.push_back(upper_t(herm_s(Rat(N), z, z)));
        mats.push_back(upper_t(herm_s(z, Rat(N), z)));
        mats.push_back(upper_t(herm_s(z, z, Rat(N))));
      }
      mats.push_back(lower_t(herm_s(Rat(lower_nn), z, z)));
      mats.push_back(lower_t(herm_s(z, Rat(lower_N), z)));
      mats.push_back(lower_t(herm_s(z, z, Rat(lower_N))));
      auto ict = [](const MatQ& U) { return inv_mat_field(conj_transpose(U)); };
      long emb = s.fam == Family::Thm1c ? 1 : N;
      add_embed(mats, MatQ(2, 2, {o, Rat(emb), z, o}), ict);
      add_embed(mats, MatQ(2, 2, {o, z, Rat(s.fam == Family::Thm1c ? n : N), o}), ict);
      long unit_mod = s.fam == Family::Thm1c ? n : N;
      for (long e : unit_candidates(unit_mod))
        add_embed(mats, scalar_mat2<Rat>(eps_unit_gl2(e, unit_mod)), ict);
      mats.push_back(-MatQ::identity(4));
      for (const MatQ& M : mats) out.push_back(make_siegel(M));
      break;
    }
    case Family::PrincipalHermitian:
    case Family::Eq14: {
      long un = s.fam == Family::Eq14 ? n : N;
      QuadInt z(0), o(1), w = quad_omega(s.m);
      std::vector<Mat<QuadInt>> mats;
      auto Nx = [&](long f) { return QuadInt(Rat(f)); };
      if (s.fam == Family::Eq14) {
        mats.push_back(upper_t(herm_s(o, z, z)));
        mats.push_back(upper_t(herm_s(z, o, z)));
        mats.push_back(upper_t(herm_s(z, w, z)));
        mats.push_back(upper_t(herm_s(z, z, Nx(n))));
        mats.push_back(lower_t(herm_s(Nx(N * n), z, z)));
        mats.push_back(lower_t(herm_s(z, Nx(N), z)));
        mats.push_back(lower_t(herm_s(z, w * Nx(N), z)));
        mats.push_back(lower_t(herm_s(z, z, Nx(N))));
      } else {
        for (const auto& S : {herm_s(Nx(N), z, z), herm_s(z, z, Nx(N)), herm_s(z, Nx(N), z),
                              herm_s(z, w * Nx(N), z)}) {
          mats.push_back(upper_t(S));
          mats.push_back(lower_t(S));
        }
      }
      auto ict = [](const Mat<QuadInt>& U) { return inv_mat_field(conj_transpose(U)); };
      long emb = s.fam == Family::Eq14 ? 1 : N;
      add_embed(mats, Mat<QuadInt>(2, 2, {o, Nx(emb), z, o}), ict);
      add_embed(mats, Mat<QuadInt>(2, 2, {o, w * Nx(emb), z, o}), ict);
      add_embed(mats, Mat<QuadInt>(2, 2, {o, z, Nx(un), o}), ict);
      for (long e : unit_candidates(un))
        add_embed(mats, scalar_mat2<QuadInt>(eps_unit_gl2(e, un)), ict);
      mats.push_back(-Mat<QuadInt>::identity(4));
      for (const auto& M : mats) out.push_back(make_hermitian(s.m, M));
      break;
    }
    case Family::IdealPrincipal: {
      QuadInt z(0), o(1), w = quad_omega(s.m), qN = QuadInt(Rat(N));
      std::vector<Mat<QuadInt>> mats;
      for (const auto& S :
           {herm_s(qN, z, z), herm_s(z, z, qN), herm_s(z, qN, z), herm_s(z, w, z)}) {
        mats.push_back(upper_t(S));
        mats.push_back(lower_t(S));
      }
      auto ict = [](const Mat<QuadInt>& U) { return inv_mat_field(conj_transpose(U)); };
      for (const QuadInt& x : {qN, w}) {
        add_embed(mats, Mat<QuadInt>(2, 2, {o, x, z, o}), ict);
        add_embed(mats, Mat<QuadInt>(2, 2, {o, z, x, o}), ict);
      }
      for (long e : unit_candidates(N))
        add_embed(mats, scalar_mat2<QuadInt>(eps_unit_gl2(e, N)), ict);
      mats.push_back(-Mat<QuadInt>::identity(4));
      for (const auto& M : mats) out.push_back(make_hermitian(s.m, M));
      break;
    }
    case Family::QuatLevel:
    case Family::WpPrincipal: {
      Quaternion z(0), o(1), qi(Rat(0), Rat(1), Rat(0), Rat(0)),
          qj(Rat(0), Rat(0), Rat(1), Rat(0)), qk(Rat(0), Rat(0), Rat(0), Rat(1)),
          w = quat_omega();
      std::vector<Mat<Quaternion>> mats;
      auto sc = [](long f) { return Quaternion(Rat(f)); };
      if (s.fam == Family::QuatLevel) {
        for (const Quaternion& x : {o, qi, qj, w}) {
          mats.push_back(upper_t(herm_s(z, x * sc(N), z)));
          mats.push_back(lower_t(herm_s(z, x * sc(N), z)));
        }
        for (const auto& S : {herm_s(sc(N), z, z), herm_s(z, z, sc(N))}) {
          mats.push_back(upper_t(S));
          mats.push_back(lower_t(S));
        }
      } else {
        for (const Quaternion& x : {o + qi, o + qj, o + qk, sc(2)}) {
          mats.push_back(upper_t(herm_s(z, x, z)));
          mats.push_back(lower_t(herm_s(z, x, z)));
        }
        for (const auto& S : {herm_s(sc(2), z, z), herm_s(z, z, sc(2))}) {
          mats.push_back(upper_t(S));
          mats.push_back(lower_t(S));
        }
        mats.push_back(Mat<Quaternion>::identity(4).scaled(w));
        Mat<Quaternion> Ui = Mat<Quaternion>::identity(4);
        Ui.at(0, 0) = qi;
        Ui.at(2, 2) = qi;
        mats.push_back(Ui);
      }
      auto ict = [](const Mat<Quaternion>& U) { return quat_mat_inv(conj_transpose(U)); };
      long lvl = s.fam == Family::QuatLevel ? N : 2;
      for (const Quaternion& x :
           s.fam == Family::QuatLevel
               ? std::vector<Quaternion>{sc(lvl), qi * sc(lvl), w * sc(lvl)}
               : std::vector<Quaternion>{o + qi, o + qj, sc(2)}) {
        add_embed(mats, Mat<Quaternion>(2, 2, {o, x, z, o}), ict);
        add_embed(mats, Mat<Quaternion>(2, 2, {o, z, x, o}), ict);
      }
      long un = s.fam == Family::QuatLevel ? N : 2;
      for (long e : unit_candidates(un))
        add_embed(mats, scalar_mat2<Quaternion>(eps_unit_gl2(e, un)), ict);
      mats.push_back(-Mat<Quaternion>::identity(4));
      GroupKind kind = ambient_kind(s);
      for (const auto& M : mats) out.push_back(make_quat(kind, M));
      break;
    }
  }
  // every generator must pass its own membership test
  for (const GroupElem& g : out) {
    InReport r = in_subgroup(s, g);
    if (!r.ok)
      throw Error(ErrorCode::Domain,
                  "subgroup generator fails membership (" + spec_name(s) + "): " + r.detail);
  }
  return out;
}

GroupElem sample_member(const SubgroupSpec& s, Rng& rng, int length) {
  static std::map<std::string, std::vector<GroupElem>> cache;
  std::string key = spec_name(s);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, subgroup_generators(s)).first;
  const std::vector<GroupElem>& gens = it->second;
  GroupElem acc = group_identity(ambient_kind(s), s.m);
  for (int i = 0; i < length; ++i) {
    const GroupElem& g = gens[static_cast<size_t>(rng.below(gens.size()))];
    acc = group_mul(acc, rng.coin() ? group_inverse(g) : g);
  }
  return acc;
}

VerifyReport verify_theorem(const SubgroupSpec& s, int forward_samples, int backward_samples,
                            std::uint64_t seed) {
  VerifyReport rep;
  rep.subgroup = spec_name(s);
  rep.seed = seed;
  Rng rng(seed);
  GroupKind kind = ambient_kind(s);

  auto note = [&](const std::string& what, int idx) {
    if (rep.failures.size() < 20)
      rep.failures.push_back(what + " at sample " + std::to_string(idx));
  };

  for (int i = 0; i < forward_samples; ++i) {
    ++rep.forward_total;
    GroupElem M = sample_member(s, rng, 3 + static_cast<int>(rng.below(5)));
    InReport in = in_subgroup(s, M);
    if (!in.ok) {
      ++rep.forward_fail;
      note("forward: constructed member rejected (" + in.detail + ")", i);
      continue;
    }
    OrthImage im = lift(M);
    if (kernel_test(s, im)) ++rep.forward_pass;
    else {
      ++rep.forward_fail;
      note("forward: image not in the paired kernel", i);
    }
  }

  for (int i = 0; i < backward_samples; ++i) {
    ++rep.backward_total;
    GroupElem M = rng.coin() ? sample_member(s, rng, 3 + static_cast<int>(rng.below(5)))
                             : sample_word_rng(kind, s.m, 2 + static_cast<int>(rng.below(7)), rng);
    bool inside = in_subgroup(s, M).ok;
    bool kernel = kernel_test(s, lift(M));
    if (kernel) ++rep.backward_hits;
    if (inside == kernel) ++rep.backward_pass;
    else {
      ++rep.backward_fail;
      note(std::string("backward: predicates disagree (subgroup=") +
               (inside ? "yes" : "no") + ", kernel=" + (kernel ? "yes" : "no") + ")",
           i);
    }
  }
  return rep;
}

}  // namespace omod
