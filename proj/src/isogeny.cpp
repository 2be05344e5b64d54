#include "orthomod/isogeny.hpp"

namespace omod {

int phi_dim(GroupKind kind) {
  switch (kind) {
    case GroupKind::Siegel: return 3;
    case GroupKind::Hermitian: return 4;
    default: return 6;
  }
}

namespace {

std::vector<Rat> phi_herm(const MatQ& Z) {
  if (Z != Z.transpose()) throw Error(ErrorCode::Domain, "phi needs a symmetric matrix");
  return {Z.at(0, 0), Z.at(0, 1), Z.at(1, 1)};
}

std::vector<Rat> phi_herm(const Mat<QuadInt>& Z) {
  if (Z != conj_transpose(Z)) throw Error(ErrorCode::Domain, "phi needs a Hermitian matrix");
  return {Z.at(0, 0).a, Z.at(0, 1).a, Z.at(0, 1).b, Z.at(1, 1).a};
}

std::vector<Rat> phi_herm(const Mat<Quaternion>& Z) {
  if (Z != conj_transpose(Z)) throw Error(ErrorCode::Domain, "phi needs a Hermitian matrix");
  // off-diagonal in the basis (1, i, j, w), w = (1+i+j+k)/2
  const auto& c = Z.at(0, 1).c;
  Rat x4 = 2 * c[3];
  return {Z.at(0, 0).c[0], c[0] - c[3], c[1] - c[3], c[2] - c[3], x4, Z.at(1, 1).c[0]};
}

MatQ phi_inv_rat(const std::vector<Rat>& z) {
  return MatQ(2, 2, {z[0], z[1], z[1], z[2]});
}

Mat<QuadInt> phi_inv_quad(const std::vector<Rat>& z, long m) {
  QuadInt x(z[1], z[2], m);
  Mat<QuadInt> Z(2, 2);
  Z.at(0, 0) = QuadInt(z[0]);
  Z.at(0, 1) = x;
  Z.at(1, 0) = conj(x);
  Z.at(1, 1) = QuadInt(z[3]);
  return Z;
}

Mat<Quaternion> phi_inv_quat(const std::vector<Rat>& z) {
  Quaternion x = Quaternion(z[1], z[2], z[3], Rat(0)) + quat_omega() * Quaternion(z[4]);
  Mat<Quaternion> Z(2, 2);
  Z.at(0, 0) = Quaternion(z[0]);
  Z.at(0, 1) = x;
  Z.at(1, 0) = conj(x);
  Z.at(1, 1) = Quaternion(z[5]);
  return Z;
}

MatQ s0_rational(GroupKind kind, long m) { return to_rational(gram_S0(kind, m)); }
MatQ s1_rational(GroupKind kind, long m) { return to_rational(gram_S1(kind, m)); }

std::vector<Rat> mat_vec(const MatQ& A, const std::vector<Rat>& v) {
  std::vector<Rat> r(A.r, Rat(0));
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) r[i] += A.at(i, j) * v[j];
  return r;
}

Rat dot(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  Rat s(0);
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

std::vector<Rat> unit_vec(int k, int i) {
  std::vector<Rat> e(k, Rat(0));
  e[i] = 1;
  return e;
}

std::vector<Rat> phi_identity(GroupKind kind) {
  int k = phi_dim(kind);
  std::vector<Rat> z(k, Rat(0));
  z[0] = 1;
  z[k - 1] = 1;
  return z;
}

}  // namespace

std::vector<Rat> phi(const SamplePoint& Z) {
  switch (Z.kind) {
    case GroupKind::Siegel: return phi_herm(Z.rat());
    case GroupKind::Hermitian: return phi_herm(Z.quad());
    default: return phi_herm(Z.quat());
  }
}

SamplePoint phi_inv(GroupKind kind, long m, const std::vector<Rat>& z) {
  if (static_cast<int>(z.size()) != phi_dim(kind))
    throw Error(ErrorCode::Parameter, "coordinate vector has the wrong length");
  switch (kind) {
    case GroupKind::Siegel: return make_sample_point(kind, 0, phi_inv_rat(z));
    case GroupKind::Hermitian: return make_sample_point(kind, m, phi_inv_quad(z, m));
    default: return make_sample_point(kind, 0, phi_inv_quat(z));
  }
}

// ---- commutative lifts ----

namespace {

Rat quad_real(const QuadInt& x, const char* what) {
  if (x.b != 0) throw Error(ErrorCode::Domain, std::string(what) + " is not rational");
  return x.a;
}

template <class T>
struct CommTraits;

template <>
struct CommTraits<Rat> {
  static std::vector<Rat> coords(const MatQ& Z) { return phi_herm(Z); }
  static MatQ from_coords(const std::vector<Rat>& z, long) { return phi_inv_rat(z); }
  static Rat real(const Rat& x, const char*) { return x; }
};

template <>
struct CommTraits<QuadInt> {
  static std::vector<Rat> coords(const Mat<QuadInt>& Z) { return phi_herm(Z); }
  static Mat<QuadInt> from_coords(const std::vector<Rat>& z, long m) {
    return phi_inv_quad(z, m);
  }
  static Rat real(const QuadInt& x, const char* what) { return quad_real(x, what); }
};

template <class T>
MatQ commutative_lift(const Mat<T>& M, GroupKind kind, long m) {
  int k = phi_dim(kind);
  Mat<T> A = M.block(0, 0, 2, 2), B = M.block(0, 2, 2, 2);
  Mat<T> C = M.block(2, 0, 2, 2), D = M.block(2, 2, 2, 2);
  using Tr = CommTraits<T>;

  Rat alpha = Tr::real(det2(A), "det A");
  Rat beta = -Tr::real(det2(B), "det B");
  Rat gamma = -Tr::real(det2(C), "det C");
  Rat delta = Tr::real(det2(D), "det D");
  std::vector<Rat> a = Tr::coords(-(adjoint2(A) * B));
  std::vector<Rat> b = Tr::coords(-(A * adjoint2(C)));
  std::vector<Rat> c = Tr::coords(B * adjoint2(D));
  std::vector<Rat> d = Tr::coords(adjoint2(C) * D);

  MatQ S0 = s0_rational(kind, m);
  MatQ U(k + 2, k + 2);
  U.at(0, 0) = alpha;
  U.at(0, k + 1) = beta;
  U.at(k + 1, 0) = gamma;
  U.at(k + 1, k + 1) = delta;
  std::vector<Rat> aS0 = mat_vec(S0, a), dS0 = mat_vec(S0, d);
  for (int i = 0; i < k; ++i) {
    U.at(0, 1 + i) = aS0[i];
    U.at(k + 1, 1 + i) = dS0[i];
    U.at(1 + i, 0) = b[i];
    U.at(1 + i, k + 1) = c[i];
  }
  for (int j = 0; j < k; ++j) {
    Mat<T> Z = Tr::from_coords(unit_vec(k, j), m);
    Mat<T> F = A * Z * adjoint2(D) + B * adjoint2(Z) * adjoint2(C);
    std::vector<Rat> col = Tr::coords(F);
    for (int i = 0; i < k; ++i) U.at(1 + i, 1 + j) = col[i];
  }
  return U;
}

}  // namespace

// ---- quaternionic lifts ----

namespace {

struct PartialBottom {
  Rat delta, gamma;
  std::vector<Rat> d, b, c;  // length 6
  MatQ K;                    // 6x6
};

// delta, gamma, d, c, K, b for the lift of M, assuming det vee(D) != 0.
PartialBottom partial_bottom(const Mat<Quaternion>& A, const Mat<Quaternion>& B,
                             const Mat<Quaternion>& C, const Mat<Quaternion>& D) {
  const int k = 6;
  GroupKind kind = GroupKind::QuatSp;
  MatQ S0 = s0_rational(kind, 0);
  PartialBottom out;

  Rat dv = det_vee(D);
  if (dv == 0) throw Error(ErrorCode::SingularBlock, "det vee(D) vanishes");
  if (!rational_sqrt(dv, out.delta))
    throw Error(ErrorCode::DegenerateLift, "det vee(D) is not a rational square");

  // quadratic-coefficient extraction of t -> det vee(C*Z(t) + D), deg <= 4
  auto poly12 = [&](const std::vector<Rat>& dir, Rat& g1, Rat& g2) {
    auto ev = [&](long t) {
      std::vector<Rat> z(dir);
      for (Rat& v : z) v *= t;
      return det_vee(C * phi_inv_quat(z) + D);
    };
    Rat p1 = ev(1), m1 = ev(-1), p2 = ev(2), m2 = ev(-2);
    g1 = (8 * (p1 - m1) - (p2 - m2)) / 12;
    g2 = (16 * (p1 + m1) - (p2 + m2) - 30 * dv) / 24;
  };

  std::vector<Rat> dS0(k);
  for (int i = 0; i < k; ++i) {
    Rat g1, g2;
    poly12(unit_vec(k, i), g1, g2);
    dS0[i] = g1 / (2 * out.delta);
  }
  out.d = mat_vec(inv_mat_field(S0), dS0);
  {
    Rat g1, g2;
    poly12(phi_identity(kind), g1, g2);
    Rat bI = g1 / (2 * out.delta);
    out.gamma = -(g2 - bI * bI) / (2 * out.delta);
  }

  Mat<Quaternion> Di = quat_mat_inv(D);
  out.c = phi_herm(B * Di);
  for (Rat& v : out.c) v *= out.delta;

  Mat<Quaternion> DiC = Di * C;
  if (DiC != conj_transpose(DiC))
    throw Error(ErrorCode::Domain, "D^-1 C is not Hermitian; input is not symplectic");
  Mat<Quaternion> DiCadj = adjoint2(DiC);
  out.K = MatQ(k, k);
  for (int j = 0; j < k; ++j) {
    Mat<Quaternion> Z = phi_inv_quat(unit_vec(k, j));
    Mat<Quaternion> F = A * Z * Di + B * adjoint2_hermitian(Z) * DiCadj * Di;
    std::vector<Rat> col = phi_herm(F);
    for (int i = 0; i < k; ++i) out.K.at(i, j) = col[i] * out.delta;
  }

  // b from the action at Z = tI for the first t with CtI + D invertible
  std::vector<Rat> zI = phi_identity(kind);
  out.b.assign(k, Rat(0));
  for (long t = 1; t <= 12; ++t) {
    std::vector<Rat> z(zI);
    for (Rat& v : z) v *= t;
    Mat<Quaternion> Zt = phi_inv_quat(z);
    Mat<Quaternion> den = C * Zt + D;
    if (det_vee(den) == 0) continue;
    Mat<Quaternion> W = (A * Zt + B) * quat_mat_inv(den);
    std::vector<Rat> w = phi_herm(W);
    Rat fac = -Rat(t) * t * out.gamma + Rat(t) * dot(dS0, zI) + out.delta;
    std::vector<Rat> Kz = mat_vec(out.K, z);
    for (int i = 0; i < k; ++i) out.b[i] = (Kz[i] + out.c[i] - w[i] * fac) / (Rat(t) * t);
    return out;
  }
  throw Error(ErrorCode::DegenerateLift, "no invertible C tI + D found");
}

Mat<Quaternion> sympl_inv_quat(const Mat<Quaternion>& M) {
  Mat<Quaternion> R(4, 4);
  R.set_block(0, 0, conj_transpose(M.block(2, 2, 2, 2)));
  R.set_block(0, 2, -conj_transpose(M.block(0, 2, 2, 2)));
  R.set_block(2, 0, -conj_transpose(M.block(2, 0, 2, 2)));
  R.set_block(2, 2, conj_transpose(M.block(0, 0, 2, 2)));
  return R;
}

// Lift for nonsingular A- and D-blocks: bottom seven rows directly, the top
// row from the bottom rows of the lift of M^-1 via U = eps * S1^-1 U'^t S1.
MatQ quat_lift_regular(const Mat<Quaternion>& M) {
  const int k = 6, n = k + 2;
  Mat<Quaternion> A = M.block(0, 0, 2, 2), B = M.block(0, 2, 2, 2);
  Mat<Quaternion> C = M.block(2, 0, 2, 2), D = M.block(2, 2, 2, 2);
  MatQ S0 = s0_rational(GroupKind::QuatSp, 0);

  PartialBottom P = partial_bottom(A, B, C, D);
  Mat<Quaternion> Mi = sympl_inv_quat(M);
  PartialBottom Q = partial_bottom(Mi.block(0, 0, 2, 2), Mi.block(0, 2, 2, 2),
                                   Mi.block(2, 0, 2, 2), Mi.block(2, 2, 2, 2));

  MatQ U(n, n);
  U.at(n - 1, 0) = P.gamma;
  U.at(n - 1, n - 1) = P.delta;
  std::vector<Rat> PdS0 = mat_vec(S0, P.d);
  for (int i = 0; i < k; ++i) {
    U.at(n - 1, 1 + i) = PdS0[i];
    U.at(1 + i, 0) = P.b[i];
    U.at(1 + i, n - 1) = P.c[i];
    for (int j = 0; j < k; ++j) U.at(1 + i, 1 + j) = P.K.at(i, j);
  }

  // rows 1..7 of the lift of M^-1
  MatQ R(n, n);  // row 0 left zero (unknown)
  R.at(n - 1, 0) = Q.gamma;
  R.at(n - 1, n - 1) = Q.delta;
  std::vector<Rat> QdS0 = mat_vec(S0, Q.d);
  for (int i = 0; i < k; ++i) {
    R.at(n - 1, 1 + i) = QdS0[i];
    R.at(1 + i, 0) = Q.b[i];
    R.at(1 + i, n - 1) = Q.c[i];
    for (int j = 0; j < k; ++j) R.at(1 + i, 1 + j) = Q.K.at(i, j);
  }

  // X = S1^-1 R^t S1 agrees with +-U; its columns 0..n-2 need only rows 1..n-1 of R.
  MatQ S1 = s1_rational(GroupKind::QuatSp, 0);
  MatQ X = inv_mat_field(S1) * R.transpose() * S1;

  Rat eps(0);
  for (int i = 1; i < n && eps == 0; ++i)
    for (int j = 0; j < n - 1 && eps == 0; ++j)
      if (X.at(i, j) != 0) eps = U.at(i, j) / X.at(i, j);
  if (eps != 1 && eps != -1)
    throw Error(ErrorCode::Domain, "inconsistent partial lifts");
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n - 1; ++j)
      if (U.at(i, j) != eps * X.at(i, j))
        throw Error(ErrorCode::Domain, "inconsistent partial lifts");
  for (int j = 0; j < n - 1; ++j) U.at(0, j) = eps * X.at(0, j);

  // last unknown: beta = U[0][n-1], from orthogonality of columns / rows
  Rat alpha = U.at(0, 0);
  std::vector<Rat> bS0c = mat_vec(S0, P.c);
  if (P.gamma != 0) {
    U.at(0, n - 1) = (1 - alpha * P.delta - dot(P.b, bS0c)) / P.gamma;
  } else {
    int bi = -1;
    for (int i = 0; i < k; ++i)
      if (P.b[i] != 0) { bi = i; break; }
    if (bi >= 0) {
      // row0 S1^-1 row_(1+bi)^t = 0
      std::vector<Rat> s(k);
      for (int i = 0; i < k; ++i) s[i] = U.at(0, 1 + i);  // a^t S0
      std::vector<Rat> a = mat_vec(inv_mat_field(S0), s);
      std::vector<Rat> Krow(k);
      for (int j = 0; j < k; ++j) Krow[j] = P.K.at(bi, j);
      U.at(0, n - 1) = -(alpha * P.c[bi] + dot(a, Krow)) / P.b[bi];
    } else {
      U.at(0, n - 1) = -dot(P.c, bS0c) / (2 * P.delta);
    }
  }
  return U;
}

const std::vector<Mat<Quaternion>>& hermitian_pool() {
  static std::vector<Mat<Quaternion>> pool = [] {
    std::vector<Mat<Quaternion>> out;
    std::vector<Quaternion> offs = {Quaternion(0), Quaternion(1),
                                    Quaternion(Rat(0), Rat(1), Rat(0), Rat(0)),
                                    Quaternion(Rat(0), Rat(0), Rat(1), Rat(0)),
                                    Quaternion(Rat(0), Rat(0), Rat(0), Rat(1)),
                                    quat_omega()};
    for (long d1 : {0L, 1L, -1L, 2L, -2L})
      for (long d2 : {0L, 1L, -1L, 2L, -2L})
        for (const Quaternion& x : offs) {
          Mat<Quaternion> S(2, 2);
          S.at(0, 0) = Quaternion(Rat(d1));
          S.at(0, 1) = x;
          S.at(1, 0) = conj(x);
          S.at(1, 1) = Quaternion(Rat(d2));
          out.push_back(S);
        }
    return out;
  }();
  return pool;
}

Mat<Quaternion> upper_translation_quat(const Mat<Quaternion>& S) {
  Mat<Quaternion> M = Mat<Quaternion>::identity(4);
  M.set_block(0, 2, S);
  return M;
}

MatQ quat_lift_core(const Mat<Quaternion>& M) {
  Mat<Quaternion> A = M.block(0, 0, 2, 2), C = M.block(2, 0, 2, 2),
                  D = M.block(2, 2, 2, 2);
  if (det_vee(A) != 0 && det_vee(D) != 0) return quat_lift_regular(M);

  // left/right translate until both corner blocks are invertible:
  // M = T_P^-1 (T_P M T_Q) T_Q^-1, with A' = A + P C and D' = C Q + D.
  const auto& pool = hermitian_pool();
  const Mat<Quaternion>*Psel = nullptr, *Qsel = nullptr;
  for (const auto& S : pool) {
    if (!Psel && det_vee(A + S * C) != 0) Psel = &S;
    if (!Qsel && det_vee(C * S + D) != 0) Qsel = &S;
    if (Psel && Qsel) break;
  }
  if (!Psel || !Qsel)
    throw Error(ErrorCode::DegenerateLift, "no translation regularizes the corner blocks");
  Mat<Quaternion> TP = upper_translation_quat(*Psel);
  Mat<Quaternion> TQ = upper_translation_quat(*Qsel);
  MatQ mid = quat_lift_regular(TP * M * TQ);
  MatQ left = quat_lift_regular(upper_translation_quat(-*Psel));
  MatQ right = quat_lift_regular(upper_translation_quat(-*Qsel));
  return left * mid * right;
}

void sign_normalize(MatQ& U) {
  for (const Rat& x : U.e) {
    if (x == 0) continue;
    if (x < 0) U = -U;
    return;
  }
}

// Lift of the half-turn scalar: z11, z22 fixed, z12 -> lambda z12 lambda^-1.
MatQ half_turn_matrix() {
  const int k = 6, n = k + 2;
  MatQ H = MatQ::identity(n);
  std::vector<Quaternion> basis = {Quaternion(1), Quaternion(Rat(0), Rat(1), Rat(0), Rat(0)),
                                   Quaternion(Rat(0), Rat(0), Rat(1), Rat(0)), quat_omega()};
  for (int j = 0; j < 4; ++j) {
    Quaternion q = lambda_conj(basis[j]);
    // coordinates in (1, i, j, w)
    Rat x4 = 2 * q.c[3];
    Rat col[4] = {q.c[0] - q.c[3], q.c[1] - q.c[3], q.c[2] - q.c[3], x4};
    for (int i = 0; i < 4; ++i) H.at(2 + i, 2 + j) = col[i];
  }
  return H;
}

}  // namespace

OrthImage lift(const GroupElem& g) {
  OrthImage im;
  im.kind = g.kind;
  im.m = g.m;
  switch (g.kind) {
    case GroupKind::Siegel:
      im.U = commutative_lift(g.rat(), g.kind, 0);
      break;
    case GroupKind::Hermitian:
      im.U = commutative_lift(g.quad(), g.kind, g.m);
      break;
    default: {
      MatQ U = quat_lift_core(g.quat());
      if (g.halfTurn) U = half_turn_matrix() * U;
      sign_normalize(U);
      im.U = U;
      break;
    }
  }
  MatQ S1 = s1_rational(g.kind, g.m);
  if (im.U.transpose() * S1 * im.U != S1)
    throw Error(ErrorCode::Domain, "lift is not orthogonal");
  if (det_field(im.U) != 1) throw Error(ErrorCode::Domain, "lift has determinant != 1");
  return im;
}

MatQ k_matrix(const GroupElem& g) {
  switch (g.kind) {
    case GroupKind::Siegel: {
      MatQ U = commutative_lift(g.rat(), g.kind, 0);
      return U.block(1, 1, 3, 3);
    }
    case GroupKind::Hermitian: {
      MatQ U = commutative_lift(g.quad(), g.kind, g.m);
      return U.block(1, 1, 4, 4);
    }
    default: return lift(g).K();
  }
}

std::vector<Rat> OrthImage::b_col() const {
  std::vector<Rat> v(k());
  for (int i = 0; i < k(); ++i) v[i] = U.at(1 + i, 0);
  return v;
}

std::vector<Rat> OrthImage::c_col() const {
  std::vector<Rat> v(k());
  for (int i = 0; i < k(); ++i) v[i] = U.at(1 + i, dim() - 1);
  return v;
}

std::vector<Rat> OrthImage::a_vec() const {
  MatQ S0i = inv_mat_field(s0_rational(kind, m));
  std::vector<Rat> s(k());
  for (int i = 0; i < k(); ++i) s[i] = U.at(0, 1 + i);
  return mat_vec(S0i, s);
}

std::vector<Rat> OrthImage::d_vec() const {
  MatQ S0i = inv_mat_field(s0_rational(kind, m));
  std::vector<Rat> s(k());
  for (int i = 0; i < k(); ++i) s[i] = U.at(dim() - 1, 1 + i);
  return mat_vec(S0i, s);
}

bool orth_integral(const OrthImage& im) { return is_integral(im.U); }

Rat orth_factor(const OrthImage& im, const std::vector<Rat>& z) {
  if (static_cast<int>(z.size()) != im.k())
    throw Error(ErrorCode::Parameter, "coordinate vector has the wrong length");
  MatQ S0 = s0_rational(im.kind, im.m);
  std::vector<Rat> S0z = mat_vec(S0, z);
  Rat q = dot(z, S0z);
  return -q / 2 * im.gamma() + dot(im.d_vec(), S0z) + im.delta();
}

std::vector<Rat> orth_action(const OrthImage& im, const std::vector<Rat>& z) {
  Rat fac = orth_factor(im, z);
  if (fac == 0) throw Error(ErrorCode::NotInvertible, "projective factor vanishes");
  MatQ S0 = s0_rational(im.kind, im.m);
  std::vector<Rat> S0z = mat_vec(S0, z);
  Rat q = dot(z, S0z);
  std::vector<Rat> b = im.b_col(), c = im.c_col();
  std::vector<Rat> Kz = mat_vec(im.K(), z);
  std::vector<Rat> out(im.k());
  for (int i = 0; i < im.k(); ++i) out[i] = (-q / 2 * b[i] + Kz[i] + c[i]) / fac;
  return out;
}

CompatReport compat_check(const GroupElem& g, const SamplePoint& Z) {
  CompatReport rep;
  OrthImage im = lift(g);
  std::vector<Rat> z = phi(Z);
  CocycleResult co = cocycle(g, Z);
  if (co.scalar == 0) return rep;  // CZ+D singular: nothing to compare
  rep.checked = true;
  Rat fac = orth_factor(im, z);
  if (co.quaternionic)
    rep.factor_ok = fac * fac == co.scalar;
  else
    rep.factor_ok = fac == co.scalar;
  SamplePoint W = mobius(g, Z);
  rep.action_ok = phi(W) == orth_action(im, z);
  return rep;
}

}  // namespace omod
