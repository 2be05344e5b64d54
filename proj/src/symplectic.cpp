#include "orthomod/symplectic.hpp"

namespace omod {

std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Siegel: return "siegel";
    case GroupKind::Hermitian: return "hermitian";
    case GroupKind::QuatSp: return "quat-sp";
    case GroupKind::QuatSpecial: return "quat-special";
    case GroupKind::QuatExtended: return "quat-extended";
  }
  throw Error(ErrorCode::Parameter, "unknown group kind");
}

GroupKind kind_from_name(const std::string& s) {
  if (s == "siegel") return GroupKind::Siegel;
  if (s == "hermitian") return GroupKind::Hermitian;
  if (s == "quat-sp") return GroupKind::QuatSp;
  if (s == "quat-special") return GroupKind::QuatSpecial;
  if (s == "quat-extended") return GroupKind::QuatExtended;
  throw Error(ErrorCode::Parameter, "unknown group kind: " + s);
}

GroupElem make_siegel(const MatQ& M) {
  GroupElem g;
  g.kind = GroupKind::Siegel;
  g.M = M;
  return g;
}

GroupElem make_hermitian(long m, const Mat<QuadInt>& M) {
  if (m <= 0 || !is_squarefree(m))
    throw Error(ErrorCode::Parameter, "field parameter must be positive squarefree");
  GroupElem g;
  g.kind = GroupKind::Hermitian;
  g.m = m;
  g.M = M;
  return g;
}

GroupElem make_quat(GroupKind kind, const Mat<Quaternion>& M, int halfTurn) {
  if (!is_quat_kind(kind)) throw Error(ErrorCode::Parameter, "not a quaternionic kind");
  if (halfTurn != 0 && kind != GroupKind::QuatExtended)
    throw Error(ErrorCode::Parameter, "halfTurn requires the extended group");
  GroupElem g;
  g.kind = kind;
  g.halfTurn = halfTurn & 1;
  g.M = M;
  return g;
}

GroupElem group_identity(GroupKind kind, long m) {
  switch (kind) {
    case GroupKind::Siegel: return make_siegel(MatQ::identity(4));
    case GroupKind::Hermitian: return make_hermitian(m, Mat<QuadInt>::identity(4));
    default: return make_quat(kind, Mat<Quaternion>::identity(4));
  }
}

// ---- membership ----

namespace {

template <class T>
bool symplectic_relation(const Mat<T>& M) {
  Mat<T> J = symplectic_J4<T>();
  return conj_transpose(M) * J * M == J;
}

}  // namespace

F4Elem f4_det(const Mat<Quaternion>& M) {
  Mat<F4Elem> R = M.template map<F4Elem>([](const Quaternion& q) { return residue_mod_wp(q); });
  return det_field(R);
}

MemberReport is_member(const GroupElem& g) {
  auto fail = [](const std::string& d) { return MemberReport{false, d}; };
  switch (g.kind) {
    case GroupKind::Siegel: {
      const MatQ& M = g.rat();
      if (M.r != 4 || M.c != 4) return fail("matrix must be 4x4");
      if (!is_integral(M)) return fail("entries not rational integers");
      if (!symplectic_relation(M)) return fail("symplectic relation fails");
      return {};
    }
    case GroupKind::Hermitian: {
      const Mat<QuadInt>& M = g.quad();
      if (M.r != 4 || M.c != 4) return fail("matrix must be 4x4");
      for (const QuadInt& x : M.e) {
        if (x.b != 0 && x.m != g.m) return fail("entry in the wrong quadratic field");
        if (!quad_is_integral(x)) return fail("entries not integral");
      }
      if (!symplectic_relation(M)) return fail("symplectic relation fails");
      if (det_field(M) != QuadInt(1)) return fail("determinant != 1");
      return {};
    }
    default: {
      const Mat<Quaternion>& M = g.quat();
      if (M.r != 4 || M.c != 4) return fail("matrix must be 4x4");
      for (const Quaternion& x : M.e)
        if (!is_hurwitz(x)) return fail("entries not Hurwitz integral");
      if (!symplectic_relation(M)) return fail("symplectic relation fails");
      if (g.kind == GroupKind::QuatSpecial && f4_det(M) != F4Elem(1))
        return fail("determinant mod wp != 1");
      return {};
    }
  }
}

// ---- generators ----

namespace {

template <class T>
Mat<T> upper_translation(const Mat<T>& S) {
  Mat<T> M = Mat<T>::identity(4);
  M.set_block(0, 2, S);
  return M;
}

template <class T>
Mat<T> gl_embed(const Mat<T>& U, const Mat<T>& Uict) {  // diag(U, (conj U^t)^-1)
  Mat<T> M(4, 4);
  M.set_block(0, 0, U);
  M.set_block(2, 2, Uict);
  return M;
}

template <class T>
Mat<T> herm2(const T& d1, const T& x, const T& d2) {
  Mat<T> S(2, 2);
  S.at(0, 0) = d1;
  S.at(0, 1) = x;
  S.at(1, 0) = conj(x);
  S.at(1, 1) = d2;
  return S;
}

}  // namespace

std::vector<GroupElem> generators(GroupKind kind, long m) {
  std::vector<GroupElem> out;
  switch (kind) {
    case GroupKind::Siegel: {
      out.push_back(make_siegel(to_rational(symplectic_J4<Int>())));
      for (const MatQ& S : {herm2(Rat(1), Rat(0), Rat(0)), herm2(Rat(0), Rat(0), Rat(1)),
                            herm2(Rat(0), Rat(1), Rat(0))})
        out.push_back(make_siegel(upper_translation(S)));
      MatQ U(2, 2, {Rat(1), Rat(1), Rat(0), Rat(1)});
      out.push_back(make_siegel(gl_embed(U, inv_mat_field(conj_transpose(U)))));
      break;
    }
    case GroupKind::Hermitian: {
      QuadInt w = quad_omega(m), one(1), zero(0);
      out.push_back(make_hermitian(m, symplectic_J4<QuadInt>()));
      for (const Mat<QuadInt>& S :
           {herm2(one, zero, zero), herm2(zero, zero, one), herm2(zero, one, zero),
            herm2(zero, w, zero)})
        out.push_back(make_hermitian(m, upper_translation(S)));
      for (const Mat<QuadInt>& U :
           {Mat<QuadInt>(2, 2, {one, one, zero, one}), Mat<QuadInt>(2, 2, {one, w, zero, one}),
            Mat<QuadInt>(2, 2, {zero, one, -one, zero})})
        out.push_back(make_hermitian(m, gl_embed(U, inv_mat_field(conj_transpose(U)))));
      break;
    }
    default: {
      Quaternion one(1), zero(0), qi(Rat(0), Rat(1), Rat(0), Rat(0)),
          qj(Rat(0), Rat(0), Rat(1), Rat(0)), w = quat_omega();
      std::vector<GroupElem> pool;
      auto add = [&](const Mat<Quaternion>& M) { pool.push_back(make_quat(GroupKind::QuatSp, M)); };
      add(symplectic_J4<Quaternion>());
      for (const Quaternion& x : {one, qi, qj, w}) add(upper_translation(herm2(zero, x, zero)));
      add(upper_translation(herm2(one, zero, zero)));
      add(upper_translation(herm2(zero, zero, one)));
      for (const Mat<Quaternion>& U :
           {Mat<Quaternion>(2, 2, {one, one, zero, one}), Mat<Quaternion>(2, 2, {one, w, zero, one}),
            Mat<Quaternion>(2, 2, {zero, one, one, zero})})
        add(gl_embed(U, quat_mat_inv(conj_transpose(U))));
      for (const Quaternion& u : {qi, w}) {
        Mat<Quaternion> M = Mat<Quaternion>::identity(4);
        M.at(0, 0) = u;
        M.at(2, 2) = u;
        add(M);
      }
      add(Mat<Quaternion>::identity(4).scaled(w));
      for (GroupElem& g : pool) {
        g.kind = kind;
        if (kind == GroupKind::QuatSpecial && !is_member(g).ok) continue;
        out.push_back(g);
      }
      if (kind == GroupKind::QuatExtended)
        out.push_back(make_quat(kind, Mat<Quaternion>::identity(4), 1));
      break;
    }
  }
  for (const GroupElem& g : out)
    if (!is_member(g).ok) throw Error(ErrorCode::Domain, "generator fails membership");
  return out;
}

// ---- group operations ----

Quaternion lambda_conj(const Quaternion& q) {
  Quaternion l(Rat(1), Rat(1), Rat(0), Rat(0));  // lambda = (1+i)/sqrt2; scale cancels
  return l * q * conj(l) * Quaternion(Rat(1, 2));
}

Quaternion lambda_conj_inv(const Quaternion& q) {
  Quaternion l(Rat(1), Rat(-1), Rat(0), Rat(0));
  return l * q * conj(l) * Quaternion(Rat(1, 2));
}

namespace {

void require_same_group(const GroupElem& a, const GroupElem& b) {
  if (a.kind != b.kind || (a.kind == GroupKind::Hermitian && a.m != b.m))
    throw Error(ErrorCode::Parameter, "elements from different groups");
}

Mat<Quaternion> map_entries(const Mat<Quaternion>& M, Quaternion (*f)(const Quaternion&)) {
  return M.template map<Quaternion>(f);
}

}  // namespace

GroupElem group_mul(const GroupElem& a, const GroupElem& b) {
  require_same_group(a, b);
  GroupElem out = a;
  switch (a.kind) {
    case GroupKind::Siegel: out.M = a.rat() * b.rat(); return out;
    case GroupKind::Hermitian: out.M = a.quad() * b.quad(); return out;
    default: break;
  }
  // lambda^h1 M1 * lambda^h2 M2 = lambda^(h1+h2) (lambda^-h2 M1 lambda^h2) M2
  Mat<Quaternion> M1 = a.quat();
  if (b.halfTurn) M1 = map_entries(M1, lambda_conj_inv);
  Mat<Quaternion> P = M1 * b.quat();
  int h = a.halfTurn + b.halfTurn;
  if (h == 2) {  // lambda^2 = i, a Hurwitz scalar
    Quaternion qi(Rat(0), Rat(1), Rat(0), Rat(0));
    P = P.template map<Quaternion>([&](const Quaternion& x) { return qi * x; });
    h = 0;
  }
  out.halfTurn = h;
  out.M = P;
  return out;
}

GroupElem group_inverse(const GroupElem& g) {
  GroupElem out = g;
  auto sympl_inv = [](const auto& M) {
    auto R = M;
    R.set_block(0, 0, conj_transpose(M.block(2, 2, 2, 2)));
    R.set_block(0, 2, -conj_transpose(M.block(0, 2, 2, 2)));
    R.set_block(2, 0, -conj_transpose(M.block(2, 0, 2, 2)));
    R.set_block(2, 2, conj_transpose(M.block(0, 0, 2, 2)));
    return R;
  };
  switch (g.kind) {
    case GroupKind::Siegel: out.M = sympl_inv(g.rat()); return out;
    case GroupKind::Hermitian: out.M = sympl_inv(g.quad()); return out;
    default: break;
  }
  Mat<Quaternion> Mi = sympl_inv(g.quat());
  if (g.halfTurn) {
    // (lambda M)^-1 = lambda * (lambda^-1 M^-1 lambda) * lambda^-2, lambda^-2 = -i
    Mi = map_entries(Mi, lambda_conj_inv);
    Quaternion mi(Rat(0), Rat(-1), Rat(0), Rat(0));
    Mi = Mi.scaled(mi);
  }
  out.M = Mi;
  return out;
}

bool group_equal(const GroupElem& a, const GroupElem& b) {
  if (a.kind != b.kind || a.halfTurn != b.halfTurn) return false;
  if (a.kind == GroupKind::Hermitian && a.m != b.m) return false;
  return a.M == b.M;
}

GroupElem sample_word_rng(GroupKind kind, long m, int length, Rng& rng) {
  std::vector<GroupElem> gens = generators(kind, m);
  GroupElem acc = group_identity(kind, m);
  for (int i = 0; i < length; ++i) {
    const GroupElem& g = gens[static_cast<size_t>(rng.below(gens.size()))];
    acc = group_mul(acc, rng.coin() ? group_inverse(g) : g);
  }
  return acc;
}

GroupElem sample_word(GroupKind kind, long m, int length, std::uint64_t seed) {
  Rng rng(seed);
  return sample_word_rng(kind, m, length, rng);
}

// ---- sample points and the action ----

SamplePoint make_sample_point(GroupKind kind, long m, const GroupMat& Z) {
  SamplePoint p;
  p.kind = kind;
  p.m = m;
  p.Z = Z;
  auto bad = [] { throw Error(ErrorCode::Parameter, "sample point must be 2x2 Hermitian"); };
  switch (kind) {
    case GroupKind::Siegel: {
      const MatQ& W = std::get<MatQ>(Z);
      if (W.r != 2 || W.c != 2 || W != W.transpose()) bad();
      break;
    }
    case GroupKind::Hermitian: {
      const auto& W = std::get<Mat<QuadInt>>(Z);
      if (W.r != 2 || W.c != 2 || W != conj_transpose(W)) bad();
      break;
    }
    default: {
      const auto& W = std::get<Mat<Quaternion>>(Z);
      if (W.r != 2 || W.c != 2 || W != conj_transpose(W)) bad();
      break;
    }
  }
  return p;
}

SamplePoint random_sample_point(GroupKind kind, long m, Rng& rng) {
  auto rr = [&]() -> Rat {
    Rat num(rng.range(-6, 6));
    return num / Rat(1 + static_cast<long>(rng.below(3)));
  };
  switch (kind) {
    case GroupKind::Siegel: {
      Rat x = rr();
      return make_sample_point(kind, 0, MatQ(2, 2, {rr(), x, x, rr()}));
    }
    case GroupKind::Hermitian: {
      QuadInt z(rr(), rr(), m);
      return make_sample_point(kind, m, herm2(QuadInt(rr()), z, QuadInt(rr())));
    }
    default: {
      Quaternion z(rr(), rr(), rr(), rr());
      return make_sample_point(kind, 0, herm2(Quaternion(rr()), z, Quaternion(rr())));
    }
  }
}

namespace {

template <class T, class InvFn>
Mat<T> mobius_core(const Mat<T>& M, const Mat<T>& Z, InvFn inv) {
  Mat<T> A = M.block(0, 0, 2, 2), B = M.block(0, 2, 2, 2);
  Mat<T> C = M.block(2, 0, 2, 2), D = M.block(2, 2, 2, 2);
  Mat<T> den = C * Z + D;
  Mat<T> W = (A * Z + B) * inv(den);
  if (W != conj_transpose(W))
    throw Error(ErrorCode::Domain, "Moebius image is not Hermitian");
  return W;
}

}  // namespace

SamplePoint mobius(const GroupElem& g, const SamplePoint& Z) {
  if (g.kind != Z.kind || (g.kind == GroupKind::Hermitian && g.m != Z.m))
    throw Error(ErrorCode::Parameter, "element and point from different settings");
  SamplePoint out = Z;
  switch (g.kind) {
    case GroupKind::Siegel:
      out.Z = mobius_core(g.rat(), Z.rat(), [](const MatQ& X) {
        if (det2(X) == 0) throw Error(ErrorCode::NotInvertible, "CZ+D is singular");
        return inv_mat_field(X);
      });
      return out;
    case GroupKind::Hermitian:
      out.Z = mobius_core(g.quad(), Z.quad(), [](const Mat<QuadInt>& X) {
        if (is_zero(det_field(X))) throw Error(ErrorCode::NotInvertible, "CZ+D is singular");
        return inv_mat_field(X);
      });
      return out;
    default: {
      Mat<Quaternion> W = mobius_core(g.quat(), Z.quat(), [](const Mat<Quaternion>& X) {
        if (det_vee(X) == 0) throw Error(ErrorCode::NotInvertible, "CZ+D is singular");
        return quat_mat_inv(X);
      });
      if (g.halfTurn) W = map_entries(W, lambda_conj);
      out.Z = W;
      return out;
    }
  }
}

CocycleResult cocycle(const GroupElem& g, const SamplePoint& Z) {
  if (g.kind != Z.kind || (g.kind == GroupKind::Hermitian && g.m != Z.m))
    throw Error(ErrorCode::Parameter, "element and point from different settings");
  CocycleResult res;
  switch (g.kind) {
    case GroupKind::Siegel: {
      const MatQ& M = g.rat();
      MatQ C = M.block(2, 0, 2, 2), D = M.block(2, 2, 2, 2);
      MatQ CZ = C * Z.rat();
      Rat det = det2(CZ + D);
      // adjoint expansion det(X+Y) = det X + det Y + tr(adj(X) Y)
      MatQ T = adjoint2(CZ) * D;
      if (det != det2(CZ) + det2(D) + T.at(0, 0) + T.at(1, 1))
        throw Error(ErrorCode::Domain, "determinant expansion identity failed");
      res.scalar = det;
      return res;
    }
    case GroupKind::Hermitian: {
      const Mat<QuadInt>& M = g.quad();
      Mat<QuadInt> den = M.block(2, 0, 2, 2) * Z.quad() + M.block(2, 2, 2, 2);
      QuadInt det = det2(den);
      if (det.b != 0)
        throw Error(ErrorCode::Domain, "Hermitian cocycle determinant is not real");
      res.scalar = det.a;
      return res;
    }
    default: {
      const Mat<Quaternion>& M = g.quat();
      Mat<Quaternion> den = M.block(2, 0, 2, 2) * Z.quat() + M.block(2, 2, 2, 2);
      res.quaternionic = true;
      res.vee_mat = vee(den);
      CRat d = det_field(res.vee_mat);
      if (d.im != 0) throw Error(ErrorCode::Domain, "vee determinant is not real");
      res.scalar = d.re;
      return res;
    }
  }
}

}  // namespace omod
