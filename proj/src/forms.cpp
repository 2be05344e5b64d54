#include "orthomod/forms.hpp"

#include <algorithm>

namespace omod {

std::pair<int, int> signature_of(const MatI& gram) {
  int k = gram.r;
  MatQ A = to_rational(gram);
  auto add_into = [&](int i, int j) {  // congruence: row_i += row_j, col_i += col_j
    for (int t = 0; t < k; ++t) A.at(i, t) += A.at(j, t);
    for (int t = 0; t < k; ++t) A.at(t, i) += A.at(t, j);
  };
  int p = 0, q = 0;
  for (int i = 0; i < k; ++i) {
    if (A.at(i, i) == 0) {
      int sw = -1, off = -1;
      for (int j = i + 1; j < k; ++j) {
        if (A.at(j, j) != 0 && sw < 0) sw = j;
        if (A.at(i, j) != 0 && off < 0) off = j;
      }
      if (sw >= 0) {
        for (int t = 0; t < k; ++t) std::swap(A.at(i, t), A.at(sw, t));
        for (int t = 0; t < k; ++t) std::swap(A.at(t, i), A.at(t, sw));
      } else if (off >= 0) {
        add_into(i, off);
      } else {
        continue;  // zero row: contributes nothing
      }
    }
    Rat piv = A.at(i, i);
    if (piv > 0) ++p; else ++q;
    for (int r = i + 1; r < k; ++r) {
      Rat f = A.at(r, i) / piv;
      if (f == 0) continue;
      for (int t = 0; t < k; ++t) A.at(r, t) -= f * A.at(i, t);
      for (int t = 0; t < k; ++t) A.at(t, r) -= f * A.at(t, i);
    }
  }
  return {p, q};
}

namespace {

// Gram of the 2-plane spanned by the rows of P, under gram.
MatI plane_gram(const MatI& gram, const MatI& P) { return P * gram * P.transpose(); }

bool posdef2(const MatI& G) {
  return G.at(0, 0) > 0 && G.at(0, 0) * G.at(1, 1) - G.at(0, 1) * G.at(1, 0) > 0;
}

}  // namespace

EvenForm make_even_form(const MatI& gram, const std::string& name) {
  if (gram.r != gram.c || gram != gram.transpose())
    throw Error(ErrorCode::Parameter, "gram matrix must be symmetric");
  for (int i = 0; i < gram.r; ++i)
    if (!divides(2, gram.at(i, i)))
      throw Error(ErrorCode::Parameter, "form is not even");
  EvenForm f;
  f.gram = gram;
  f.name = name;
  auto [p, q] = signature_of(gram);
  f.p = p;
  f.q = q;
  if (p == 2 && q > 0) {
    // search small candidate vectors for an orthogonal positive pair
    int k = gram.r;
    std::vector<std::vector<Int>> cand;
    for (int i = 0; i < k; ++i) {
      std::vector<Int> v(k, 0);
      v[i] = 1;
      cand.push_back(v);
      for (int j = i + 1; j < k; ++j) {
        for (int s : {1, -1}) {
          std::vector<Int> w(k, 0);
          w[i] = 1;
          w[j] = s;
          cand.push_back(w);
        }
      }
    }
    for (size_t a = 0; a < cand.size() && !f.has_plane; ++a)
      for (size_t b = a + 1; b < cand.size() && !f.has_plane; ++b) {
        MatI P(2, k);
        for (int t = 0; t < k; ++t) {
          P.at(0, t) = cand[a][t];
          P.at(1, t) = cand[b][t];
        }
        if (posdef2(plane_gram(gram, P))) {
          f.plane = P;
          f.has_plane = true;
        }
      }
    if (!f.has_plane)
      throw Error(ErrorCode::Domain, "no small positive 2-plane found for " + name);
  }
  return f;
}

// ---- builders ----

MatI gram_U2() { return gram_U2_scaled(1); }

MatI gram_U2_scaled(long N) {
  MatI G(2, 2);
  G.at(0, 1) = N;
  G.at(1, 0) = N;
  return G;
}

MatI gram_SK(long m) {
  MatI G(2, 2);
  G.at(0, 0) = 2;
  G.at(0, 1) = omega_trace(m);
  G.at(1, 0) = omega_trace(m);
  G.at(1, 1) = 2 * omega_norm(m);
  return G;
}

MatI gram_T(long m, long N) {
  long n = omega_norm(m);
  if (N <= 0 || !is_squarefree(m) || n % N != 0 ||
      field_discriminant(m) % N != 0 || !is_squarefree(N))
    throw Error(ErrorCode::Parameter, "N must be a squarefree divisor of the discriminant");
  MatI G(2, 2);
  G.at(0, 0) = 2 * N;
  G.at(0, 1) = omega_trace(m);
  G.at(1, 0) = omega_trace(m);
  G.at(1, 1) = 2 * n / N;
  return G;
}

MatI gram_hurwitz_S() {
  // basis (1, i, j, w): entries tr(b_u conj(b_v))
  MatI G(4, 4, {Int(2), Int(0), Int(0), Int(1), Int(0), Int(2), Int(0), Int(1), Int(0), Int(0),
                Int(2), Int(1), Int(1), Int(1), Int(1), Int(2)});
  return G;
}

MatI diag_concat(const std::vector<MatI>& blocks) {
  int n = 0;
  for (const MatI& b : blocks) n += b.r;
  MatI G(n, n);
  int at = 0;
  for (const MatI& b : blocks) {
    G.set_block(at, at, b);
    at += b.r;
  }
  return G;
}

MatI scaled_gram(const MatI& g, long N) {
  return g.template map<Int>([&](const Int& x) { return x * N; });
}

namespace {

// Hyperbolic pair of weight w on the outer indices, `inner` in the middle.
MatI wrap_pair(long w, const MatI& inner) {
  int k = inner.r + 2;
  MatI G(k, k);
  G.set_block(1, 1, inner);
  G.at(0, k - 1) = w;
  G.at(k - 1, 0) = w;
  return G;
}

MatI minus(const MatI& g) { return -g; }

MatI inner_gram(GroupKind kind, long m) {
  switch (kind) {
    case GroupKind::Siegel: {
      MatI g(1, 1);
      g.at(0, 0) = 2;
      return g;
    }
    case GroupKind::Hermitian: return gram_SK(m);
    default: return gram_hurwitz_S();
  }
}

}  // namespace

MatI gram_S0(GroupKind kind, long m) { return wrap_pair(1, minus(inner_gram(kind, m))); }

MatI gram_S1(GroupKind kind, long m) { return wrap_pair(1, gram_S0(kind, m)); }

EvenForm form_S1(GroupKind kind, long m) {
  return make_even_form(gram_S1(kind, m), "S1-" + kind_name(kind));
}

EvenForm form_thm1c(long n, long N) {
  MatI g(1, 1);
  g.at(0, 0) = -2;
  return make_even_form(wrap_pair(N, wrap_pair(n, g)), "U(N)+U(n)+(-2)");
}

EvenForm form_thm2c(long m, long n, long N) {
  return make_even_form(wrap_pair(N, wrap_pair(n, minus(gram_SK(m)))), "U(N)+U(n)+(-SK)");
}

EvenForm form_thm3(long m, long N) {
  return make_even_form(wrap_pair(N, wrap_pair(N, minus(gram_T(m, N)))), "U(N)+U(N)+(-T)");
}

EvenForm form_cor2() {
  return make_even_form(wrap_pair(2, wrap_pair(2, minus(gram_hurwitz_S()))), "U(2)+U(2)+(-S)");
}

EvenForm form_remark_a3(long m, long N) {
  long n = omega_norm(m);
  if (N <= 0 || n % N != 0) throw Error(ErrorCode::Parameter, "N must divide norm(omega)");
  MatI d(2, 2);
  d.at(0, 0) = -2 * N;
  d.at(1, 1) = -2 * (n / N);
  return make_even_form(wrap_pair(N, wrap_pair(N, d)), "U(N)+U(N)+diag(-2N,-2n/N)");
}

EvenForm build_form(const std::string& name, long m, long n, long N) {
  if (name == "s1-siegel") return form_S1(GroupKind::Siegel);
  if (name == "s1-hermitian") return form_S1(GroupKind::Hermitian, m);
  if (name == "s1-quat") return form_S1(GroupKind::QuatSp);
  if (name == "s0-siegel") return make_even_form(gram_S0(GroupKind::Siegel, 0), "S0-siegel");
  if (name == "s0-hermitian") return make_even_form(gram_S0(GroupKind::Hermitian, m), "S0-hermitian");
  if (name == "s0-quat") return make_even_form(gram_S0(GroupKind::QuatSp, 0), "S0-quat");
  if (name == "sk") return make_even_form(gram_SK(m), "SK");
  if (name == "t") return make_even_form(gram_T(m, N), "T");
  if (name == "hurwitz-s") return make_even_form(gram_hurwitz_S(), "hurwitz-S");
  if (name == "thm1c") return form_thm1c(n, N);
  if (name == "thm2c") return form_thm2c(m, n, N);
  if (name == "thm3") return form_thm3(m, N);
  if (name == "cor2") return form_cor2();
  if (name == "remark-a3") return form_remark_a3(m, N);
  throw Error(ErrorCode::Parameter, "unknown form name: " + name);
}

// ---- predicates ----

bool is_orthogonal(const MatI& U, const EvenForm& f) {
  if (U.r != f.dim() || U.c != f.dim())
    throw Error(ErrorCode::Parameter, "automorph has the wrong size");
  if (U.transpose() * f.gram * U != f.gram) return false;
  return det_field(to_rational(U)) == 1;
}

bool is_so0(const MatI& U, const EvenForm& f) {
  if (!is_orthogonal(U, f)) return false;
  if (!f.has_plane) return true;  // definite or not (2,n): one component in SO
  MatI moved = f.plane * U.transpose();  // rows U*v_i
  MatI gv = moved * f.gram * f.plane.transpose();  // b(U v_i, v_j)
  return gv.at(0, 0) * gv.at(1, 1) - gv.at(0, 1) * gv.at(1, 0) > 0;
}

bool in_discriminant_kernel(const MatI& U, const EvenForm& f, long scale) {
  if (!is_so0(U, f)) return false;
  MatI lat = scaled_gram(f.gram, scale);
  return in_matrix_lattice(U - MatI::identity(f.dim()), lat);
}

bool in_kernel_variant23(const MatI& U, const EvenForm& f, long N, Int* rho_out) {
  if (!is_so0(U, f)) return false;
  MatI lat = scaled_gram(f.gram, N);
  std::vector<Int> inv = smith_invariants(lat);
  Int period = inv.empty() ? Int(1) : inv.back();
  Int bound = int_lcm(period, Int(2 * N));
  MatI H = hnf_rows(lat);
  for (Int rho = 1; rho <= bound; rho += 2) {
    if (mod_pos(rho * rho - 1, Int(N)) != 0) continue;
    MatI diff = U - MatI::identity(f.dim()).template map<Int>([&](const Int& x) { return x * rho; });
    bool ok = true;
    for (int i = 0; i < diff.r && ok; ++i) {
      std::vector<Int> row(diff.c);
      for (int j = 0; j < diff.c; ++j) row[j] = diff.at(i, j);
      for (const Int& x : reduce_mod_lattice(H, row))
        if (x != 0) ok = false;
    }
    if (ok) {
      if (rho_out) *rho_out = rho;
      return true;
    }
  }
  return false;
}

MatQ diag_rational(const std::vector<Rat>& d) {
  MatQ F(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) F.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return F;
}

bool conjugated_kernel_test(const MatQ& U, const EvenForm& inner, const MatQ& F,
                            bool invert_left) {
  MatQ Fi = inv_mat_field(F);
  MatQ W = invert_left ? Fi * U * F : F * U * Fi;
  if (!is_integral(W)) return false;
  return in_discriminant_kernel(to_integral(W), inner, 1);
}

// ---- automorph enumeration for definite forms ----

std::vector<MatI> enumerate_aut(const EvenForm& f) {
  int k = f.dim();
  bool posdef = f.q == 0, negdef = f.p == 0;
  if (!posdef && !negdef)
    throw Error(ErrorCode::Parameter, "automorph enumeration needs a definite form");
  MatI G = negdef ? minus(f.gram) : f.gram;
  if (k > 4) throw Error(ErrorCode::Parameter, "automorph enumeration limited to rank 4");

  // box bounds: x^t G x = c implies x_i^2 <= c * (G^-1)_ii
  MatQ Gi = inv_mat_field(to_rational(G));
  Int maxdiag = 0;
  for (int i = 0; i < k; ++i) maxdiag = std::max(maxdiag, G.at(i, i));
  std::vector<long> bound(k);
  for (int i = 0; i < k; ++i) {
    Rat b2 = Rat(maxdiag) * Gi.at(i, i);
    long b = 0;
    while (Rat((b + 1)) * Rat(b + 1) <= b2) ++b;
    bound[i] = b;
  }

  // all vectors with norm equal to some diagonal entry
  std::vector<std::vector<Int>> vecs;
  std::vector<Int> cur(k, 0);
  std::vector<Int> diag_norms;
  for (int i = 0; i < k; ++i) diag_norms.push_back(G.at(i, i));
  std::function<void(int)> gen = [&](int idx) {
    if (idx == k) {
      Int norm = 0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) norm += cur[i] * G.at(i, j) * cur[j];
      for (const Int& d : diag_norms)
        if (norm == d) {
          vecs.push_back(cur);
          break;
        }
      return;
    }
    for (long v = -bound[idx]; v <= bound[idx]; ++v) {
      cur[idx] = v;
      gen(idx + 1);
    }
  };
  gen(0);

  std::vector<MatI> out;
  std::vector<std::vector<Int>> cols(k);
  std::function<void(int)> place = [&](int j) {
    if (j == k) {
      MatI U(k, k);
      for (int col = 0; col < k; ++col)
        for (int i = 0; i < k; ++i) U.at(i, col) = cols[col][i];
      if (det_field(to_rational(U)) == 1) out.push_back(U);
      return;
    }
    for (const auto& v : vecs) {
      Int norm = 0;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) norm += v[a] * G.at(a, b) * v[b];
      if (norm != G.at(j, j)) continue;
      bool ok = true;
      for (int prev = 0; prev < j && ok; ++prev) {
        Int ip = 0;
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) ip += cols[prev][a] * G.at(a, b) * v[b];
        if (ip != G.at(prev, j)) ok = false;
      }
      if (!ok) continue;
      cols[j] = v;
      place(j + 1);
    }
  };
  place(0);
  return out;
}

}  // namespace omod
