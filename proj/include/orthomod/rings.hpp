#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "orthomod/mat.hpp"
#include "orthomod/numeric.hpp"

namespace omod {

// ---------------------------------------------------------------------------
// Imaginary-quadratic integers a + b*omega_K, K = Q(sqrt(-m)), m squarefree.
// omega_K = (m+sqrt(-m))/2 if m = 3 mod 4, else m+sqrt(-m).
// Coordinates are rational so that field arithmetic (inverses, Moebius
// denominators) stays in the same type; integrality is a predicate.
// ---------------------------------------------------------------------------

inline long omega_trace(long m) { return (m % 4 == 3) ? m : 2 * m; }
inline long omega_norm(long m) { return (m % 4 == 3) ? (m * m + m) / 4 : m * m + m; }
inline long field_discriminant(long m) { return (m % 4 == 3) ? -m : -4 * m; }

struct QuadInt {
  Rat a, b;  // a + b*omega_K
  long m = 0;  // 0 = plain rational (field not yet pinned)

  QuadInt() : a(0), b(0), m(0) {}
  QuadInt(int x) : a(x), b(0), m(0) {}
  QuadInt(const Rat& x) : a(x), b(0), m(0) {}
  QuadInt(const Rat& a_, const Rat& b_, long m_) : a(a_), b(b_), m(m_) {}

  bool operator==(const QuadInt& o) const {
    if (a != o.a || b != o.b) return false;
    if (b == 0) return true;
    return m == o.m;
  }
  bool operator!=(const QuadInt& o) const { return !(*this == o); }
};

inline long join_field(long m1, long m2) {
  if (m1 == 0) return m2;
  if (m2 == 0) return m1;
  if (m1 != m2) throw Error(ErrorCode::Parameter, "mismatched quadratic field parameters");
  return m1;
}

inline QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  return {x.a + y.a, x.b + y.b, join_field(x.m, y.m)};
}
inline QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  return {x.a - y.a, x.b - y.b, join_field(x.m, y.m)};
}
inline QuadInt operator-(const QuadInt& x) { return {-x.a, -x.b, x.m}; }
inline QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  long m = join_field(x.m, y.m);
  if (m == 0) return {x.a * y.a, Rat(0), 0};
  Rat t(omega_trace(m)), n(omega_norm(m));
  // (a + b w)(c + d w), w^2 = t w - n
  return {x.a * y.a - x.b * y.b * n, x.a * y.b + x.b * y.a + x.b * y.b * t, m};
}
inline QuadInt conj(const QuadInt& x) {
  if (x.m == 0) return x;
  return {x.a + x.b * Rat(omega_trace(x.m)), -x.b, x.m};
}
inline Rat quad_norm(const QuadInt& x) {
  QuadInt n = x * conj(x);
  return n.a;  // b-part vanishes
}
inline Rat quad_trace(const QuadInt& x) { return 2 * x.a + x.b * Rat(x.m == 0 ? 0 : omega_trace(x.m)); }
inline bool is_zero(const QuadInt& x) { return x.a == 0 && x.b == 0; }
inline bool quad_is_integral(const QuadInt& x) { return is_integer(x.a) && is_integer(x.b); }
inline bool quad_is_rational(const QuadInt& x) { return x.b == 0; }
inline QuadInt quad_inv(const QuadInt& x) {
  Rat n = quad_norm(x);
  if (n == 0) throw Error(ErrorCode::NotInvertible, "inverse of zero quadratic integer");
  QuadInt c = conj(x);
  return {c.a / n, c.b / n, x.m};
}
inline QuadInt quad_omega(long m) { return {Rat(0), Rat(1), m}; }

// ---------------------------------------------------------------------------
// Hamilton quaternions over Q; Hurwitz integrality is a predicate.
// ---------------------------------------------------------------------------

struct Quaternion {
  std::array<Rat, 4> c;  // a1 + a2 i + a3 j + a4 k

  Quaternion() : c{Rat(0), Rat(0), Rat(0), Rat(0)} {}
  Quaternion(int x) : c{Rat(x), Rat(0), Rat(0), Rat(0)} {}
  Quaternion(const Rat& x) : c{x, Rat(0), Rat(0), Rat(0)} {}
  Quaternion(Rat a1, Rat a2, Rat a3, Rat a4) : c{a1, a2, a3, a4} {}

  bool operator==(const Quaternion& o) const { return c == o.c; }
  bool operator!=(const Quaternion& o) const { return !(*this == o); }
};

inline Quaternion operator+(const Quaternion& x, const Quaternion& y) {
  return {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]};
}
inline Quaternion operator-(const Quaternion& x, const Quaternion& y) {
  return {x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]};
}
inline Quaternion operator-(const Quaternion& x) { return {-x.c[0], -x.c[1], -x.c[2], -x.c[3]}; }
inline Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  const Rat &a = x.c[0], &b = x.c[1], &cc = x.c[2], &d = x.c[3];
  const Rat &p = y.c[0], &q = y.c[1], &r = y.c[2], &s = y.c[3];
  return {a * p - b * q - cc * r - d * s, a * q + b * p + cc * s - d * r,
          a * r - b * s + cc * p + d * q, a * s + b * r - cc * q + d * p};
}
inline Quaternion conj(const Quaternion& x) { return {x.c[0], -x.c[1], -x.c[2], -x.c[3]}; }
inline Rat quat_norm(const Quaternion& x) {
  return x.c[0] * x.c[0] + x.c[1] * x.c[1] + x.c[2] * x.c[2] + x.c[3] * x.c[3];
}
inline bool is_zero(const Quaternion& x) { return quat_norm(x) == 0; }
inline Quaternion quat_inv(const Quaternion& x) {
  Rat n = quat_norm(x);
  if (n == 0) throw Error(ErrorCode::NotInvertible, "inverse of zero quaternion");
  Quaternion cx = conj(x);
  return {cx.c[0] / n, cx.c[1] / n, cx.c[2] / n, cx.c[3] / n};
}
inline Quaternion quat_omega() { return {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}; }

inline bool is_hurwitz(const Quaternion& x) {
  bool all_int = true, all_half = true;
  for (const Rat& v : x.c) {
    if (!is_integer(v)) all_int = false;
    Rat h = v - Rat(1, 2);
    if (!is_integer(h)) all_half = false;
  }
  return all_int || all_half;
}

/// The 24 units of the Hurwitz order.
const std::vector<Quaternion>& hurwitz_units();

/// Nearest Hurwitz integer to a rational quaternion (minimal norm distance,
/// ties broken lexicographically on coordinates). Distance is always <= 1/2.
Quaternion nearest_hurwitz(const Quaternion& x);

// ---------------------------------------------------------------------------
// Complex rationals (for the vee embedding H -> C^{2x2}).
// ---------------------------------------------------------------------------

struct CRat {
  Rat re, im;
  CRat() : re(0), im(0) {}
  CRat(int x) : re(x), im(0) {}
  CRat(const Rat& r) : re(r), im(0) {}
  CRat(const Rat& r, const Rat& i) : re(r), im(i) {}
  bool operator==(const CRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const CRat& o) const { return !(*this == o); }
};

inline CRat operator+(const CRat& x, const CRat& y) { return {x.re + y.re, x.im + y.im}; }
inline CRat operator-(const CRat& x, const CRat& y) { return {x.re - y.re, x.im - y.im}; }
inline CRat operator-(const CRat& x) { return {-x.re, -x.im}; }
inline CRat operator*(const CRat& x, const CRat& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
inline CRat conj(const CRat& x) { return {x.re, -x.im}; }
inline bool is_zero(const CRat& x) { return x.re == 0 && x.im == 0; }
inline CRat crat_inv(const CRat& x) {
  Rat n = x.re * x.re + x.im * x.im;
  if (n == 0) throw Error(ErrorCode::NotInvertible, "inverse of zero complex rational");
  return {x.re / n, -x.im / n};
}

inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const Int& x) { return x == 0; }

// ---------------------------------------------------------------------------
// F_4 = O/wp, classes {0, 1, omega, omega-bar}; char 2, x^3 = 1 for x != 0.
// ---------------------------------------------------------------------------

struct F4Elem {
  std::uint8_t v = 0;  // 0, 1, 2 = omega, 3 = omega-bar
  F4Elem() = default;
  F4Elem(int x) : v(static_cast<std::uint8_t>(((x % 2) + 2) % 2)) {}
  static F4Elem omega() { return raw(2); }
  static F4Elem omega_bar() { return raw(3); }
  static F4Elem raw(std::uint8_t x) {
    F4Elem e;
    e.v = x;
    return e;
  }
  bool operator==(const F4Elem& o) const { return v == o.v; }
  bool operator!=(const F4Elem& o) const { return v != o.v; }
};

F4Elem operator+(F4Elem x, F4Elem y);
F4Elem operator*(F4Elem x, F4Elem y);
inline F4Elem operator-(F4Elem x) { return x; }  // char 2
inline F4Elem operator-(F4Elem x, F4Elem y) { return x + y; }
inline F4Elem conj(F4Elem x) { return x; }
inline bool is_zero(F4Elem x) { return x.v == 0; }
F4Elem f4_inv(F4Elem x);
std::string f4_name(F4Elem x);

// ---------------------------------------------------------------------------
// Ideals as Z-module bases; membership by integer linear solvability.
// Coordinates: QuadInt in the (1, omega) basis; quaternions in the doubled
// (1,i,j,k) basis so Hurwitz elements have integer coordinates.
// ---------------------------------------------------------------------------

struct IdealBasis {
  int dim = 0;
  MatI gens;             // rows generate the ideal as a Z-module
  MatI hnf;              // cached Hermite form of gens
  std::string name;

  bool contains(const std::vector<Int>& coords) const;
  std::vector<Int> canonical_rep(const std::vector<Int>& coords) const;
};

IdealBasis make_ideal(int dim, const MatI& gens, const std::string& name);

IdealBasis ideal_N_OK(long m, long N);   // N*O_K
IdealBasis ideal_IN(long m, long N);     // I_N = Z N + Z omega_K  (needs N | d_K squarefree)
IdealBasis ideal_wp();                   // prime ideal of even Hurwitz quaternions
IdealBasis ideal_N_wp(long N);           // N * wp
IdealBasis ideal_N_O_quat(long N);       // N * O (Hurwitz)

std::vector<Int> quad_coords(const QuadInt& x);        // integral (1, omega) coordinates
std::vector<Int> quat_coords_doubled(const Quaternion& x);  // 2*(1,i,j,k) coordinates

bool in_ideal(const QuadInt& x, const IdealBasis& I);
bool in_ideal(const Quaternion& x, const IdealBasis& I);

/// Reduction of a Hurwitz quaternion mod wp; result is one of {0,1,w,wbar}.
F4Elem residue_mod_wp(const Quaternion& x);

// ---------------------------------------------------------------------------
// String forms: "p/q", "a+b*w", "[a1,a2,a3,a4]".
// ---------------------------------------------------------------------------

std::string to_string(const Rat& x);
std::string to_string(const QuadInt& x);
std::string to_string(const Quaternion& x);
Rat parse_rat(const std::string& s);
QuadInt parse_quad(const std::string& s, long m);
Quaternion parse_quat(const std::string& s);

}  // namespace omod
