#include "orthomod/rings.hpp"

#include <algorithm>
#include <sstream>

#include "orthomod/lattice.hpp"

namespace omod {

const std::vector<Quaternion>& hurwitz_units() {
  static const std::vector<Quaternion> units = [] {
    std::vector<Quaternion> u;
    for (int s = 0; s < 2; ++s)
      for (int ax = 0; ax < 4; ++ax) {
        Quaternion q;
        q.c[ax] = s ? Rat(-1) : Rat(1);
        u.push_back(q);
      }
    for (int mask = 0; mask < 16; ++mask) {
      Quaternion q;
      for (int i = 0; i < 4; ++i) q.c[i] = (mask >> i) & 1 ? Rat(-1, 2) : Rat(1, 2);
      u.push_back(q);
    }
    return u;
  }();
  return units;
}

static bool lex_less(const Quaternion& x, const Quaternion& y) {
  for (int i = 0; i < 4; ++i) {
    if (x.c[i] < y.c[i]) return true;
    if (x.c[i] > y.c[i]) return false;
  }
  return false;
}

Quaternion nearest_hurwitz(const Quaternion& x) {
  bool have = false;
  Quaternion best;
  Rat best_n;
  auto consider = [&](const Quaternion& q) {
    Quaternion d = x - q;
    Rat n = quat_norm(d);
    if (!have || n < best_n || (n == best_n && lex_less(q, best))) {
      have = true;
      best = q;
      best_n = n;
    }
  };
  // integer corners
  std::array<Int, 4> fl;
  for (int i = 0; i < 4; ++i) fl[i] = floor_div(x.c[i].get_num(), x.c[i].get_den());
  for (int mask = 0; mask < 16; ++mask) {
    Quaternion q;
    for (int i = 0; i < 4; ++i) q.c[i] = Rat(fl[i] + ((mask >> i) & 1));
    consider(q);
  }
  // half-integer corners
  std::array<Int, 4> fh;
  for (int i = 0; i < 4; ++i) {
    Rat y = x.c[i] - Rat(1, 2);
    fh[i] = floor_div(y.get_num(), y.get_den());
  }
  for (int mask = 0; mask < 16; ++mask) {
    Quaternion q;
    for (int i = 0; i < 4; ++i) q.c[i] = Rat(fh[i] + ((mask >> i) & 1)) + Rat(1, 2);
    consider(q);
  }
  return best;
}

// F4 tables; elements 0,1,w,wbar with wbar = 1 + w, w^2 = wbar.
F4Elem operator+(F4Elem x, F4Elem y) {
  static const std::uint8_t t[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return F4Elem::raw(t[x.v][y.v]);
}
F4Elem operator*(F4Elem x, F4Elem y) {
  static const std::uint8_t t[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return F4Elem::raw(t[x.v][y.v]);
}
F4Elem f4_inv(F4Elem x) {
  switch (x.v) {
    case 1: return F4Elem::raw(1);
    case 2: return F4Elem::raw(3);
    case 3: return F4Elem::raw(2);
    default: throw Error(ErrorCode::NotInvertible, "inverse of zero in F4");
  }
}
std::string f4_name(F4Elem x) {
  static const char* names[4] = {"0", "1", "w", "wbar"};
  return names[x.v];
}

IdealBasis make_ideal(int dim, const MatI& gens, const std::string& name) {
  IdealBasis I;
  I.dim = dim;
  I.gens = gens;
  I.hnf = hnf_rows(gens);
  I.name = name;
  if (I.hnf.r != dim)
    throw Error(ErrorCode::Parameter, "ideal basis does not have full rank: " + name);
  return I;
}

bool IdealBasis::contains(const std::vector<Int>& coords) const {
  std::vector<Int> rem = reduce_mod_lattice(hnf, coords);
  for (const Int& x : rem)
    if (x != 0) return false;
  return true;
}

std::vector<Int> IdealBasis::canonical_rep(const std::vector<Int>& coords) const {
  return reduce_mod_lattice(hnf, coords);
}

IdealBasis ideal_N_OK(long m, long N) {
  if (!is_squarefree(m)) throw Error(ErrorCode::Parameter, "m must be squarefree");
  MatI g(2, 2);
  g.at(0, 0) = N;
  g.at(1, 1) = N;
  return make_ideal(2, g, "N*O_K");
}

IdealBasis ideal_IN(long m, long N) {
  if (!is_squarefree(m)) throw Error(ErrorCode::Parameter, "m must be squarefree");
  long d = -field_discriminant(m);
  if (N <= 0 || !is_squarefree(N) || d % N != 0)
    throw Error(ErrorCode::Parameter, "N must be a squarefree divisor of the discriminant");
  MatI g(2, 2);
  g.at(0, 0) = N;      // N
  g.at(1, 1) = 1;      // omega_K
  return make_ideal(2, g, "I_N");
}

IdealBasis ideal_wp() {
  // 2, 1+i, 1+j, 1+k in doubled coordinates
  MatI g(4, 4);
  g.at(0, 0) = 4;
  g.at(1, 0) = 2; g.at(1, 1) = 2;
  g.at(2, 0) = 2; g.at(2, 2) = 2;
  g.at(3, 0) = 2; g.at(3, 3) = 2;
  return make_ideal(4, g, "wp");
}

IdealBasis ideal_N_wp(long N) {
  IdealBasis base = ideal_wp();
  MatI g = base.gens.scaled(Int(N));
  return make_ideal(4, g, "N*wp");
}

IdealBasis ideal_N_O_quat(long N) {
  // N, Ni, Nj, N*omega in doubled coordinates
  MatI g(4, 4);
  g.at(0, 0) = 2 * N;
  g.at(1, 1) = 2 * N;
  g.at(2, 2) = 2 * N;
  g.at(3, 0) = N; g.at(3, 1) = N; g.at(3, 2) = N; g.at(3, 3) = N;
  return make_ideal(4, g, "N*O");
}

std::vector<Int> quad_coords(const QuadInt& x) {
  if (!quad_is_integral(x))
    throw Error(ErrorCode::Domain, "non-integral quadratic integer in ideal computation");
  return {x.a.get_num(), x.b.get_num()};
}

std::vector<Int> quat_coords_doubled(const Quaternion& x) {
  std::vector<Int> v(4);
  for (int i = 0; i < 4; ++i) {
    Rat d = 2 * x.c[i];
    if (!is_integer(d))
      throw Error(ErrorCode::Domain, "quaternion outside (1/2)Z^4 in ideal computation");
    v[i] = d.get_num();
  }
  if (!is_hurwitz(x)) throw Error(ErrorCode::Domain, "non-integral quaternion in ideal computation");
  return v;
}

bool in_ideal(const QuadInt& x, const IdealBasis& I) { return I.contains(quad_coords(x)); }
bool in_ideal(const Quaternion& x, const IdealBasis& I) { return I.contains(quat_coords_doubled(x)); }

F4Elem residue_mod_wp(const Quaternion& x) {
  static const IdealBasis wp = ideal_wp();
  const Quaternion reps[4] = {Quaternion(0), Quaternion(1), quat_omega(), conj(quat_omega())};
  for (int i = 0; i < 4; ++i)
    if (in_ideal(x - reps[i], wp)) return F4Elem::raw(static_cast<std::uint8_t>(i));
  throw Error(ErrorCode::Domain, "quaternion not congruent to any F4 class");
}

// ---- strings ----

std::string to_string(const Rat& x) {
  return x.get_str();
}

std::string to_string(const QuadInt& x) {
  return to_string(x.a) + "+" + to_string(x.b) + "*w";
}

std::string to_string(const Quaternion& x) {
  std::ostringstream os;
  os << "[" << to_string(x.c[0]) << "," << to_string(x.c[1]) << "," << to_string(x.c[2]) << ","
     << to_string(x.c[3]) << "]";
  return os.str();
}

Rat parse_rat(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    if (q.get_den() < 0) q = Rat(-q.get_num(), -q.get_den());
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "bad rational: '" + s + "'");
  }
}

QuadInt parse_quad(const std::string& s, long m) {
  // form "a+b*w" with rational a, b; negative b appears as "a+-b*w"
  auto star = s.find("*w");
  if (star == std::string::npos) return QuadInt(parse_rat(s));
  size_t sep = std::string::npos;
  for (size_t i = star; i-- > 1;) {
    if (s[i] == '+') { sep = i; break; }
  }
  if (sep == std::string::npos) throw Error(ErrorCode::Parse, "bad quadratic integer: '" + s + "'");
  Rat a = parse_rat(s.substr(0, sep));
  Rat b = parse_rat(s.substr(sep + 1, star - sep - 1));
  return {a, b, m};
}

Quaternion parse_quat(const std::string& s) {
  std::string t = s;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw Error(ErrorCode::Parse, "bad quaternion: '" + s + "'");
  t = t.substr(1, t.size() - 2);
  std::vector<Rat> parts;
  std::istringstream is(t);
  std::string item;
  while (std::getline(is, item, ',')) parts.push_back(parse_rat(item));
  if (parts.size() != 4) throw Error(ErrorCode::Parse, "quaternion needs 4 components: '" + s + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace omod
