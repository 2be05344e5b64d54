#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace omod {

using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorCode {
  Parameter,
  Domain,
  NotInvertible,
  NotLemmaTwoBlock,
  SingularBlock,
  DegenerateLift,
  Parse,
};

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw Error(ErrorCode::Domain, "expected integer, got " + q.get_str());
  return q.get_num();
}

inline bool is_perfect_square(const Int& n, Int& root) {
  if (n < 0) return false;
  Int rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  return rem == 0;
}

/// Exact square root of a nonnegative rational, if one exists.
inline bool rational_sqrt(const Rat& q, Rat& root) {
  Int rn, rd;
  if (!is_perfect_square(q.get_num(), rn)) return false;
  if (!is_perfect_square(q.get_den(), rd)) return false;
  root = Rat(rn, rd);
  return true;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor division and the matching remainder (sign of divisor irrelevant, r in [0, |b|)).
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_pos(const Int& a, const Int& b) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_squarefree(long m) {
  if (m < 1) return false;
  for (long p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

/// Deterministic RNG used by all sampling; never uses std distributions so
/// sequences are identical across platforms.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t raw() { return eng(); }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return eng() % n; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (eng() & 1) != 0; }
};

}  // namespace omod
