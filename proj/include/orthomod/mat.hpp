#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "orthomod/numeric.hpp"

namespace omod {

/// Dense matrix over an arbitrary scalar. Scalars must provide +,-,*,
/// equality, construction from int, and a free conj().
template <class T>
struct Mat {
  int r = 0, c = 0;
  std::vector<T> e;

  Mat() = default;
  Mat(int rows, int cols) : r(rows), c(cols), e(static_cast<size_t>(rows) * cols, T(0)) {}
  Mat(int rows, int cols, std::initializer_list<T> xs) : r(rows), c(cols), e(xs) {
    if (static_cast<int>(e.size()) != rows * cols)
      throw Error(ErrorCode::Parameter, "matrix initializer size mismatch");
  }

  T& at(int i, int j) { return e[static_cast<size_t>(i) * c + j]; }
  const T& at(int i, int j) const { return e[static_cast<size_t>(i) * c + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  bool operator==(const Mat& o) const { return r == o.r && c == o.c && e == o.e; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const {
    Mat m(r, c);
    for (size_t i = 0; i < e.size(); ++i) m.e[i] = e[i] + o.e[i];
    return m;
  }
  Mat operator-(const Mat& o) const {
    Mat m(r, c);
    for (size_t i = 0; i < e.size(); ++i) m.e[i] = e[i] - o.e[i];
    return m;
  }
  Mat operator-() const {
    Mat m(r, c);
    for (size_t i = 0; i < e.size(); ++i) m.e[i] = -e[i];
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (c != o.r) throw Error(ErrorCode::Parameter, "matrix product size mismatch");
    Mat m(r, o.c);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < c; ++k) {
        const T& x = at(i, k);
        if (x == T(0)) continue;
        for (int j = 0; j < o.c; ++j) m.at(i, j) = m.at(i, j) + x * o.at(k, j);
      }
    return m;
  }
  Mat scaled(const T& s) const {
    Mat m(r, c);
    for (size_t i = 0; i < e.size(); ++i) m.e[i] = e[i] * s;
    return m;
  }

  Mat transpose() const {
    Mat m(c, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : e)
      if (!(x == T(0))) return false;
    return true;
  }

  Mat block(int i0, int j0, int nr, int nc) const {
    Mat m(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
  }
  void set_block(int i0, int j0, const Mat& b) {
    for (int i = 0; i < b.r; ++i)
      for (int j = 0; j < b.c; ++j) at(i0 + i, j0 + j) = b.at(i, j);
  }

  template <class U, class F>
  Mat<U> map(F f) const {
    Mat<U> m(r, c);
    for (size_t i = 0; i < e.size(); ++i) m.e[i] = f(e[i]);
    return m;
  }
};

inline Rat conj(const Rat& x) { return x; }
inline Int conj(const Int& x) { return x; }

template <class T>
Mat<T> conj_transpose(const Mat<T>& m) {
  Mat<T> t(m.c, m.r);
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.c; ++j) t.at(j, i) = conj(m.at(i, j));
  return t;
}

template <class T>
Mat<T> mat_from_rows(const std::vector<std::vector<T>>& rows) {
  Mat<T> m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

using MatI = Mat<Int>;
using MatQ = Mat<Rat>;

inline MatQ to_rational(const MatI& m) {
  return m.template map<Rat>([](const Int& x) { return Rat(x); });
}

inline bool is_integral(const MatQ& m) {
  for (const auto& x : m.e)
    if (!is_integer(x)) return false;
  return true;
}

inline MatI to_integral(const MatQ& m) {
  return m.template map<Int>([](const Rat& x) { return to_int(x); });
}

}  // namespace omod
