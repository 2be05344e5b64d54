#include "orthomod/lattice.hpp"

#include <algorithm>

namespace omod {

static void swap_rows(MatI& A, int i, int j) {
  for (int k = 0; k < A.c; ++k) std::swap(A.at(i, k), A.at(j, k));
}

// row_i -= q * row_j
static void row_axpy(MatI& A, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int k = 0; k < A.c; ++k) A.at(i, k) -= q * A.at(j, k);
}

MatI hnf_rows(const MatI& A) {
  MatI H = A;
  int rank = 0;
  for (int col = 0; col < H.c && rank < H.r; ++col) {
    // make all entries below `rank` in this column zero via Euclid
    for (;;) {
      int piv = -1;
      for (int i = rank; i < H.r; ++i)
        if (H.at(i, col) != 0 && (piv < 0 || abs(H.at(i, col)) < abs(H.at(piv, col)))) piv = i;
      if (piv < 0) break;
      if (piv != rank) swap_rows(H, rank, piv);
      bool clean = true;
      for (int i = rank + 1; i < H.r; ++i) {
        if (H.at(i, col) == 0) continue;
        Int q = floor_div(H.at(i, col), H.at(rank, col));
        row_axpy(H, i, rank, q);
        if (H.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H.at(rank, col) == 0) continue;
    if (H.at(rank, col) < 0)
      for (int k = 0; k < H.c; ++k) H.at(rank, k) = -H.at(rank, k);
    for (int i = 0; i < rank; ++i) {
      Int q = floor_div(H.at(i, col), H.at(rank, col));
      row_axpy(H, i, rank, q);
    }
    ++rank;
  }
  MatI R(rank, H.c);
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < H.c; ++k) R.at(i, k) = H.at(i, k);
  return R;
}

std::vector<Int> reduce_mod_lattice(const MatI& H, const std::vector<Int>& v) {
  std::vector<Int> r = v;
  for (int i = 0; i < H.r; ++i) {
    int piv = 0;
    while (piv < H.c && H.at(i, piv) == 0) ++piv;
    if (piv == H.c) continue;
    Int q = floor_div(r[piv], H.at(i, piv));
    for (int k = 0; k < H.c; ++k) r[k] -= q * H.at(i, k);
  }
  return r;
}

std::vector<Int> smith_invariants(const MatI& A) {
  MatI M = A;
  int n = std::min(M.r, M.c);
  std::vector<Int> inv;
  int top = 0;
  while (top < n) {
    // find smallest nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = top; i < M.r; ++i)
      for (int j = top; j < M.c; ++j)
        if (M.at(i, j) != 0 && (pi < 0 || abs(M.at(i, j)) < abs(M.at(pi, pj)))) { pi = i; pj = j; }
    if (pi < 0) break;
    swap_rows(M, top, pi);
    for (int i = 0; i < M.r; ++i) std::swap(M.at(i, top), M.at(i, pj));
    bool again = false;
    for (int i = top + 1; i < M.r; ++i) {
      Int q = floor_div(M.at(i, top), M.at(top, top));
      row_axpy(M, i, top, q);
      if (M.at(i, top) != 0) again = true;
    }
    for (int j = top + 1; j < M.c; ++j) {
      Int q = floor_div(M.at(top, j), M.at(top, top));
      if (q != 0)
        for (int i = 0; i < M.r; ++i) M.at(i, j) -= q * M.at(i, top);
      if (M.at(top, j) != 0) again = true;
    }
    if (again) continue;
    // divisibility: fold any non-multiple into the pivot column and retry
    Int d = abs(M.at(top, top));
    bool bad = false;
    for (int i = top + 1; i < M.r && !bad; ++i)
      for (int j = top + 1; j < M.c && !bad; ++j)
        if (!divides(d, M.at(i, j))) {
          for (int k = 0; k < M.r; ++k) M.at(k, top) += M.at(k, j);
          bad = true;
        }
    if (bad) continue;
    inv.push_back(d);
    ++top;
  }
  return inv;
}

LatticeImage z_lattice_image(const MatI& S, const MatI* post) {
  MatI M = S;
  if (post) M = M * (*post);
  LatticeImage out;
  out.hnf = hnf_rows(M);
  out.invariants = smith_invariants(M);
  out.diagonal = out.hnf.r == out.hnf.c;
  if (out.diagonal) {
    for (int i = 0; i < out.hnf.r && out.diagonal; ++i)
      for (int j = 0; j < out.hnf.c; ++j)
        if (i != j && out.hnf.at(i, j) != 0) out.diagonal = false;
  }
  if (out.diagonal)
    for (int i = 0; i < out.hnf.r; ++i) out.diag.push_back(out.hnf.at(i, i));
  return out;
}

bool in_matrix_lattice(const MatI& M, const MatI& G) {
  MatI H = hnf_rows(G);
  for (int i = 0; i < M.r; ++i) {
    std::vector<Int> row(M.c);
    for (int j = 0; j < M.c; ++j) row[j] = M.at(i, j);
    std::vector<Int> rem = reduce_mod_lattice(H, row);
    for (const Int& x : rem)
      if (x != 0) return false;
  }
  return true;
}

}  // namespace omod
