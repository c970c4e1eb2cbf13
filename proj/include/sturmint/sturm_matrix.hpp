#pragma once

#include <vector>

#include "sturmint/sturm_chain.hpp"

namespace sturmint {

/// Symmetric tridiagonal matrix with the Euclidean quotients d_1..d_m on the
/// diagonal and 1 on both off-diagonals. Only the diagonal polynomials are
/// stored; the unit off-diagonals and zeros are implicit.
struct SturmMatrix {
  std::vector<Polynomial> diag;  // d_1 .. d_m

  int size() const { return static_cast<int>(diag.size()); }
};

inline SturmMatrix build_matrix(const SturmChain& c) { return SturmMatrix{c.quotients}; }

struct EvaluatedSturmMatrix {
  std::vector<Rational> diag;  // d_1(a) .. d_m(a)
  Rational point;
};

inline EvaluatedSturmMatrix eval_matrix(const SturmMatrix& s, const Rational& a) {
  EvaluatedSturmMatrix e;
  e.diag.reserve(s.diag.size());
  for (const auto& d : s.diag) e.diag.push_back(eval(d, a));
  e.point = a;
  return e;
}

/// Trailing principal-minor polynomials D_1..D_m, where D_i is the
/// determinant of the i x i submatrix on rows/columns m-i+1..m. Expanding
/// along the first row gives the three-term recurrence
///
///   D_1 = d_m,  D_2 = d_{m-1} d_m - 1,  D_{k+2} = d_{m-k-1} D_{k+1} - D_k.
inline std::vector<Polynomial> trailing_minor_polys(const SturmMatrix& s) {
  const int m = s.size();
  std::vector<Polynomial> D;
  D.reserve(static_cast<size_t>(m));
  const Polynomial one = Polynomial::constant(Rational(1));
  for (int k = 0; k < m; ++k) {
    const Polynomial& dk = s.diag[static_cast<size_t>(m - 1 - k)];
    if (k == 0)
      D.push_back(dk);
    else if (k == 1)
      D.push_back(dk * D[0] - one);
    else
      D.push_back(dk * D[static_cast<size_t>(k - 1)] - D[static_cast<size_t>(k - 2)]);
  }
  return D;
}

}  // namespace sturmint
