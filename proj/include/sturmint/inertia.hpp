#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sturmint/rational.hpp"

namespace sturmint {

/// Dense symmetric matrix over Rational. Symmetry is enforced at
/// construction and preserved by set().
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n), Rational(0)) {
    if (n < 1) throw std::invalid_argument("SymMatrix: dimension must be positive");
  }

  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
        throw std::invalid_argument("SymMatrix: rows must form a square matrix");
      for (int j = 0; j < n; ++j) m.a_[m.idx(i, j)] = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("SymMatrix: input is not symmetric");
    return m;
  }

  static SymMatrix identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
  }

  /// Symmetric tridiagonal matrix with the given diagonal and unit
  /// off-diagonals.
  static SymMatrix tridiagonal(const std::vector<Rational>& diag) {
    SymMatrix m(static_cast<int>(diag.size()));
    for (int i = 0; i < m.n_; ++i) {
      m.set(i, i, diag[static_cast<size_t>(i)]);
      if (i + 1 < m.n_) m.set(i, i + 1, Rational(1));
    }
    return m;
  }

  int size() const { return n_; }

  const Rational& at(int i, int j) const { return a_[idx(i, j)]; }

  void set(int i, int j, const Rational& v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  size_t idx(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("SymMatrix: index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
  }

  int n_;
  std::vector<Rational> a_;
};

/// Counts of positive, negative and zero entries in any congruence
/// diagonalization; invariant by Sylvester's law.
struct InertiaTriple {
  int p = 0;
  int q = 0;
  int z = 0;

  int rank() const { return p + q; }
  friend bool operator==(const InertiaTriple& a, const InertiaTriple& b) {
    return a.p == b.p && a.q == b.q && a.z == b.z;
  }
};

/// Symmetric congruence elimination over exact rationals. Each step either
/// pivots on a nonzero diagonal entry, swaps one in from below, or (when the
/// whole remaining diagonal is zero) adds row j to row i and column j to
/// column i to manufacture one from a nonzero off-diagonal entry. The signs
/// of the resulting diagonal give the inertia. This is the module's ground
/// truth; everything faster is checked against it.
inline InertiaTriple inertia_congruence(const SymMatrix& A) {
  const int n = A.size();
  std::vector<std::vector<Rational>> w(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = A.at(i, j);

  auto swap_sym = [&](int i, int j) {
    std::swap(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)]);
    for (int t = 0; t < n; ++t)
      std::swap(w[static_cast<size_t>(t)][static_cast<size_t>(i)], w[static_cast<size_t>(t)][static_cast<size_t>(j)]);
  };

  InertiaTriple res;
  for (int k = 0; k < n; ++k) {
    auto& wk = w[static_cast<size_t>(k)];
    if (wk[static_cast<size_t>(k)].is_zero()) {
      int d = -1;
      for (int t = k + 1; t < n; ++t)
        if (!w[static_cast<size_t>(t)][static_cast<size_t>(t)].is_zero()) {
          d = t;
          break;
        }
      if (d >= 0) {
        swap_sym(k, d);
      } else {
        int bi = -1, bj = -1;
        for (int i = k; i < n && bi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (!w[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) {
              bi = i;
              bj = j;
              break;
            }
        if (bi < 0) {
          res.z += n - k;  // trailing block is entirely zero
          return res;
        }
        for (int t = 0; t < n; ++t)
          w[static_cast<size_t>(bi)][static_cast<size_t>(t)] += w[static_cast<size_t>(bj)][static_cast<size_t>(t)];
        for (int t = 0; t < n; ++t)
          w[static_cast<size_t>(t)][static_cast<size_t>(bi)] += w[static_cast<size_t>(t)][static_cast<size_t>(bj)];
        if (bi != k) swap_sym(k, bi);
      }
    }
    const Rational pivot = w[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      if (w[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) continue;
      const Rational f = w[static_cast<size_t>(i)][static_cast<size_t>(k)] / pivot;
      for (int j = k; j < n; ++j)
        w[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * w[static_cast<size_t>(k)][static_cast<size_t>(j)];
      for (int j = k; j < n; ++j)
        w[static_cast<size_t>(j)][static_cast<size_t>(i)] -= f * w[static_cast<size_t>(j)][static_cast<size_t>(k)];
    }
    const int s = sign(pivot);
    if (s > 0)
      ++res.p;
    else
      ++res.q;
  }
  return res;
}

inline int rank(const SymMatrix& A) {
  const InertiaTriple t = inertia_congruence(A);
  return t.rank();
}

/// Exact determinant by rational Gaussian elimination.
inline Rational det(const SymMatrix& A) {
  const int n = A.size();
  std::vector<std::vector<Rational>> w(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = A.at(i, j);
  Rational d(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!w[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != k) {
      std::swap(w[static_cast<size_t>(piv)], w[static_cast<size_t>(k)]);
      d = -d;
    }
    d *= w[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      if (w[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) continue;
      const Rational f = w[static_cast<size_t>(i)][static_cast<size_t>(k)] / w[static_cast<size_t>(k)][static_cast<size_t>(k)];
      for (int j = k; j < n; ++j)
        w[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * w[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
  }
  return d;
}

/// Determinant of the principal submatrix on the given (0-based, strictly
/// increasing) index set.
inline Rational principal_minor(const SymMatrix& A, const std::vector<int>& indices) {
  const int k = static_cast<int>(indices.size());
  if (k < 1 || k > A.size()) throw std::invalid_argument("principal_minor: bad index set size");
  for (int t = 0; t < k; ++t) {
    if (indices[static_cast<size_t>(t)] < 0 || indices[static_cast<size_t>(t)] >= A.size())
      throw std::invalid_argument("principal_minor: index out of range");
    if (t > 0 && indices[static_cast<size_t>(t)] <= indices[static_cast<size_t>(t - 1)])
      throw std::invalid_argument("principal_minor: indices must be strictly increasing");
  }
  SymMatrix sub(k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      sub.set(i, j, A.at(indices[static_cast<size_t>(i)], indices[static_cast<size_t>(j)]));
  return det(sub);
}

/// Principal minor sequence: determinants D_1..D_n along a nested chain of
/// index sets I_1 c I_2 c ... c I_n with #I_i = i. Indices are 0-based.
struct MinorSequence {
  std::vector<std::vector<int>> index_sets;
  std::vector<Rational> values;
};

/// A sequence D_1..D_n is normal for rank r when D_r != 0 and no two
/// consecutive values among D_1..D_r are both zero. Vacuous at r = 0.
inline bool is_normal(const std::vector<Rational>& values, int r) {
  if (r < 0 || r > static_cast<int>(values.size()))
    throw std::invalid_argument("is_normal: rank out of range");
  if (r == 0) return true;
  if (values[static_cast<size_t>(r - 1)].is_zero()) return false;
  for (int i = 0; i + 1 < r; ++i)
    if (values[static_cast<size_t>(i)].is_zero() && values[static_cast<size_t>(i + 1)].is_zero()) return false;
  return true;
}

inline bool is_normal(const MinorSequence& seq, int r) { return is_normal(seq.values, r); }

/// Negative index of inertia from a normal principal minor sequence:
///
///   q(A) = [D_1 < 0] + #{ i < r : D_i D_{i+1} < 0 } + #{ i < r : D_i = 0 }.
inline int q_from_normal_sequence(const std::vector<Rational>& values, int r) {
  if (!is_normal(values, r)) throw std::domain_error("q_from_normal_sequence: sequence is not normal");
  if (values.empty()) throw std::invalid_argument("q_from_normal_sequence: empty sequence");
  int q = sign(values[0]) == -1 ? 1 : 0;
  for (int i = 0; i + 1 < r; ++i) {
    const int s = sign(values[static_cast<size_t>(i)]) * sign(values[static_cast<size_t>(i + 1)]);
    if (s == -1) ++q;
    if (values[static_cast<size_t>(i)].is_zero()) ++q;
  }
  return q;
}

inline int q_from_normal_sequence(const MinorSequence& seq, int r) {
  return q_from_normal_sequence(seq.values, r);
}

/// Searches for a normal principal minor sequence by depth-first extension
/// of nested index sets, trying extensions with nonzero minors first
/// (smallest index breaking ties) and backtracking on dead ends. Past rank r
/// every minor vanishes, so the remaining indices are appended in ascending
/// order. Returns nullopt when the exhaustive search finds none; no such
/// matrix is known, so callers should surface that outcome rather than
/// substitute a non-normal sequence.
inline std::optional<MinorSequence> find_normal_sequence(const SymMatrix& A) {
  const int n = A.size();
  if (n > 31) throw std::invalid_argument("find_normal_sequence: dimension too large for subset search");
  const int r = rank(A);

  std::map<std::uint32_t, Rational> memo;
  auto minor_of = [&](std::uint32_t mask) -> const Rational& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<int> idx;
    for (int t = 0; t < n; ++t)
      if (mask & (1u << t)) idx.push_back(t);
    return memo.emplace(mask, principal_minor(A, idx)).first->second;
  };

  std::vector<int> chosen;
  std::vector<Rational> values;
  std::uint32_t mask = 0;

  auto extend_tail = [&]() {
    for (int t = 0; t < n; ++t) {
      if (mask & (1u << t)) continue;
      mask |= 1u << t;
      chosen.push_back(t);
      values.push_back(minor_of(mask));
    }
  };

  auto dfs = [&](auto&& self) -> bool {
    const int pos = static_cast<int>(chosen.size()) + 1;  // 1-based position being filled
    if (pos > r) {
      extend_tail();
      return true;
    }
    std::vector<int> zeros;
    for (int t = 0; t < n; ++t) {
      if (mask & (1u << t)) continue;
      const Rational& d = minor_of(mask | (1u << t));
      if (!d.is_zero()) {
        mask |= 1u << t;
        chosen.push_back(t);
        values.push_back(d);
        if (self(self)) return true;
        values.pop_back();
        chosen.pop_back();
        mask &= ~(1u << t);
      } else {
        zeros.push_back(t);
      }
    }
    // A zero minor is admissible strictly below r, and only after a nonzero
    // predecessor (consecutive zeros are what normality forbids).
    if (pos < r && (pos == 1 || !values.back().is_zero())) {
      for (int t : zeros) {
        mask |= 1u << t;
        chosen.push_back(t);
        values.push_back(Rational(0));
        if (self(self)) return true;
        values.pop_back();
        chosen.pop_back();
        mask &= ~(1u << t);
      }
    }
    return false;
  };

  if (!dfs(dfs)) return std::nullopt;

  MinorSequence seq;
  seq.values = std::move(values);
  std::vector<int> prefix;
  for (int t : chosen) {
    prefix.push_back(t);
    std::vector<int> sorted = prefix;
    std::sort(sorted.begin(), sorted.end());
    seq.index_sets.push_back(std::move(sorted));
  }
  return seq;
}

/// One-step inertia update for a symmetric bordering
/// B = [[A, alpha], [alpha^T, b]] with rank(A) >= n-1 and not both
/// determinants zero:
///
///   q(B) = q(A)     if |A||B| > 0 or |B| = 0,
///   q(B) = q(A) + 1 if |A||B| < 0 or |A| = 0.
inline int bordered_q_update(int qA, const Rational& detA, const Rational& detB) {
  if (detA.is_zero() && detB.is_zero())
    throw std::domain_error("bordered_q_update: |A| and |B| cannot both vanish");
  if (detB.is_zero()) return qA;
  if (detA.is_zero()) return qA + 1;
  return sign(detA) * sign(detB) > 0 ? qA : qA + 1;
}

}  // namespace sturmint
