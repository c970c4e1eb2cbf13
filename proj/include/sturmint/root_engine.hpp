#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sturmint/inertia.hpp"
#include "sturmint/sturm_chain.hpp"
#include "sturmint/sturm_matrix.hpp"

namespace sturmint {

/// Half-open interval (lo, hi].
struct Interval {
  Rational lo;
  Rational hi;
};

/// Chain, matrix and trailing-minor polynomials of a pair (f, g), built once
/// and evaluated at many points.
///
/// q_at prefers the minor-sequence formula: the evaluated trailing minors
/// D_1(a)..D_m(a) form a normal sequence for rank r, where r = m when
/// D_m(a) != 0 and r = m-1 otherwise (the rank never drops below m-1: the
/// submatrix on rows 1..m-1 and columns 2..m is unitriangular). Should the
/// normality test ever fail, the congruence oracle takes over.
class SturmSystem {
 public:
  SturmSystem(const Polynomial& f, const Polynomial& g)
      : chain_(build_chain(f, g)),
        matrix_(build_matrix(chain_)),
        minor_polys_(trailing_minor_polys(matrix_)) {}

  const SturmChain& chain() const { return chain_; }
  const SturmMatrix& matrix() const { return matrix_; }
  const std::vector<Polynomial>& minor_polys() const { return minor_polys_; }

  std::vector<Rational> minor_values_at(const Rational& a) const {
    std::vector<Rational> v;
    v.reserve(minor_polys_.size());
    for (const auto& p : minor_polys_) v.push_back(eval(p, a));
    return v;
  }

  /// q(S_{f,g}(a)), negative index of inertia of the evaluated Sturm matrix.
  int q_at(const Rational& a) const {
    const std::vector<Rational> v = minor_values_at(a);
    const int m = matrix_.size();
    const int r = v.back().is_zero() ? m - 1 : m;
    if (is_normal(v, r)) return q_from_normal_sequence(v, r);
    return q_at_oracle(a);
  }

  /// Same value via congruence diagonalization of the evaluated matrix.
  int q_at_oracle(const Rational& a) const {
    const EvaluatedSturmMatrix e = eval_matrix(matrix_, a);
    return inertia_congruence(SymMatrix::tridiagonal(e.diag)).q;
  }

  /// Fast path and oracle together; a mismatch means a broken build.
  int q_at_checked(const Rational& a) const {
    const int fast = q_at(a);
    const int slow = q_at_oracle(a);
    if (fast != slow)
      throw std::logic_error("SturmSystem: minor-sequence q disagrees with the congruence oracle at a = " +
                             to_string(a));
    return fast;
  }

  int variation_at(const Rational& a) const { return sturmint::variation_at(chain_, a); }

 private:
  SturmChain chain_;
  SturmMatrix matrix_;
  std::vector<Polynomial> minor_polys_;
};

inline int q_at(const Polynomial& f, const Polynomial& g, const Rational& a) {
  return SturmSystem(f, g).q_at(a);
}

namespace detail {

inline void require_interval(const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("interval endpoints must satisfy a < b");
}

inline bool is_multiple_root(const Polynomial& f, const Polynomial& g_common, const Rational& x) {
  return eval(f, x).is_zero() && eval(g_common, x).is_zero();
}

}  // namespace detail

/// Classical count of distinct real roots in (a, b] as V_f(a) - V_f(b).
/// Valid only when neither endpoint is a multiple root of f; violations are
/// rejected (use count_roots_inertia there, which has no such hypothesis).
inline int count_roots_variation(const Polynomial& f, const Rational& a, const Rational& b) {
  if (f.is_constant()) throw std::invalid_argument("count_roots_variation: f must be non-constant");
  detail::require_interval(a, b);
  const Polynomial common = gcd(f, derivative(f));
  if (detail::is_multiple_root(f, common, a))
    throw std::domain_error("count_roots_variation: endpoint a = " + to_string(a) +
                            " is a multiple root of f");
  if (detail::is_multiple_root(f, common, b))
    throw std::domain_error("count_roots_variation: endpoint b = " + to_string(b) +
                            " is a multiple root of f");
  const SturmChain c = canonical_chain(f);
  return variation_at(c, a) - variation_at(c, b);
}

/// Inertia count of distinct real roots in (a, b] as
/// q(S_{f,f'}(a)) - q(S_{f,f'}(b)). Valid for every rational endpoint,
/// multiple roots included.
inline int count_roots_inertia(const Polynomial& f, const Rational& a, const Rational& b) {
  if (f.is_constant()) throw std::invalid_argument("count_roots_inertia: f must be non-constant");
  detail::require_interval(a, b);
  const SturmSystem s(f, derivative(f));
  return s.q_at(a) - s.q_at(b);
}

/// Number of distinct real roots of f, counted on (-M, M] with M the Cauchy
/// bound.
inline int count_all_roots(const Polynomial& f) {
  if (f.is_constant()) throw std::invalid_argument("count_all_roots: f must be non-constant");
  const Rational m = cauchy_bound(f);
  return count_roots_inertia(f, -m, m);
}

/// Pairwise-disjoint half-open intervals, each containing exactly one
/// distinct real root of f, found by bisecting (-M, M] while a subinterval
/// counts more than one root. Exact midpoints keep every count exact;
/// termination follows from the positive gap between distinct roots.
inline std::vector<Interval> isolate_roots(const Polynomial& f) {
  if (f.is_constant()) throw std::invalid_argument("isolate_roots: f must be non-constant");
  const SturmSystem s(f, derivative(f));
  const Rational bound = cauchy_bound(f);
  std::vector<Interval> out;

  struct Frame {
    Rational lo, hi;
    int qlo, qhi;
  };
  std::vector<Frame> stack;
  stack.push_back({-bound, bound, s.q_at(-bound), s.q_at(bound)});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    const int count = fr.qlo - fr.qhi;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({std::move(fr.lo), std::move(fr.hi)});
      continue;
    }
    Rational mid = (fr.lo + fr.hi) / Rational(2);
    const int qmid = s.q_at(mid);
    // right half last so the left half is processed first (ascending output)
    stack.push_back({mid, std::move(fr.hi), qmid, fr.qhi});
    stack.push_back({std::move(fr.lo), std::move(mid), fr.qlo, qmid});
  }
  return out;
}

/// Joint report of both counting methods over (a, b]. The variation count is
/// absent when the classical hypothesis fails (an endpoint is a multiple
/// root); agreement is reported whenever both counts exist.
struct RootCountReport {
  std::optional<int> count_variation;
  int count_inertia = 0;
  int qa = 0;
  int qb = 0;
  std::optional<bool> agreement;
};

inline RootCountReport count_report(const Polynomial& f, const Rational& a, const Rational& b) {
  if (f.is_constant()) throw std::invalid_argument("count_report: f must be non-constant");
  detail::require_interval(a, b);
  RootCountReport rep;
  const SturmSystem s(f, derivative(f));
  rep.qa = s.q_at(a);
  rep.qb = s.q_at(b);
  rep.count_inertia = rep.qa - rep.qb;
  try {
    rep.count_variation = count_roots_variation(f, a, b);
    rep.agreement = (*rep.count_variation == rep.count_inertia);
  } catch (const std::domain_error&) {
    // endpoint is a multiple root; the classical count does not apply
  }
  return rep;
}

/// Piecewise structure of a |-> q(S_{f,f'}(a)) around the known roots of f:
/// constant on each open inter-root interval, dropping by exactly one across
/// each root, and at a root c equal to the value just right of c with the
/// value just left of c one higher.
struct StructureReport {
  bool ok = true;
  std::vector<int> interval_q;  // q on (-inf,a_1), (a_1,a_2), ..., (a_k,+inf)
  std::vector<int> root_q;      // q(S(a_1)) .. q(S(a_k))
  std::vector<std::string> violations;
};

/// Checks the structure above for f with known sorted distinct real roots.
/// Samples are placed min-gap/4 inside each interval end plus at interval
/// midpoints; all inertia evaluations are exact.
inline StructureReport structure_check(const Polynomial& f, const std::vector<Rational>& sorted_roots) {
  if (f.is_constant()) throw std::invalid_argument("structure_check: f must be non-constant");
  if (sorted_roots.empty()) throw std::invalid_argument("structure_check: f must have at least one real root");
  for (size_t i = 0; i < sorted_roots.size(); ++i) {
    if (!eval(f, sorted_roots[i]).is_zero())
      throw std::invalid_argument("structure_check: " + to_string(sorted_roots[i]) + " is not a root of f");
    if (i > 0 && !(sorted_roots[i - 1] < sorted_roots[i]))
      throw std::invalid_argument("structure_check: roots must be strictly increasing");
  }
  const int k = static_cast<int>(sorted_roots.size());
  const SturmSystem s(f, derivative(f));

  const Rational bound = cauchy_bound(f);
  if (s.q_at(-bound) - s.q_at(bound) != k)
    throw std::invalid_argument("structure_check: the given roots do not exhaust the real roots of f");

  Rational gap(1);
  for (int i = 1; i < k; ++i) {
    const Rational d = sorted_roots[static_cast<size_t>(i)] - sorted_roots[static_cast<size_t>(i - 1)];
    if (i == 1 || d < gap) gap = d;
  }
  const Rational eps = gap / Rational(4);

  StructureReport rep;
  auto sample_interval = [&](const std::vector<Rational>& pts) -> int {
    // q must agree across the interval's samples (constancy between roots)
    const int q0 = s.q_at(pts.front());
    for (size_t i = 1; i < pts.size(); ++i) {
      const int qi = s.q_at(pts[i]);
      if (qi != q0) {
        rep.ok = false;
        std::ostringstream os;
        os << "q not constant between roots: q(" << pts.front() << ") = " << q0 << " but q(" << pts[i]
           << ") = " << qi;
        rep.violations.push_back(os.str());
      }
    }
    return q0;
  };

  const Rational& first = sorted_roots.front();
  const Rational& last = sorted_roots.back();
  rep.interval_q.push_back(sample_interval({first - Rational(2) * eps, first - eps}));
  for (int i = 0; i + 1 < k; ++i) {
    const Rational& a = sorted_roots[static_cast<size_t>(i)];
    const Rational& b = sorted_roots[static_cast<size_t>(i + 1)];
    rep.interval_q.push_back(sample_interval({a + eps, (a + b) / Rational(2), b - eps}));
  }
  rep.interval_q.push_back(sample_interval({last + eps, last + Rational(2) * eps}));

  for (const auto& root : sorted_roots) rep.root_q.push_back(s.q_at(root));

  for (int i = 0; i < k; ++i) {
    const int before = rep.interval_q[static_cast<size_t>(i)];
    const int after = rep.interval_q[static_cast<size_t>(i + 1)];
    if (before - after != 1) {
      rep.ok = false;
      std::ostringstream os;
      os << "q drops by " << (before - after) << " (expected 1) across root " << sorted_roots[static_cast<size_t>(i)];
      rep.violations.push_back(os.str());
    }
    const int at_root = rep.root_q[static_cast<size_t>(i)];
    if (before != at_root + 1 || after != at_root) {
      rep.ok = false;
      std::ostringstream os;
      os << "around root " << sorted_roots[static_cast<size_t>(i)] << ": q left = " << before
         << ", q at root = " << at_root << ", q right = " << after << " (expected t+1, t, t)";
      rep.violations.push_back(os.str());
    }
  }
  return rep;
}

}  // namespace sturmint
