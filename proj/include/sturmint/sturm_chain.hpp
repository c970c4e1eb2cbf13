#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sturmint/polynomial.hpp"

namespace sturmint {

/// Sturm chain f_0, ..., f_m of a pair (f, g), produced by the Euclidean
/// algorithm with negated remainders:
///
///   f_{i-1} = d_i f_i - f_{i+1},  deg(f_{i+1}) < deg(f_i),
///   f_{m-1} = d_m f_m.
///
/// The quotients d_1..d_m double as the diagonal of the Sturm matrix.
struct SturmChain {
  std::vector<Polynomial> chain;      // f_0 .. f_m
  std::vector<Polynomial> quotients;  // d_1 .. d_m

  int m() const { return static_cast<int>(quotients.size()); }
  const Polynomial& last() const { return chain.back(); }
};

inline SturmChain build_chain(const Polynomial& f, const Polynomial& g) {
  if (f.is_constant()) throw std::invalid_argument("build_chain: f must be non-constant");
  if (g.is_zero()) throw std::invalid_argument("build_chain: g must be nonzero");
  SturmChain c;
  c.chain.push_back(f);
  c.chain.push_back(g);
  while (true) {
    const Polynomial& prev = c.chain[c.chain.size() - 2];
    const Polynomial& cur = c.chain.back();
    auto [q, r] = divmod(prev, cur);
    c.quotients.push_back(std::move(q));
    if (r.is_zero()) break;
    c.chain.push_back(-r);
  }
  return c;
}

/// Chain of (f, f'), the classical construction.
inline SturmChain canonical_chain(const Polynomial& f) {
  if (f.is_constant()) throw std::invalid_argument("canonical_chain: f must be non-constant");
  return build_chain(f, derivative(f));
}

/// Number of sign changes after deleting zeros. Empty (or all-zero) input
/// counts zero variations.
inline int sign_variation(const std::vector<Rational>& values) {
  int count = 0;
  int prev = 0;
  for (const auto& v : values) {
    const int s = sign(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

/// V_{f,g}(a): sign variations of the chain evaluated at a.
inline int variation_at(const SturmChain& c, const Rational& a) {
  std::vector<Rational> values;
  values.reserve(c.chain.size());
  for (const auto& p : c.chain) values.push_back(eval(p, a));
  return sign_variation(values);
}

/// Chain with the common factor divided out: ft_i = f_i / f_m. The last
/// member is the constant 1 and ft_0, ft_1 are coprime.
struct RefinedChain {
  std::vector<Polynomial> chain;  // ft_0 .. ft_m
};

inline RefinedChain refine(const SturmChain& c) {
  RefinedChain r;
  r.chain.reserve(c.chain.size());
  const Polynomial& fm = c.chain.back();
  for (const auto& fi : c.chain) r.chain.push_back(exact_div(fi, fm));
  return r;
}

}  // namespace sturmint
