#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sturmint/rational.hpp"

namespace sturmint {

/// Dense univariate polynomial over Rational, coefficients ascending by
/// degree. Canonical form: the zero polynomial is the empty coefficient
/// vector; a nonempty vector has a nonzero last element.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> ascending)
      : coeffs_(ascending) {
    trim();
  }
  explicit Polynomial(std::vector<Rational> ascending)
      : coeffs_(std::move(ascending)) {
    trim();
  }

  static Polynomial constant(Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
  }

  /// c * x^k
  static Polynomial monomial(Rational c, int k) {
    if (k < 0) throw std::invalid_argument("Polynomial: negative exponent");
    Polynomial p;
    if (!c.is_zero()) {
      p.coeffs_.assign(static_cast<size_t>(k) + 1, Rational(0));
      p.coeffs_.back() = std::move(c);
    }
    return p;
  }

  /// Degree; -1 stands in for the degree of the zero polynomial
  /// (conceptually minus infinity).
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Coefficient of x^k; zero outside the stored range.
  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
  }

  const Rational& leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("Polynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> c(a.coeffs_);
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& s) {
    if (s.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_);
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

  friend Polynomial operator/(const Polynomial& a, const Rational& s) {
    if (s.is_zero()) throw std::invalid_argument("Polynomial: division by zero scalar");
    std::vector<Rational> c(a.coeffs_);
    for (auto& x : c) x /= s;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Horner evaluation of p at a.
inline Rational eval(const Polynomial& p, const Rational& a) {
  Rational y(0);
  const auto& c = p.coefficients();
  for (size_t i = c.size(); i-- > 0;) y = y * a + c[i];
  return y;
}

inline Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return Polynomial();
  std::vector<Rational> d(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c[i];
  return Polynomial(std::move(d));
}

struct DivModResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division: f = quotient * g + remainder, deg(remainder) < deg(g).
inline DivModResult divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
  std::vector<Rational> rem(f.coefficients());
  const auto& gc = g.coefficients();
  const int dg = g.degree();
  std::vector<Rational> quo;
  if (f.degree() >= dg) quo.assign(static_cast<size_t>(f.degree() - dg) + 1, Rational(0));
  int dr = f.degree();
  while (dr >= dg) {
    Rational c = rem[static_cast<size_t>(dr)] / gc.back();
    const int shift = dr - dg;
    quo[static_cast<size_t>(shift)] = c;
    for (int i = 0; i <= dg; ++i)
      rem[static_cast<size_t>(shift + i)] -= c * gc[static_cast<size_t>(i)];
    --dr;  // the leading term cancels exactly
    while (dr >= 0 && rem[static_cast<size_t>(dr)].is_zero()) --dr;
  }
  rem.resize(static_cast<size_t>(dr + 1));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

/// f scaled to leading coefficient 1.
inline Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("monic: zero polynomial");
  return f / f.leading();
}

/// Monic greatest common divisor.
inline Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd: both inputs are zero");
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Exact quotient f / d; the remainder must vanish.
inline Polynomial exact_div(const Polynomial& f, const Polynomial& d) {
  auto [q, r] = divmod(f, d);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

/// Cauchy root bound M = 1 + max_{i<n} |a_i| / |a_n|; every real root r of f
/// satisfies |r| < M.
inline Rational cauchy_bound(const Polynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("cauchy_bound: constant or zero polynomial");
  const auto& c = f.coefficients();
  Rational mx(0);
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    Rational a = abs(c[i]);
    if (a > mx) mx = a;
  }
  return Rational(1) + mx / abs(c.back());
}

inline Polynomial pow(const Polynomial& base, unsigned e) {
  Polynomial r = Polynomial::constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

/// Renders p as a parseable expression, e.g. "x^3 - 3*x + 2" or "3/2*x".
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c.is_zero()) continue;
    const bool first = out.empty();
    const bool neg = sign(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational m = abs(c);
    if (k == 0) {
      out += to_string(m);
    } else {
      if (m != Rational(1)) out += to_string(m) + "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << to_string(p);
}

}  // namespace sturmint
