#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace sturmint {

/// Exact rational scalar over arbitrary-precision integers.
/// Always stored reduced, with a strictly positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) { canonicalize(); }
  Rational(mpz_class n, mpz_class d) : v_(std::move(n), std::move(d)) { canonicalize(); }
  explicit Rational(mpz_class n) : v_(std::move(n)) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { canonicalize(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  void canonicalize() {
    if (mpz_sgn(v_.get_den().get_mpz_t()) == 0)
      throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

/// Sign of a rational: -1, 0 or +1.
inline int sign(const Rational& a) { return mpq_sgn(a.value().get_mpq_t()); }

inline Rational abs(const Rational& a) { return sign(a) < 0 ? -a : a; }

inline std::string to_string(const Rational& a) {
  if (a.den() == 1) return a.num().get_str();
  return a.num().get_str() + "/" + a.den().get_str();
}

inline std::ostream& operator<<(std::ostream& os, const Rational& a) {
  return os << to_string(a);
}

}  // namespace sturmint
