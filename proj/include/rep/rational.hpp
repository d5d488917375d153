#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rep {

using Int = boost::multiprecision::cpp_int;

// Exact fraction, always kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit on purpose
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d);
  Rational(long long n, long long d) : Rational(Int(n), Int(d)) {}

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  // -1, 0 or +1
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // Smallest integer >= *this.
  Int ceil() const;
  Int floor() const;

  double to_double() const;

  // "p/q" with q omitted when it equals 1, e.g. "-3/2", "7".
  std::string str() const;
  static Rational parse(const std::string& s);

 private:
  void normalize();
  Int num_;
  Int den_;
};

// Rising factorial x(x+1)...(x+k-1); equals 1 for k=0.
Rational pochhammer(const Rational& x, long long k);

// True iff Gamma has a pole at x, i.e. x is a nonpositive integer.
bool gamma_is_pole(const Rational& x);

// Sign of Gamma(x) for non-pole x: +1 for x>0, (-1)^ceil(-x) for x<0.
int gamma_sign(const Rational& x);

// Gamma(x+shift)/Gamma(x) as an exact rational.
Rational gamma_ratio(const Rational& x, long long shift);

}  // namespace rep
