#include "rep/rational.hpp"

namespace rep {

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("Rational: division by zero");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Int Rational::floor() const {
  Int q = num_ / den_;
  if (num_ < 0 && q * den_ != num_) --q;
  return q;
}

Int Rational::ceil() const {
  Int q = num_ / den_;
  if (num_ > 0 && q * den_ != num_) ++q;
  return q;
}

double Rational::to_double() const {
  return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_));
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = s.find('/');
  auto check_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("Rational: bad integer");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("Rational: bad integer");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("Rational: bad integer '" + t + "'");
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Int(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  check_int(p);
  check_int(q);
  return Rational(Int(p), Int(q));
}

Rational pochhammer(const Rational& x, long long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative order");
  Rational r = 1;
  Rational t = x;
  for (long long i = 0; i < k; ++i) {
    r *= t;
    t += 1;
  }
  return r;
}

bool gamma_is_pole(const Rational& x) { return x.is_integer() && x.num() <= 0; }

int gamma_sign(const Rational& x) {
  if (gamma_is_pole(x)) throw std::domain_error("gamma_sign: pole at " + x.str());
  if (x.sign() > 0) return 1;
  Int c = (-x).ceil();
  return (c % 2 == 0) ? 1 : -1;
}

Rational gamma_ratio(const Rational& x, long long shift) {
  if (shift >= 0) return pochhammer(x, shift);
  Rational p = pochhammer(x + Rational(shift), -shift);
  if (p.is_zero()) throw std::domain_error("gamma_ratio: reciprocal Pochhammer vanishes");
  return Rational(1) / p;
}

}  // namespace rep
