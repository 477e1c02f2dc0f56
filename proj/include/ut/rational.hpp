#pragma once

// Exact rational scalar backed by GMP.  Every value is kept canonical:
// lowest terms, denominator > 0, zero stored as 0/1.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ut {

class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(n) {}

  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_.canonicalize();
  }

  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p/q", plain integers, and decimal literals ("-1.25" -> -5/4).
  static Rational from_string(std::string_view s);

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // Largest integer <= value, as a rational.
  Rational floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rational(mpq_class(q));
  }

  // value - floor(value), always in [0, 1).
  Rational frac() const { return *this - floor(); }

  Rational pow(long e) const;

  double to_double() const { return v_.get_d(); }

  // Always emits an explicit denominator: "3/1", "-1/2".
  std::string str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class v_;
};

inline Rational Rational::from_string(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw std::invalid_argument("rational: empty string");
  if (auto dot = t.find('.'); dot != std::string::npos) {
    if (t.find('/') != std::string::npos)
      throw std::invalid_argument("rational: mixed decimal and fraction: " + t);
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t places = t.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("rational: bad decimal: " + t);
    mpz_class num, den(10);
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw std::invalid_argument("rational: bad decimal: " + t);
    mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), places);
    return Rational(mpq_class(num) / mpq_class(den));
  }
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), t.c_str(), 10) != 0)
    throw std::invalid_argument("rational: cannot parse: " + t);
  if (v.get_den() == 0) throw std::invalid_argument("rational: zero denominator: " + t);
  v.canonicalize();
  return Rational(std::move(v));
}

inline Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0) throw std::domain_error("rational: 0 to a negative power");
  mpz_class num, den;
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), ae);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), ae);
  mpq_class r(num, den);
  r.canonicalize();
  if (e < 0) r = 1 / r;
  return Rational(std::move(r));
}

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace ut
