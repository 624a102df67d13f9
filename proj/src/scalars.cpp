#include "sympcliff/scalars.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>

namespace sympcliff {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  value_.get_num() = num;
  value_.get_den() = den;
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10), mpz_class(1));
    return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational literal: '" + s + "'");
  }
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / value_);
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

GaussianRational GaussianRational::inverse() const {
  Rational n = norm2();
  if (n.is_zero()) throw DivisionByZero();
  return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}
GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}
GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string imag;
  if (im == Rational(1)) {
    imag = "i";
  } else if (im == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im.to_string() + "*i";
  }
  if (re.is_zero()) return imag;
  std::string out = "(" + re.to_string();
  out += im.sign() < 0 ? " - " : " + ";
  out += (im.abs() == Rational(1)) ? std::string("i") : im.abs().to_string() + "*i";
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

double to_double(const Rational& r) {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, r.raw().get_mpq_t(), MPFR_RNDN);
  // Subnormal range needs mpfr_subnormalize to be exact; values of interest
  // here are far from it.
  double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  if (!std::isfinite(d)) throw OverflowError("rational " + r.to_string() + " exceeds double range");
  return d;
}

ComplexF64 to_complex_f64(const GaussianRational& z) { return {to_double(z.re), to_double(z.im)}; }

Rational from_double(double d) {
  if (!std::isfinite(d)) throw DomainError("from_double: non-finite value");
  return Rational(mpq_class(d));
}

}  // namespace sympcliff
