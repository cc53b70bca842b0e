#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wolfhp/rational.hpp"

namespace wolfhp {

/// Dense univariate polynomial over Rational, indexed by degree.
/// Trailing zero coefficients are always trimmed; the zero polynomial is the
/// empty coefficient vector and has no degree (is_zero() is the sentinel).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rational& c);
  static UniPoly x();
  /// coeffs[i] is the coefficient of x^i.
  static UniPoly from_coeffs(std::vector<Rational> coeffs);
  /// a*x + b
  static UniPoly linear(const Rational& a, const Rational& b);

  bool is_zero() const { return c_.empty(); }
  /// Requires a nonzero polynomial.
  std::size_t degree() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Zero beyond the degree, so degree-bounded loops stay total.
  Rational coeff(std::size_t i) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& at) const;
  UniPoly compose(const UniPoly& inner) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Rational& s);
  friend UniPoly operator*(const Rational& s, const UniPoly& a) { return a * s; }
  friend UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "r") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// C(p, b) = p(p-1)...(p-b+1)/b! with a polynomial argument.
UniPoly binomial(const UniPoly& p, unsigned b);

/// The m-th Bernoulli polynomial B_m(x), with B_1(x) = x - 1/2.
UniPoly bernoulli_poly(unsigned m);
Rational bernoulli_number(unsigned m);

}  // namespace wolfhp
