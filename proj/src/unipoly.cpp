#include "wolfhp/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace wolfhp {

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly UniPoly::x() { return from_coeffs({Rational(0), Rational(1)}); }

UniPoly UniPoly::from_coeffs(std::vector<Rational> coeffs) {
  UniPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

UniPoly UniPoly::linear(const Rational& a, const Rational& b) {
  return from_coeffs({b, a});
}

std::size_t UniPoly::degree() const {
  if (is_zero()) throw std::logic_error("UniPoly: degree of zero polynomial");
  return c_.size() - 1;
}

Rational UniPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Rational(0);
}

Rational UniPoly::leading_coefficient() const {
  if (is_zero()) throw std::logic_error("UniPoly: leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + UniPoly(c_[i]);
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
  p.trim();
  return p;
}

UniPoly operator*(const UniPoly& a, const Rational& s) {
  if (s.is_zero()) return UniPoly();
  UniPoly p = a;
  for (auto& c : p.c_) c *= s;
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    const bool unit = (a == Rational(1));
    if (i == 0) {
      os << a.str();
    } else {
      if (!unit) os << (a.is_integer() ? a.str() : "(" + a.str() + ")") << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly binomial(const UniPoly& p, unsigned b) {
  UniPoly num(Rational(1));
  for (unsigned i = 0; i < b; ++i) num = num * (p - UniPoly(Rational(static_cast<long>(i))));
  return num * Rational(factorial(b)).inverse();
}

namespace {

// B_0..B_m by the defining recurrence sum_{j<m+1} C(m+1,j) B_j = 0.
std::vector<Rational> bernoulli_numbers_upto(unsigned m) {
  std::vector<Rational> b(m + 1);
  b[0] = 1;
  for (unsigned k = 1; k <= m; ++k) {
    Rational s = 0;
    for (unsigned j = 0; j < k; ++j) s += Rational(binomial(Int(k + 1), j)) * b[j];
    b[k] = -s / Rational(Int(k + 1));
  }
  return b;
}

}  // namespace

Rational bernoulli_number(unsigned m) { return bernoulli_numbers_upto(m)[m]; }

UniPoly bernoulli_poly(unsigned m) {
  const std::vector<Rational> b = bernoulli_numbers_upto(m);
  std::vector<Rational> coeffs(m + 1);
  for (unsigned k = 0; k <= m; ++k)
    coeffs[k] = Rational(binomial(Int(m), k)) * b[m - k];
  return UniPoly::from_coeffs(std::move(coeffs));
}

}  // namespace wolfhp
