#include "wolfhp/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace wolfhp {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::abs() const {
  Rational r(*this);
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(den(), num());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Int factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Int binomial(const Int& a, unsigned b) {
  Int num = 1;
  for (unsigned i = 0; i < b; ++i) num *= a - static_cast<long>(i);
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), factorial(b).get_mpz_t());
  if (r != 0) throw std::logic_error("binomial: falling factorial not divisible by b!");
  return q;
}

Rational binomial(const Rational& a, unsigned b) {
  Rational num = 1;
  for (unsigned i = 0; i < b; ++i) num *= a - Rational(static_cast<long>(i));
  return num / Rational(factorial(b));
}

Rational pow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace wolfhp
