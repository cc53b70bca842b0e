#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wolfhp/rational.hpp"
#include "wolfhp/unipoly.hpp"

using namespace wolfhp;

namespace {

// Brute-force factorial-ratio oracle for integer binomials.
Int binomial_oracle(unsigned a, unsigned b) {
  if (b > a) return 0;
  Int r = factorial(a);
  mpz_class d = factorial(b) * factorial(a - b);
  return r / d;
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(0, 7).is_zero());
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(22, 7).den() == 7);
  CHECK_THROWS(Rational(1, 0));
  // normalization is idempotent: results of arithmetic are already canonical
  const Rational x = Rational(3, 9) * Rational(3, 5);
  CHECK(x.num() == 1);
  CHECK(x.den() == 5);
}

TEST_CASE("integer binomial matches factorial oracle") {
  for (unsigned a = 0; a <= 12; ++a)
    for (unsigned b = 0; b <= a; ++b) CHECK(binomial(Int(a), b) == binomial_oracle(a, b));
  CHECK(binomial(Int(5), 3u) == 10);
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
}

TEST_CASE("polynomial ring basics") {
  const UniPoly x = UniPoly::x();
  const UniPoly p = x * x - UniPoly(Rational(1));
  CHECK(p(Rational(3)) == Rational(8));
  CHECK(p.degree() == 2);
  CHECK(p.leading_coefficient() == Rational(1));
  CHECK((p - p).is_zero());
  CHECK(UniPoly().is_zero());
  CHECK_THROWS(UniPoly().degree());
  // composition shifts the argument
  const UniPoly shifted = p.compose(UniPoly::linear(Rational(1), Rational(2)));
  CHECK(shifted(Rational(0)) == p(Rational(2)));
  CHECK(shifted(Rational(-5)) == p(Rational(-3)));
}

TEST_CASE("binomial with polynomial argument") {
  const UniPoly x = UniPoly::x();
  // (2r+3)(2r+2)(2r+1)/6 expanded by hand
  const UniPoly p = binomial(x * Rational(2) + UniPoly(Rational(3)), 3);
  const UniPoly expect = UniPoly::from_coeffs(
      {Rational(1), Rational(11, 3), Rational(4), Rational(4, 3)});
  CHECK(p == expect);
  CHECK(binomial(x, 0) == UniPoly(Rational(1)));
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_poly(0) == UniPoly(Rational(1)));
  CHECK(bernoulli_poly(1) == UniPoly::from_coeffs({Rational(-1, 2), Rational(1)}));
  // B_3 = x^3 - (3/2)x^2 + (1/2)x
  CHECK(bernoulli_poly(3) ==
        UniPoly::from_coeffs({Rational(0), Rational(1, 2), Rational(-3, 2), Rational(1)}));
  // B_3(2) = 3 via the difference recurrence walked up from B_3(0) = 0
  CHECK(bernoulli_poly(3)(Rational(2)) == Rational(3));
  // compose(B_3, x + 3/2) constant term = B_3(3/2)
  const UniPoly c = bernoulli_poly(3).compose(
      UniPoly::linear(Rational(1), Rational(3, 2)));
  CHECK(c.coeff(0) == Rational(3, 4));
}

TEST_CASE("bernoulli difference and reflection identities") {
  const UniPoly x = UniPoly::x();
  for (unsigned m = 1; m <= 12; ++m) {
    const UniPoly bm = bernoulli_poly(m);
    for (long w = -5; w <= 5; ++w) {
      const Rational lhs = bm(Rational(w + 1)) - bm(Rational(w));
      CHECK(lhs == Rational(m) * pow(Rational(w), m - 1));
    }
  }
  for (unsigned m = 0; m <= 12; ++m) {
    const UniPoly bm = bernoulli_poly(m);
    const UniPoly refl = bm.compose(UniPoly::linear(Rational(-1), Rational(1)));
    CHECK(refl == (m % 2 == 0 ? bm : -bm));
  }
}
