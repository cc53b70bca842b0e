#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wolfhp/rootsystem.hpp"
#include "wolfhp/unipoly.hpp"
#include "wolfhp/wolf_grading.hpp"

namespace wolfhp {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample payload when failing
};

struct HilbertReport {
  std::string label;          // algebra ("G2") or family ("HPn(3)") label
  int n = 0;                  // quaternionic dimension
  bool degenerate = false;    // n == 0
  bool is_hpn = false;        // type C / HPn family: extra half-integer zeroes
  UniPoly P;                  // degree 2n+1
  Rational volume;            // leading coefficient * (2n+1)!/2
  Rational twistor_degree;    // 2 * volume
  std::vector<Rational> char_coeffs;   // c_0..c_n in the odd Bernoulli basis
  std::vector<Rational> binom_coeffs;  // n_i with P(r) = sum n_i C(r,i)
  Int dim_g = 0;              // expected isometry dimension, = P(1)
  std::vector<Check> checks;

  bool all_pass() const;
};

/// Hilbert polynomial of the Wolf space of rs: exact product over the
/// level-1/2 roots, cross-checked against the Weyl dimension formula at
/// r = 0..2n+3 (mismatch is a hard failure naming the offending r).
HilbertReport hilbert_poly(const RootSystem& rs);

enum class Family { HPn, Gr2C, Gr4R, G2 };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

/// The closed-form polynomial of the family at quaternionic dimension n.
/// Admissible n: HPn, Gr2C, Gr4R need n >= 1; G2 needs n = 2.
UniPoly closed_form(Family f, int n);

/// Report for a family built from its closed form (no root data involved).
HilbertReport family_report(Family f, int n);

/// leading(P) * (2n+1)!/2. Requires deg P = 2n+1.
Rational quaternionic_volume(const UniPoly& P, int n);
/// Subleading relation: coeff_{2n}(P) == (n+1)/(2n)! * v.
bool volume_subleading_ok(const UniPoly& P, int n, const Rational& v);

/// Basis polynomial f_l(r) = 2/(2l+1)! * B_{2l+1}(r + n/2 + 1).
UniPoly bernoulli_basis_poly(int l, int n);

/// Coefficients c_0..c_n with P = sum c_l f_l. Requires the antisymmetry
/// P(r) = -P(-r-n-1); otherwise throws std::domain_error carrying the
/// residual polynomial.
std::vector<Rational> bernoulli_expand(const UniPoly& P, int n);

/// Coefficients n_i of P(r) = sum_i n_i C(r,i), by finite differences.
std::vector<Rational> binomial_basis_coeffs(const UniPoly& P);

/// 2^{2l+1}/(2l+1)! * B_{2l+1}(k/2 + 1).
Rational chern_character_coeff(int k, int l);
/// Independent oracle: sum_{v=0}^{k} (k-2v)^{2l} / (2l)!.
Rational power_sum(int k, int l);

struct SpectralParams {
  int n = 1;
  Rational kappa = 1;  // scalar curvature, caller-chosen normalization
  int r = 0;
};

/// kappa/(2n(n+2)) * r(n+1+r)
Rational lambda_min(const SpectralParams& sp);
/// kappa/(8n(n+2)) * (l+d-n)(l-d+n+2)
Rational phi(const SpectralParams& sp, int l, int d);

/// Populates rep.checks with the identity/bound suite at scan radius r_max.
void verify_report(HilbertReport& rep, int r_max);

}  // namespace wolfhp
