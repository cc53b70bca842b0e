#include "wolfhp/hilbert.hpp"

#include <sstream>
#include <stdexcept>

namespace wolfhp {

bool HilbertReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void fill_derived(HilbertReport& rep) {
  rep.volume = quaternionic_volume(rep.P, rep.n);
  rep.twistor_degree = Rational(2) * rep.volume;
  rep.char_coeffs = bernoulli_expand(rep.P, rep.n);
  rep.binom_coeffs = binomial_basis_coeffs(rep.P);
}

}  // namespace

HilbertReport hilbert_poly(const RootSystem& rs) {
  const WolfGrading g = wolf_grading(rs);
  const int n = g.quaternionic_dim;

  // (2r + n + 1)/(n + 1) * prod over the level-1/2 roots of (1 + r/(2q)),
  // q = <rho, mu> in the normalization making the highest root unit length.
  UniPoly P = UniPoly::linear(Rational(2), Rational(n + 1)) * Rational(1, n + 1);
  for (const Vec& mu : g.level(1)) {
    const Rational q = dot(g.rho, mu) / g.wolf_norm_raw;
    P = P * UniPoly::linear(Rational(1) / (Rational(2) * q), Rational(1));
  }

  // Degree-(2n+1) polynomials agree everywhere iff they agree at 2n+2
  // points; check against the full Weyl dimension product at r = 0..2n+3.
  for (long r = 0; r <= 2 * n + 3; ++r) {
    const Int wd = weyl_dim(vscale(Rational(r), g.wolf_root), g.positive_roots);
    const Rational rhs = P(Rational(r));
    if (Rational(wd) != rhs) {
      std::ostringstream os;
      os << "hilbert_poly(" << rs.label() << "): product formula gives " << rhs.str()
         << " but the Weyl dimension formula gives " << wd.get_str() << " at r = " << r;
      throw std::runtime_error(os.str());
    }
  }

  HilbertReport rep;
  rep.label = rs.label();
  rep.n = n;
  rep.degenerate = g.degenerate;
  rep.is_hpn = rs.type == SimpleType::C || (rs.type == SimpleType::B && rs.rank == 2);
  rep.P = P;
  rep.dim_g = rs.dim_g();
  fill_derived(rep);
  rep.checks.push_back({"weyl_oracle", true, ""});
  return rep;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::HPn: return "HPn";
    case Family::Gr2C: return "Gr2C";
    case Family::Gr4R: return "Gr4R";
    case Family::G2: return "G2";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::HPn, Family::Gr2C, Family::Gr4R, Family::G2})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

UniPoly closed_form(Family f, int n) {
  const UniPoly r = UniPoly::x();
  switch (f) {
    case Family::HPn: {
      if (n < 1) throw std::invalid_argument("closed_form(HPn): need n >= 1");
      return binomial(r * Rational(2) + UniPoly(Rational(2 * n + 1)),
                      static_cast<unsigned>(2 * n + 1));
    }
    case Family::Gr2C: {
      if (n < 1) throw std::invalid_argument("closed_form(Gr2C): need n >= 1");
      const UniPoly b = binomial(r + UniPoly(Rational(n)), static_cast<unsigned>(n));
      return UniPoly::linear(Rational(2, n + 1), Rational(n + 1, n + 1)) * b * b;
    }
    case Family::Gr4R: {
      if (n < 1) throw std::invalid_argument("closed_form(Gr4R): need n >= 1");
      UniPoly p = UniPoly::linear(Rational(2), Rational(n)) *
                  UniPoly::linear(Rational(2), Rational(n + 1)) *
                  UniPoly::linear(Rational(2), Rational(n + 2));
      p = p * Rational(Int(1), Int(n) * n * (n + 1) * (n + 2));
      return p * binomial(r + UniPoly(Rational(n)), static_cast<unsigned>(n - 1)) *
             binomial(r + UniPoly(Rational(n - 1)), static_cast<unsigned>(n - 1));
    }
    case Family::G2: {
      if (n != 2) throw std::invalid_argument("closed_form(G2): only n = 2");
      UniPoly p = UniPoly::linear(Rational(1), Rational(2)) *
                  UniPoly::linear(Rational(3), Rational(5)) *
                  UniPoly::linear(Rational(2), Rational(3)) *
                  UniPoly::linear(Rational(3), Rational(4)) *
                  UniPoly::linear(Rational(1), Rational(1));
      return p * Rational(1, 120);
    }
  }
  throw std::logic_error("closed_form: unreachable");
}

HilbertReport family_report(Family f, int n) {
  HilbertReport rep;
  rep.label = family_name(f) + "(n=" + std::to_string(n) + ")";
  rep.n = n;
  rep.is_hpn = f == Family::HPn;
  rep.P = closed_form(f, n);
  switch (f) {
    case Family::HPn: rep.dim_g = Int(n + 1) * (2 * n + 3); break;       // sp(n+1)
    case Family::Gr2C: rep.dim_g = Int(n + 2) * (n + 2) - 1; break;      // su(n+2)
    case Family::Gr4R: rep.dim_g = Int(n + 4) * (n + 3) / 2; break;      // so(n+4)
    case Family::G2: rep.dim_g = 14; break;
  }
  fill_derived(rep);
  return rep;
}

Rational quaternionic_volume(const UniPoly& P, int n) {
  if (P.is_zero() || P.degree() != static_cast<std::size_t>(2 * n + 1))
    throw std::invalid_argument("quaternionic_volume: polynomial degree != 2n+1");
  return P.leading_coefficient() * Rational(factorial(static_cast<unsigned>(2 * n + 1))) /
         Rational(2);
}

bool volume_subleading_ok(const UniPoly& P, int n, const Rational& v) {
  const Rational expect = Rational(n + 1) * v / Rational(factorial(static_cast<unsigned>(2 * n)));
  return P.coeff(static_cast<std::size_t>(2 * n)) == expect;
}

UniPoly bernoulli_basis_poly(int l, int n) {
  const UniPoly shifted =
      bernoulli_poly(static_cast<unsigned>(2 * l + 1))
          .compose(UniPoly::linear(Rational(1), Rational(n + 2, 2)));
  return shifted * Rational(Int(2), factorial(static_cast<unsigned>(2 * l + 1)));
}

std::vector<Rational> bernoulli_expand(const UniPoly& P, int n) {
  // Antisymmetry about -(n+1)/2 first: P(r) + P(-r-n-1) must vanish.
  const UniPoly reflected = P.compose(UniPoly::linear(Rational(-1), Rational(-(n + 1))));
  const UniPoly residual = P + reflected;
  if (!residual.is_zero())
    throw std::domain_error("bernoulli_expand: symmetry P(r) = -P(-r-n-1) violated, residual " +
                            residual.str());
  // The basis is triangular in odd degrees; peel from the top.
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  UniPoly rem = P;
  for (int l = n; l >= 0; --l) {
    const std::size_t d = static_cast<std::size_t>(2 * l + 1);
    if (rem.is_zero() || rem.degree() < d) continue;
    const UniPoly f = bernoulli_basis_poly(l, n);
    c[static_cast<std::size_t>(l)] = rem.coeff(d) / f.leading_coefficient();
    rem -= f * c[static_cast<std::size_t>(l)];
  }
  if (!rem.is_zero())
    throw std::domain_error("bernoulli_expand: expansion left residual " + rem.str());
  return c;
}

std::vector<Rational> binomial_basis_coeffs(const UniPoly& P) {
  const std::size_t deg = P.is_zero() ? 0 : P.degree();
  // n_i = (Delta^i P)(0) with the forward difference Delta f(r) = f(r+1) - f(r).
  std::vector<Rational> out;
  UniPoly q = P;
  for (std::size_t i = 0; i <= deg; ++i) {
    out.push_back(q(Rational(0)));
    q = q.compose(UniPoly::linear(Rational(1), Rational(1))) - q;
  }
  return out;
}

Rational chern_character_coeff(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("chern_character_coeff: need k, l >= 0");
  const UniPoly b = bernoulli_poly(static_cast<unsigned>(2 * l + 1));
  return Rational(pow(Int(2), static_cast<unsigned>(2 * l + 1))) *
         b(Rational(k + 2, 2)) / Rational(factorial(static_cast<unsigned>(2 * l + 1)));
}

Rational power_sum(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("power_sum: need k, l >= 0");
  Rational s = 0;
  for (int v = 0; v <= k; ++v) s += pow(Rational(k - 2 * v), static_cast<unsigned>(2 * l));
  return s / Rational(factorial(static_cast<unsigned>(2 * l)));
}

namespace {

void check_spectral(const SpectralParams& sp, const char* who) {
  if (sp.n < 1 || sp.kappa.sign() <= 0)
    throw std::invalid_argument(std::string(who) + ": need n >= 1 and kappa > 0");
}

}  // namespace

Rational lambda_min(const SpectralParams& sp) {
  check_spectral(sp, "lambda_min");
  return sp.kappa * Rational(Int(sp.r) * (sp.n + 1 + sp.r), Int(2) * sp.n * (sp.n + 2));
}

Rational phi(const SpectralParams& sp, int l, int d) {
  check_spectral(sp, "phi");
  return sp.kappa * Rational(Int(l + d - sp.n) * (l - d + sp.n + 2),
                             Int(8) * sp.n * (sp.n + 2));
}

void verify_report(HilbertReport& rep, int r_max) {
  const int n = rep.n;
  auto& checks = rep.checks;

  checks.push_back({"P0_equals_1", rep.P(Rational(0)) == Rational(1),
                    rep.P(Rational(0)).str()});
  {
    const Rational p1 = rep.P(Rational(1));
    checks.push_back({"P1_equals_dim_g", p1 == Rational(rep.dim_g),
                      "P(1)=" + p1.str() + " dim_g=" + rep.dim_g.get_str()});
  }
  {
    const UniPoly residual =
        rep.P + rep.P.compose(UniPoly::linear(Rational(-1), Rational(-(n + 1))));
    checks.push_back({"symmetry", residual.is_zero(),
                      residual.is_zero() ? "" : "residual " + residual.str()});
  }
  {
    bool ok = true;
    std::string detail;
    for (long r = -r_max; r <= r_max && ok; ++r) {
      if (!rep.P(Rational(r)).is_integer()) {
        ok = false;
        detail = "P(" + std::to_string(r) + ") = " + rep.P(Rational(r)).str();
      }
    }
    checks.push_back({"integrality", ok, detail});
  }
  {
    bool ok = true;
    std::string detail;
    for (long r = 0; r <= r_max && ok; ++r) {
      const Rational p = rep.P(Rational(r));
      const Rational cap(binomial(Int(2 * n + 1 + 2 * r), static_cast<unsigned>(2 * n + 1)));
      if (p.sign() < 0 || p > cap) {
        ok = false;
        detail = "r=" + std::to_string(r) + " P=" + p.str() + " bound=" + cap.str();
      }
    }
    checks.push_back({"upper_bound", ok, detail});
  }
  checks.push_back({"volume_subleading", volume_subleading_ok(rep.P, n, rep.volume), ""});
  {
    bool ok = !rep.char_coeffs.empty() &&
              rep.char_coeffs.back() == rep.volume;
    UniPoly rebuilt;
    for (int l = 0; l <= n && ok; ++l)
      rebuilt += bernoulli_basis_poly(l, n) * rep.char_coeffs[static_cast<std::size_t>(l)];
    ok = ok && rebuilt == rep.P;
    checks.push_back({"bernoulli_roundtrip", ok, ""});
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < rep.binom_coeffs.size() && ok; ++i) {
      if (!rep.binom_coeffs[i].is_integer()) {
        ok = false;
        detail = "n_" + std::to_string(i) + " = " + rep.binom_coeffs[i].str();
      }
    }
    checks.push_back({"binomial_coeffs_integral", ok, detail});
  }
  if (rep.is_hpn && !rep.degenerate) {
    bool ok = true;
    std::string detail;
    for (int j = 1; j <= n && ok; ++j) {
      const Rational at(-j, 2);
      if (!rep.P(at).is_zero()) {
        ok = false;
        detail = "P(" + at.str() + ") = " + rep.P(at).str();
      }
    }
    checks.push_back({"hpn_zeros", ok, detail});
  }
}

}  // namespace wolfhp
