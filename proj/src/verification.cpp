#include "wolfhp/verification.hpp"

#include <future>
#include <sstream>
#include <stdexcept>

#include "wolfhp/symtensor.hpp"

namespace wolfhp {

namespace {

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

bool TwistorCellReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool SuiteCell::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

TwistorCellReport twistor_cell(int n, int r, int cap, int imap_L, bool solutions) {
  TwistorCellReport rep;
  rep.n = n;
  rep.r = r;
  rep.cap = cap < 0 ? 2 * r : cap;

  const SymbolData sym = twistor_symbol({n, r});
  const ProlongationTower tower = prolongation_tower(sym, rep.cap);
  rep.a_dim = tower.total_kernel.dim();
  for (const auto& lev : tower.levels) rep.level_dims.push_back(lev.dim());
  for (std::size_t l = 0; l < rep.level_dims.size(); ++l)
    rep.formula_dims.push_back(
        static_cast<int>(l) <= 2 * r - 1
            ? (2 * r - static_cast<long>(l)) *
                  binomial(Int(2 * n + static_cast<long>(l)), static_cast<unsigned>(l + 1)).get_si()
            : 0);
  rep.termination_degree = tower.termination_degree;
  rep.binomial_total = binomial(Int(2 * n + 1 + 2 * r), static_cast<unsigned>(2 * n + 1));

  {
    bool ok = rep.level_dims == rep.formula_dims;
    rep.checks.push_back({"level_dims_formula", ok,
                          "computed " + join_longs(rep.level_dims) + " formula " +
                              join_longs(rep.formula_dims)});
  }
  {
    const bool ok = tower.terminated() && *tower.termination_degree == 2 * r - 1;
    rep.checks.push_back({"finite_type_degree", ok,
                          tower.terminated()
                              ? "d = " + std::to_string(*tower.termination_degree)
                              : "not terminated at cap " + std::to_string(rep.cap)});
  }
  if (tower.terminated()) {
    const int d = *tower.termination_degree;
    rep.total_dim = tower.total_dim_upto(d);
    rep.checks.push_back({"total_dim_binomial", rep.total_dim == rep.binomial_total,
                          rep.total_dim.get_str() + " vs " + rep.binomial_total.get_str()});
    for (int l = 1; l <= d && l < static_cast<int>(tower.levels.size()); ++l) {
      long kd = 0;
      const bool ok = spencer_exactness(tower, l, &kd);
      rep.spencer_kernel_dims.push_back(kd);
      rep.spencer_ok.push_back(ok);
    }
    bool all_spencer = true;
    for (bool b : rep.spencer_ok) all_spencer = all_spencer && b;
    rep.checks.push_back({"spencer_exactness", all_spencer,
                          "kernel dims " + join_longs(rep.spencer_kernel_dims)});

    if (imap_L >= 0) {
      const int L = imap_L;
      try {
        const IMapChain chain = build_I_maps(tower, L);
        bool all_psp = true;
        for (int l = 1; l <= L; ++l) {
          const LinearMap ml = prolong_matrix(sym, l);
          const bool ok = mul(ml, mul(chain.S[static_cast<std::size_t>(l)], ml)) == ml;
          rep.psp_ok.push_back(ok);
          all_psp = all_psp && ok;
        }
        rep.checks.push_back({"partial_inverse_psp", all_psp, ""});
        rep.imaps_injective = true;
        for (const auto& im : chain.I) rep.imap_ranks.push_back(rank(im));
        for (std::size_t l = 0; l < chain.I.size(); ++l)
          rep.imaps_injective =
              rep.imaps_injective && rep.imap_ranks[l] == chain.I[l].cols();
        rep.checks.push_back({"imaps_injective", rep.imaps_injective,
                              "ranks " + join_longs(rep.imap_ranks)});

        // Block structure: the A^(s) columns of every I^{<=l} restrict to the
        // plain inclusion on the degree-(k+s) block and to zero below it.
        bool uni = true;
        const int k = sym.order_k;
        for (int l = 1; l <= L && uni; ++l) {
          const LinearMap& im = chain.I[static_cast<std::size_t>(l)];
          long col_off = tower.total_kernel.dim();
          for (int s = 1; s <= l && uni; ++s) {
            const long rows_lo = graded_offset(sym.v_dim, sym.e0_dim, k + s);
            const long rows_hi = graded_offset(sym.v_dim, sym.e0_dim, k + s + 1);
            const SubspaceBasis& lev = tower.levels[static_cast<std::size_t>(s)];
            for (int c = 0; c < lev.dim() && uni; ++c) {
              SparseVec expect = lev.vectors[static_cast<std::size_t>(c)];
              for (auto& e : expect) e.first += static_cast<int>(rows_lo);
              SparseVec got;
              for (int i = 0; i < im.rows(); ++i) {
                if (i >= rows_hi) break;
                const Rational v = im.entry(i, static_cast<int>(col_off) + c);
                if (!v.is_zero()) got.emplace_back(i, v);
              }
              uni = got == expect;
            }
            col_off += lev.dim();
          }
        }
        rep.unitriangular_ok = uni;
        rep.checks.push_back({"imaps_unitriangular", uni, ""});
      } catch (const std::exception& ex) {
        rep.checks.push_back({"imaps_constructed", false, ex.what()});
      }
    }

    if (solutions) {
      const int k = sym.order_k;
      for (int db : {k + d, k + d + 1}) {
        const long dim = polynomial_solution_space(sym, db).dim();
        rep.solution_dims.emplace_back(db, dim);
      }
      bool stationary = true;
      for (const auto& [db, dim] : rep.solution_dims)
        stationary = stationary && Int(dim) == rep.total_dim;
      rep.checks.push_back({"solution_space_stationary", stationary,
                            "dims at k+d, k+d+1 vs " + rep.total_dim.get_str()});
      const bool bound_ok =
          !rep.solution_dims.empty() &&
          Int(rep.solution_dims.front().second) <= rep.total_dim;
      rep.checks.push_back({"solution_space_bound", bound_ok, ""});
    }
  }
  return rep;
}

InfiniteTypeReport divergence_cell(int v_dim, int cap) {
  InfiniteTypeReport rep;
  rep.v_dim = v_dim;
  rep.cap = cap;
  const ProlongationTower tower = prolongation_tower(divergence_symbol(v_dim), cap);
  for (const auto& lev : tower.levels) rep.level_dims.push_back(lev.dim());
  rep.not_terminated = !tower.terminated();
  rep.checks.push_back({"not_terminated", rep.not_terminated,
                        "level dims " + join_longs(rep.level_dims)});
  bool positive = true;
  for (long d : rep.level_dims) positive = positive && d > 0;
  rep.checks.push_back({"levels_strictly_positive", positive, ""});
  return rep;
}

RootSystem corrupt_root_table(RootSystem rs) {
  const Vec hi = highest_root(rs);
  const Rational norm = dot(hi, hi);
  for (auto& mu : rs.roots) {
    if (dot(hi, mu) * Rational(2) == -norm) {
      mu = vscale(Rational(2), mu);
      return rs;
    }
  }
  throw std::logic_error("corrupt_root_table: no level -1/2 root found");
}

namespace {

SuiteCell hilbert_cell(const std::string& label, const std::optional<Family>& family,
                       int family_n, int r_max, bool corrupted) {
  SuiteCell cell;
  cell.name = label;
  try {
    RootSystem rs = build_root_system(label);
    if (corrupted) rs = corrupt_root_table(rs);
    HilbertReport rep = hilbert_poly(rs);
    verify_report(rep, r_max);
    if (family) {
      const UniPoly cf = closed_form(*family, family_n);
      rep.checks.push_back({"closed_form_match", rep.P == cf, family_name(*family)});
    }
    cell.checks = rep.checks;
  } catch (const std::exception& ex) {
    cell.checks.push_back({"wolf_grading_consistency", false, ex.what()});
  }
  return cell;
}

}  // namespace

std::vector<SuiteCell> hilbert_suite(int r_max, const std::string& corrupt_label) {
  struct Spec {
    const char* label;
    std::optional<Family> family;
    int n;
  };
  const std::vector<Spec> specs = {
      {"C3", Family::HPn, 2}, {"A3", Family::Gr2C, 2}, {"B3", Family::Gr4R, 3},
      {"D4", Family::Gr4R, 4}, {"G2", Family::G2, 2},  {"F4", std::nullopt, 0},
      {"E6", std::nullopt, 0}, {"E7", std::nullopt, 0}, {"E8", std::nullopt, 0},
  };
  std::vector<std::future<SuiteCell>> futs;
  for (const auto& s : specs)
    futs.push_back(std::async(std::launch::async, hilbert_cell, std::string(s.label), s.family,
                              s.n, r_max, corrupt_label == s.label));
  std::vector<SuiteCell> cells;
  for (auto& f : futs) cells.push_back(f.get());

  {
    SuiteCell iso;
    iso.name = "isogenies";
    const UniPoly b2 = hilbert_poly(build_root_system("B2")).P;
    const UniPoly c2 = hilbert_poly(build_root_system("C2")).P;
    const UniPoly d3 = hilbert_poly(build_root_system("D3")).P;
    const UniPoly a3 = hilbert_poly(build_root_system("A3")).P;
    iso.checks.push_back({"P_B2_equals_P_C2", b2 == c2, ""});
    iso.checks.push_back({"P_D3_equals_P_A3", d3 == a3, ""});
    iso.checks.push_back({"Gr4R1_equals_HP1",
                          closed_form(Family::Gr4R, 1) == closed_form(Family::HPn, 1), ""});
    cells.push_back(iso);
  }
  {
    SuiteCell chern;
    chern.name = "chern_coefficients";
    bool ok = true;
    std::string detail;
    for (int k = 0; k <= 10 && ok; ++k)
      for (int l = 0; l <= 6 && ok; ++l)
        if (chern_character_coeff(k, l) != power_sum(k, l)) {
          ok = false;
          detail = "k=" + std::to_string(k) + " l=" + std::to_string(l);
        }
    chern.checks.push_back({"bernoulli_vs_power_sum", ok, detail});
    cells.push_back(chern);
  }
  {
    SuiteCell spec;
    spec.name = "spectral_constants";
    bool ok = true;
    std::string detail;
    const std::vector<Rational> kappas = {Rational(1), Rational(7, 3), Rational(22, 7)};
    for (int n = 1; n <= 6 && ok; ++n) {
      std::vector<Rational> ks = kappas;
      ks.push_back(Rational(2 * n));
      for (int r = 0; r <= 6 && ok; ++r)
        for (const Rational& kappa : ks) {
          const SpectralParams sp{n, kappa, r};
          if (phi(sp, n + 2 * r, 0) != lambda_min(sp)) {
            ok = false;
            detail = "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                     " kappa=" + kappa.str();
          }
        }
    }
    spec.checks.push_back({"phi_equals_lambda_min", ok, detail});
    bool killing_ok = true;
    std::string kd;
    for (int n = 1; n <= 6 && killing_ok; ++n) {
      const RootSystem rs = build_root_system(SimpleType::C, n + 1);
      const Vec hi = highest_root(rs);
      for (int r = 0; r <= 6 && killing_ok; ++r) {
        const SpectralParams sp{n, Rational(2 * n), r};
        if (lambda_min(sp) != casimir(vscale(Rational(r), hi), rs, Normalization::killing)) {
          killing_ok = false;
          kd = "n=" + std::to_string(n) + " r=" + std::to_string(r);
        }
      }
    }
    spec.checks.push_back({"killing_matches_casimir", killing_ok, kd});
    cells.push_back(spec);
  }
  return cells;
}

std::vector<SuiteCell> prolong_suite() {
  const std::vector<std::pair<int, int>> grid = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}};
  std::vector<std::future<SuiteCell>> futs;
  for (const auto& [n, r] : grid)
    futs.push_back(std::async(std::launch::async, [n = n, r = r] {
      SuiteCell cell;
      cell.name = "twistor(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")";
      const TwistorCellReport rep = twistor_cell(n, r, -1, /*imap_L=*/2 * r, /*solutions=*/true);
      cell.checks = rep.checks;
      return cell;
    }));
  std::vector<SuiteCell> cells;
  for (auto& f : futs) cells.push_back(f.get());
  for (int v : {2, 3}) {
    SuiteCell cell;
    cell.name = "divergence(v=" + std::to_string(v) + ")";
    cell.checks = divergence_cell(v, 5).checks;
    cells.push_back(cell);
  }
  return cells;
}

}  // namespace wolfhp
