#include "wolfhp/prolongation.hpp"

#include <stdexcept>
#include <string>

#include "wolfhp/symtensor.hpp"

namespace wolfhp {

long graded_offset(int v_dim, int e0_dim, int upto_m) {
  long off = 0;
  for (int j = 0; j < upto_m; ++j) off += sym_dim(v_dim, j) * e0_dim;
  return off;
}

LinearMap prolong_matrix(const SymbolData& sym, int l) {
  if (l < 0) throw std::invalid_argument("prolong_matrix: need l >= 0");
  const int k = sym.order_k;
  const LinearMap delta = comultiplication(sym.v_dim, l, k);
  const LinearMap left = kron(LinearMap::identity(static_cast<int>(sym_dim(sym.v_dim, l))),
                              sym.component[static_cast<std::size_t>(k)]);
  return mul(left, kron(delta, LinearMap::identity(sym.e0_dim)));
}

SubspaceBasis prolong_level(const SymbolData& sym, int l) {
  return kernel(prolong_matrix(sym, l));
}

long ProlongationTower::level_dim(int l) const {
  if (l < static_cast<int>(levels.size())) return levels[static_cast<std::size_t>(l)].dim();
  if (terminated()) return 0;
  throw std::logic_error("level_dim: level " + std::to_string(l) + " not computed");
}

long ProlongationTower::total_dim_upto(int l) const {
  long t = total_kernel.dim();
  for (int i = 1; i <= l; ++i) t += level_dim(i);
  return t;
}

ProlongationTower prolongation_tower(const SymbolData& sym, int cap) {
  if (cap < 1) throw std::invalid_argument("prolongation_tower: need cap >= 1");
  ProlongationTower t;
  t.symbol = sym;
  t.cap = cap;

  // A = ker of the stacked components on Sym^{<=k} V (x) E0.
  const int k = sym.order_k;
  const long total_cols = graded_offset(sym.v_dim, sym.e0_dim, k + 1);
  LinearMap p_total(sym.f_dim, static_cast<int>(total_cols));
  for (int j = 0; j <= k; ++j) {
    const long off = graded_offset(sym.v_dim, sym.e0_dim, j);
    const LinearMap& c = sym.component[static_cast<std::size_t>(j)];
    for (int i = 0; i < c.rows(); ++i)
      for (const auto& [col, v] : c.row(i)) p_total.add_entry(i, static_cast<int>(off) + col, v);
  }
  t.total_kernel = kernel(p_total);

  for (int l = 0; l <= cap; ++l) {
    t.levels.push_back(prolong_level(sym, l));
    if (t.levels.back().dim() == 0) {
      t.termination_degree = l > 0 ? l - 1 : 0;
      break;
    }
  }
  return t;
}

namespace {

int wedge_index(int i, int j, int v) {  // pairs (i,j), i < j, lexicographic
  return i * v - i * (i + 1) / 2 + (j - i - 1);
}

// V (x) Sym^{m} V (x) E0 -> Lambda^2 V (x) Sym^{m-1} V (x) E0,
// v (x) e^(alpha) (x) e -> sum_a (v ^ e_a) (x) e^(alpha - delta_a) (x) e.
LinearMap wedge_map(int v_dim, int e0_dim, int m) {
  const SymTensorSpace sm(v_dim, m), sm1(v_dim, m - 1);
  const int lam2 = v_dim * (v_dim - 1) / 2;
  LinearMap w(lam2 * sm1.size() * e0_dim, v_dim * sm.size() * e0_dim);
  for (int iv = 0; iv < v_dim; ++iv)
    for (int ia = 0; ia < sm.size(); ++ia) {
      const std::vector<int>& alpha = sm.multi(ia);
      for (int a = 0; a < v_dim; ++a) {
        if (alpha[static_cast<std::size_t>(a)] == 0 || a == iv) continue;
        std::vector<int> rest = alpha;
        --rest[static_cast<std::size_t>(a)];
        const int ir = sm1.index_of(rest);
        const int sign = iv < a ? 1 : -1;
        const int pair = iv < a ? wedge_index(iv, a, v_dim) : wedge_index(a, iv, v_dim);
        for (int ie = 0; ie < e0_dim; ++ie)
          w.add_entry((pair * sm1.size() + ir) * e0_dim + ie,
                      (iv * sm.size() + ia) * e0_dim + ie, Rational(sign));
      }
    }
  return w;
}

}  // namespace

bool spencer_exactness(const ProlongationTower& tower, int l, long* kernel_dim_out) {
  if (l < 1 || l >= static_cast<int>(tower.levels.size()))
    throw std::invalid_argument("spencer_exactness: need 1 <= l <= computed levels");
  const SymbolData& sym = tower.symbol;
  const LinearMap incl = tower.levels[static_cast<std::size_t>(l)].inclusion();
  const LinearMap restricted =
      mul(wedge_map(sym.v_dim, sym.e0_dim, sym.order_k + l),
          kron(LinearMap::identity(sym.v_dim), incl));
  const long kd = kernel(restricted).dim();
  if (kernel_dim_out) *kernel_dim_out = kd;
  return kd == tower.level_dim(l + 1);
}

LinearMap build_P_l(const SymbolData& sym, int l) {
  if (l < 0) throw std::invalid_argument("build_P_l: need l >= 0");
  const int k = sym.order_k;
  const long cols = graded_offset(sym.v_dim, sym.e0_dim, k + l + 1);
  const long sl = sym_dim(sym.v_dim, l);
  LinearMap out(static_cast<int>(sl * sym.f_dim), static_cast<int>(cols));
  for (int m = l; m <= k + l; ++m) {
    const LinearMap block =
        mul(kron(LinearMap::identity(static_cast<int>(sl)),
                 sym.component[static_cast<std::size_t>(m - l)]),
            kron(comultiplication(sym.v_dim, l, m - l), LinearMap::identity(sym.e0_dim)));
    const long off = graded_offset(sym.v_dim, sym.e0_dim, m);
    for (int i = 0; i < block.rows(); ++i)
      for (const auto& [col, v] : block.row(i))
        out.add_entry(i, static_cast<int>(off) + col, v);
  }
  return out;
}

IMapChain build_I_maps(const ProlongationTower& tower, int L) {
  if (!tower.terminated() && L > static_cast<int>(tower.levels.size()) - 1)
    throw std::invalid_argument("build_I_maps: tower not computed up to L");
  const SymbolData& sym = tower.symbol;
  const int k = sym.order_k;
  IMapChain chain;
  chain.I.push_back(tower.total_kernel.inclusion());
  chain.S.push_back(LinearMap());  // placeholder at l = 0
  chain.P.push_back(LinearMap());

  for (int l = 1; l <= L; ++l) {
    const long rows = graded_offset(sym.v_dim, sym.e0_dim, k + l + 1);
    const long top_off = graded_offset(sym.v_dim, sym.e0_dim, k + l);
    const LinearMap ml = prolong_matrix(sym, l);
    const LinearMap sl = partial_inverse(ml);
    const LinearMap pl = build_P_l(sym, l);

    // Pad I^{<= l-1} into the larger codomain.
    const LinearMap& prev = chain.I.back();
    LinearMap padded(static_cast<int>(rows), prev.cols());
    for (int i = 0; i < prev.rows(); ++i) padded.set_row(i, prev.row(i));

    // Correction block eta -> -S^l P^l (I^{<= l-1} eta + 0).
    const LinearMap corr = mul(sl, mul(pl, padded));

    const long lev = tower.level_dim(l);
    LinearMap next(static_cast<int>(rows), prev.cols() + static_cast<int>(lev));
    for (int i = 0; i < prev.rows(); ++i) next.set_row(i, prev.row(i));
    for (int i = 0; i < corr.rows(); ++i)
      for (const auto& [col, v] : corr.row(i))
        next.add_entry(static_cast<int>(top_off) + i, col, -v);
    if (lev > 0) {
      const LinearMap incl = tower.levels[static_cast<std::size_t>(l)].inclusion();
      for (int i = 0; i < incl.rows(); ++i)
        for (const auto& [col, v] : incl.row(i))
          next.add_entry(static_cast<int>(top_off) + i, prev.cols() + col, v);
    }
    if (rank(next) != next.cols())
      throw std::runtime_error("build_I_maps: I^{<=" + std::to_string(l) +
                               "} is rank deficient");
    chain.I.push_back(std::move(next));
    chain.S.push_back(sl);
    chain.P.push_back(pl);
  }
  // I^{<=0} injectivity is the inclusion of a basis; check it anyway.
  if (rank(chain.I.front()) != chain.I.front().cols())
    throw std::runtime_error("build_I_maps: I^{<=0} is rank deficient");
  return chain;
}

SubspaceBasis polynomial_solution_space(const SymbolData& sym, int degree_bound) {
  if (degree_bound < 0)
    throw std::invalid_argument("polynomial_solution_space: need degree_bound >= 0");
  const int D = degree_bound;
  std::vector<SymTensorSpace> spaces;
  for (int m = 0; m <= D; ++m) spaces.emplace_back(sym.v_dim, m);

  std::vector<long> unk_off(static_cast<std::size_t>(D + 2), 0);
  for (int m = 0; m <= D; ++m)
    unk_off[static_cast<std::size_t>(m + 1)] =
        unk_off[static_cast<std::size_t>(m)] + spaces[static_cast<std::size_t>(m)].size() * sym.e0_dim;
  std::vector<long> con_off(static_cast<std::size_t>(D + 2), 0);
  for (int t = 0; t <= D; ++t)
    con_off[static_cast<std::size_t>(t + 1)] =
        con_off[static_cast<std::size_t>(t)] + spaces[static_cast<std::size_t>(t)].size() * sym.f_dim;

  LinearMap system(static_cast<int>(con_off[static_cast<std::size_t>(D + 1)]),
                   static_cast<int>(unk_off[static_cast<std::size_t>(D + 1)]));

  // psi = sum c_{gamma,e} x^gamma. The degree-j jet component at beta is
  // d^beta psi; its x^mu coefficient is c_{mu+beta,e} * prod (mu_a+beta_a)!/mu_a!.
  for (int j = 0; j <= static_cast<int>(sym.order_k) && j <= D; ++j) {
    const SymTensorSpace sj(sym.v_dim, j);
    const LinearMap& pj = sym.component[static_cast<std::size_t>(j)];
    for (int f = 0; f < pj.rows(); ++f) {
      for (const auto& [col, w] : pj.row(f)) {
        const int ib = col / sym.e0_dim;
        const int ie = col % sym.e0_dim;
        const std::vector<int>& beta = sj.multi(ib);
        for (int t = 0; t + j <= D; ++t) {
          const SymTensorSpace& st = spaces[static_cast<std::size_t>(t)];
          const SymTensorSpace& stj = spaces[static_cast<std::size_t>(t + j)];
          for (int im = 0; im < st.size(); ++im) {
            const std::vector<int>& mu = st.multi(im);
            std::vector<int> gamma = mu;
            Int fall = 1;
            for (std::size_t a = 0; a < gamma.size(); ++a) {
              gamma[a] += beta[a];
              for (int q = mu[a] + 1; q <= gamma[a]; ++q) fall *= q;
            }
            system.add_entry(static_cast<int>(con_off[static_cast<std::size_t>(t)]) +
                                 im * sym.f_dim + f,
                             static_cast<int>(unk_off[static_cast<std::size_t>(t + j)]) +
                                 stj.index_of(gamma) * sym.e0_dim + ie,
                             w * Rational(fall));
          }
        }
      }
    }
  }
  return kernel(system);
}

ProlongationLemmaReport verify_prolongation_lemma(int n, int r) {
  if (n < 1 || r < 1)
    throw std::invalid_argument("verify_prolongation_lemma: need n >= 1, r >= 1");
  const SymbolData sym = twistor_symbol({n, r});
  const ProlongationTower tower = prolongation_tower(sym, 2 * r);

  ProlongationLemmaReport rep;
  rep.n = n;
  rep.r = r;
  rep.a_dim = tower.total_kernel.dim();
  rep.dims_match = true;
  Int total = rep.a_dim;
  for (int l = 0; l <= 2 * r; ++l) {
    LemmaLevelRow row;
    row.l = l;
    row.computed = tower.level_dim(l);
    row.formula = l <= 2 * r - 1
                      ? (2 * r - l) * binomial(Int(2 * n + l), static_cast<unsigned>(l + 1)).get_si()
                      : 0;
    rep.dims_match = rep.dims_match && row.computed == row.formula;
    if (l >= 1) total += row.computed;
    rep.levels.push_back(row);
  }
  rep.total = total;
  rep.binomial_total = binomial(Int(2 * n + 1 + 2 * r), static_cast<unsigned>(2 * n + 1));
  rep.total_matches = rep.total == rep.binomial_total;
  return rep;
}

}  // namespace wolfhp
