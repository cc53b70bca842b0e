#include "wolfhp/wolf_grading.hpp"

#include <stdexcept>

namespace wolfhp {

namespace {

// Generic lexicographic functional (5^{d-1}, ..., 5, 1). Base 5 separates
// any two distinct roots of the stored models: coordinates lie in
// {0, +-1/2, +-1, +-2}, so no nonzero root pairs to zero with it.
Vec lex_functional(int dim) {
  Vec w(dim);
  Rational p = 1;
  for (int i = dim - 1; i >= 0; --i) {
    w[i] = p;
    p *= Rational(5);
  }
  return w;
}

}  // namespace

WolfGrading wolf_grading(const RootSystem& rs) {
  WolfGrading g;
  g.wolf_root = highest_root(rs);
  g.wolf_norm_raw = dot(g.wolf_root, g.wolf_root);

  for (const auto& mu : rs.roots) {
    const Rational h = dot(g.wolf_root, mu) / g.wolf_norm_raw;  // level
    const Rational twice = h * Rational(2);
    if (!twice.is_integer() || twice > Rational(2) || twice < Rational(-2))
      throw std::runtime_error("wolf_grading: root " + vec_str(mu) +
                               " has level " + h.str() +
                               " outside {-1,-1/2,0,1/2,1}");
    const long idx = twice.num().get_si() + 2;
    g.levels[static_cast<std::size_t>(idx)].push_back(mu);
  }
  if (g.levels[4].size() != 1)
    throw std::runtime_error("wolf_grading: |Delta_1| = " + std::to_string(g.levels[4].size()) +
                             ", expected exactly the highest root");
  if (g.levels[0].size() != 1)
    throw std::runtime_error("wolf_grading: |Delta_{-1}| = " + std::to_string(g.levels[0].size()));
  if (g.levels[3].size() != g.levels[1].size() || g.levels[3].size() % 2 != 0)
    throw std::runtime_error("wolf_grading: level +-1/2 sets unbalanced or odd");
  g.quaternionic_dim = static_cast<int>(g.levels[3].size()) / 2;
  g.degenerate = g.quaternionic_dim == 0;

  // Perturbed positivity functional v = wolf_root + eps * v0 with v0 the
  // lex functional projected off wolf_root and eps small enough that levels
  // dominate: eps = <w,w> / (2 (1 + max |<v0,mu>|)).
  const Vec w = lex_functional(rs.ambient_dim);
  const Vec v0 = vsub(w, vscale(dot(w, g.wolf_root) / g.wolf_norm_raw, g.wolf_root));
  Rational max_pair = 0;
  for (const auto& mu : rs.roots) {
    const Rational p = dot(v0, mu).abs();
    if (p > max_pair) max_pair = p;
  }
  const Rational eps = g.wolf_norm_raw / (Rational(2) * (Rational(1) + max_pair));
  const Vec v = vadd(g.wolf_root, vscale(eps, v0));

  for (const auto& mu : rs.roots) {
    const Rational p = dot(v, mu);
    if (p.is_zero())
      throw std::runtime_error("wolf_grading: perturbed functional vanishes on " + vec_str(mu));
    if (p.sign() > 0) g.positive_roots.push_back(mu);
  }
  if (2 * g.positive_roots.size() != rs.roots.size())
    throw std::runtime_error("wolf_grading: perturbed order does not halve the roots");
  for (const auto& mu : g.levels[4])
    if (dot(v, mu).sign() <= 0) throw std::runtime_error("wolf_grading: Delta_1 not positive");
  for (const auto& mu : g.levels[3])
    if (dot(v, mu).sign() <= 0) throw std::runtime_error("wolf_grading: Delta_{1/2} not positive");

  Vec rho(rs.ambient_dim, Rational(0));
  for (const auto& mu : g.positive_roots) rho = vadd(rho, mu);
  g.rho = vscale(Rational(1, 2), rho);

  const Rational half_n_plus_1 = Rational(g.quaternionic_dim + 1, 2);
  g.rho_k0 = vsub(g.rho, vscale(half_n_plus_1, g.wolf_root));
  if (!dot(g.rho_k0, g.wolf_root).is_zero())
    throw std::runtime_error("wolf_grading: rho - (n+1)/2 wolf_root not orthogonal to wolf_root");

  // sum over Delta_{1/2} of (mu - wolf_root/2) must vanish.
  Vec s(rs.ambient_dim, Rational(0));
  for (const auto& mu : g.levels[3]) s = vadd(s, vsub(mu, vscale(Rational(1, 2), g.wolf_root)));
  if (!vis_zero(s))
    throw std::runtime_error("wolf_grading: projected level-1/2 sum is " + vec_str(s));

  g.casimir_ad_raw = dot(g.wolf_root, vadd(g.wolf_root, vscale(Rational(2), g.rho)));
  return g;
}

}  // namespace wolfhp
