#pragma once

#include <optional>
#include <vector>

#include "wolfhp/linmap.hpp"
#include "wolfhp/symbol.hpp"

namespace wolfhp {

/// Column offset of the degree-m block inside Sym^{<=upto-1} V (x) E0.
long graded_offset(int v_dim, int e0_dim, int upto_m);

/// Restriction of the l-th jet-prolonged operator to the top graded block:
/// (id (x) P_k) o Delta on Sym^{k+l} V (x) E0 -> Sym^l V (x) F.
LinearMap prolong_matrix(const SymbolData& sym, int l);

/// Basis of the l-th prolongation: kernel of prolong_matrix.
SubspaceBasis prolong_level(const SymbolData& sym, int l);

struct ProlongationTower {
  SymbolData symbol;
  SubspaceBasis total_kernel;          // A = ker P on Sym^{<=k} V (x) E0
  std::vector<SubspaceBasis> levels;   // A^(l) for l = 0..computed
  std::optional<int> termination_degree;  // smallest d >= 0 with A^(d+1) = 0
  int cap = 0;

  bool terminated() const { return termination_degree.has_value(); }
  /// dim A^(l); 0 beyond the computed range of a terminated tower.
  long level_dim(int l) const;
  /// dim A^{<=l} = dim A + sum_{1 <= i <= l} dim A^(i)
  long total_dim_upto(int l) const;
};

/// Computes levels l = 0.. until one vanishes or l exceeds cap. A tower that
/// reaches cap with no zero level carries no termination degree (possible
/// non-finite type).
ProlongationTower prolongation_tower(const SymbolData& sym, int cap);

/// Exactness of A^(l+1) -> V (x) A^(l) -> Lambda^2 V (x) A^(l-1) at the
/// middle term, by elimination: the kernel dimension of the wedge map on
/// V (x) A^(l) must equal dim A^(l+1). Requires 1 <= l <= computed levels.
bool spencer_exactness(const ProlongationTower& tower, int l, long* kernel_dim_out = nullptr);

/// Full jet-prolonged operator Sym^{<=k+l} V (x) E0 -> Sym^l V (x) F with
/// graded blocks (id (x) P_{m-l}) o Delta for l <= m <= k+l, zero elsewhere.
LinearMap build_P_l(const SymbolData& sym, int l);

struct IMapChain {
  /// I[l]: A^{<=l} -> Sym^{<=k+l} V (x) E0, all injective, block-unitriangular.
  std::vector<LinearMap> I;
  /// S[l] (l >= 1): partial inverse of prolong_matrix(sym, l).
  std::vector<LinearMap> S;
  /// P[l] (l >= 1): build_P_l(sym, l), kept for the identities.
  std::vector<LinearMap> P;
};

/// Recursive construction of the jet-linearization maps up to level L.
/// Throws std::runtime_error if any I[l] fails to have full column rank.
IMapChain build_I_maps(const ProlongationTower& tower, int L);

/// Independent flat-model oracle: basis of the polynomial maps V -> E0 of
/// degree <= degree_bound solving the equation, by elimination on the
/// coefficient ansatz with honest polynomial differentiation.
SubspaceBasis polynomial_solution_space(const SymbolData& sym, int degree_bound);

struct LemmaLevelRow {
  int l = 0;
  long computed = 0;
  long formula = 0;  // (2r-l) C(2n+l, l+1) for l <= 2r-1, then 0
};

struct ProlongationLemmaReport {
  int n = 0, r = 0;
  std::vector<LemmaLevelRow> levels;  // l = 0..2r
  long a_dim = 0;                     // dim A
  Int total;                          // dim A + sum of level dims
  Int binomial_total;                 // C(2n+1+2r, 2n+1)
  bool dims_match = false;
  bool total_matches = false;
};

ProlongationLemmaReport verify_prolongation_lemma(int n, int r);

}  // namespace wolfhp
