#pragma once

#include <array>
#include <vector>

#include "wolfhp/rootsystem.hpp"

namespace wolfhp {

/// Five-grading of a simple root system by its highest root: every root mu
/// sits at level <wolf_root, mu>/<wolf_root, wolf_root> in {-1,-1/2,0,1/2,1}.
/// Positivity is re-derived from the perturbed functional wolf_root + eps*v0
/// so that the level-1 and level-1/2 roots are positive by construction.
struct WolfGrading {
  Vec wolf_root;
  /// Index 0..4 holds levels -1, -1/2, 0, 1/2, 1.
  std::array<std::vector<Vec>, 5> levels;
  int quaternionic_dim = 0;  // n = |Delta_{1/2}| / 2
  Vec rho;                   // half sum of the perturbed positive roots
  Vec rho_k0;                // rho - (n+1)/2 * wolf_root, orthogonal to wolf_root
  std::vector<Vec> positive_roots;  // perturbed order
  Rational wolf_norm_raw;           // <wolf_root, wolf_root>, coordinate dot
  Rational casimir_ad_raw;          // <wolf_root, wolf_root + 2 rho>
  bool degenerate = false;          // n == 0 (A1); geometry assumes n >= 1

  const std::vector<Vec>& level(int twice_h) const { return levels[twice_h + 2]; }
};

/// Throws std::runtime_error on any internal inconsistency (a level outside
/// the five admissible values, |Delta_1| != 1, odd |Delta_{1/2}|, or a
/// non-vanishing projected level-1/2 sum): all signal a wrong root model.
WolfGrading wolf_grading(const RootSystem& rs);

}  // namespace wolfhp
