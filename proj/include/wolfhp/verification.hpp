#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wolfhp/hilbert.hpp"
#include "wolfhp/prolongation.hpp"

namespace wolfhp {

/// Everything computed for one twistor prolongation cell, plus summary checks.
struct TwistorCellReport {
  int n = 0, r = 0, cap = 0;
  std::vector<long> level_dims;       // l = 0..computed
  std::vector<long> formula_dims;     // (2r-l) C(2n+l, l+1), then 0
  std::optional<int> termination_degree;
  long a_dim = 0;                     // dim A
  Int total_dim;                      // dim A^{<=d} when terminated
  Int binomial_total;                 // C(2n+1+2r, 2n+1)
  std::vector<long> spencer_kernel_dims;  // index l-1 for l = 1..d
  std::vector<bool> spencer_ok;
  std::vector<bool> psp_ok;           // P^l S^l P^l = P^l on the top block, l = 1..L
  std::vector<long> imap_ranks;       // rank I^{<=l}, l = 0..L
  bool imaps_injective = false;
  bool unitriangular_ok = false;
  std::vector<std::pair<int, long>> solution_dims;  // (degree_bound, dim)
  std::vector<Check> checks;

  bool all_pass() const;
};

/// cap < 0 picks 2r (enough to reach the expected zero level). imap_L < 0
/// skips the jet-map construction; solutions=false skips the flat oracle.
TwistorCellReport twistor_cell(int n, int r, int cap = -1, int imap_L = -1,
                               bool solutions = false);

/// Divergence-equation negative control: expects no termination within cap.
struct InfiniteTypeReport {
  int v_dim = 0, cap = 0;
  std::vector<long> level_dims;
  bool not_terminated = false;
  std::vector<Check> checks;
};

InfiniteTypeReport divergence_cell(int v_dim, int cap);

struct SuiteCell {
  std::string name;
  std::vector<Check> checks;
  bool all_pass() const;
};

/// Replace one level-(-1/2) root by its double: the grading then sees two
/// roots at level -1 and must report the inconsistency. Test fixture only.
RootSystem corrupt_root_table(RootSystem rs);

/// Identity/bound suite over the nine representative Wolf algebras
/// (C3, A3, B3, D4, G2, F4, E6, E7, E8), the isogeny coincidences, the
/// Chern-coefficient grid and the spectral constants. corrupt_label, when
/// non-empty, corrupts that algebra's root table before grading.
std::vector<SuiteCell> hilbert_suite(int r_max, const std::string& corrupt_label = "");

/// Prolongation grid {(1,1),(1,2),(1,3),(2,1),(2,2)} with the jet-map
/// construction and flat solution oracle, plus the divergence control.
std::vector<SuiteCell> prolong_suite();

}  // namespace wolfhp
