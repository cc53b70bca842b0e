#pragma once

#include <string>
#include <vector>

#include "wolfhp/rational.hpp"

namespace wolfhp {

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b);
Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Rational& s, const Vec& a);
bool vis_zero(const Vec& a);
/// Sign of the first nonzero coordinate (0 for the zero vector).
int lex_sign(const Vec& a);
std::string vec_str(const Vec& a);

enum class SimpleType : char {
  A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

/// Roots of a simple Lie algebra in the classical orthonormal coordinate
/// models (A_l in R^{l+1}, B/C/D_l in R^l, G2 in R^3, F4 in R^4, E6/E7/E8
/// inside R^8). All coordinates rational; positivity is lexicographic.
struct RootSystem {
  SimpleType type;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<Vec> roots;
  std::vector<Vec> positive_roots;
  std::vector<Vec> simple_roots;

  std::string label() const;
  long dim_g() const { return static_cast<long>(roots.size()) + rank; }
};

/// Admissible: A_l (l>=1), B_l (l>=2), C_l (l>=2), D_l (l>=3), E6/E7/E8,
/// F4, G2. Anything else throws std::invalid_argument naming that set.
RootSystem build_root_system(SimpleType type, int rank);
RootSystem build_root_system(const std::string& label);

/// rho = half the sum of the stored positive roots.
Vec half_sum_positive(const RootSystem& rs);

/// The unique lexicographically maximal root.
Vec highest_root(const RootSystem& rs);

enum class Normalization { killing, wolf_unit, raw };

/// <lambda, lambda + 2 rho> under the requested rescaling of the inner
/// product: killing makes the adjoint Casimir 1, wolf_unit makes the
/// highest root have unit norm, raw uses the coordinate dot product.
Rational casimir(const Vec& lambda, const RootSystem& rs, Normalization norm);

/// prod_{a in positive} <lambda+rho, a> / <rho, a>. Exact and integral.
/// Rejects lambda with any non-positive shifted pairing.
Int weyl_dim(const Vec& lambda, const std::vector<Vec>& positive_roots);
Int weyl_dim(const Vec& lambda, const RootSystem& rs);

}  // namespace wolfhp
