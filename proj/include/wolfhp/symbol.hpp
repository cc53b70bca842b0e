#pragma once

#include <vector>

#include "wolfhp/linmap.hpp"

namespace wolfhp {

/// Constant-coefficient order-k operator datum: for each degree j <= k a
/// map Sym^j V (x) E0 -> F. component[k] is the principal part.
struct SymbolData {
  int order_k = 1;
  int v_dim = 0, e0_dim = 0, f_dim = 0;
  std::vector<LinearMap> component;  // size order_k + 1
};

struct TwistorSymbolSpec {
  int n = 1;  // quaternionic dimension, >= 1
  int r = 1;  // twist parameter, >= 1
};

/// First-order symbol of the raising twistor operator on Sym^{2r}H over a
/// 4n-dimensional base: V = H (x) E (dim 4n), E0 = Sym^{2r}H (dim 2r+1),
/// F = Sym^{2r+1}H (x) E, sigma((h (x) e) (x) psi) = (h psi) (x) e.
/// The degree-0 component is zero. V basis order: a * 2n + j for h_a (x) e_j;
/// F basis order: mono * 2n + j.
SymbolData twistor_symbol(const TwistorSymbolSpec& spec);

/// Single-equation divergence symbol on a v_dim-dimensional space:
/// E0 = V, F = scalars, sigma(xi (x) e) = <xi, e>. Infinite type for
/// v_dim >= 2; used as the negative control.
SymbolData divergence_symbol(int v_dim);

}  // namespace wolfhp
