#include "wolfhp/symbol.hpp"

#include <stdexcept>

#include "wolfhp/symtensor.hpp"

namespace wolfhp {

SymbolData twistor_symbol(const TwistorSymbolSpec& spec) {
  if (spec.n < 1 || spec.r < 1)
    throw std::invalid_argument("twistor_symbol: need n >= 1 and r >= 1");
  const int en = 2 * spec.n;  // dim E
  SymbolData s;
  s.order_k = 1;
  s.v_dim = 2 * en;
  s.e0_dim = 2 * spec.r + 1;
  const SymTensorSpace h2r(2, 2 * spec.r), h2r1(2, 2 * spec.r + 1);
  s.f_dim = h2r1.size() * en;
  s.component.assign(2, LinearMap());
  s.component[0] = LinearMap(s.f_dim, s.e0_dim);  // zero block
  LinearMap p1(s.f_dim, s.v_dim * s.e0_dim);
  for (int a = 0; a < 2; ++a)
    for (int j = 0; j < en; ++j)
      for (int ie = 0; ie < s.e0_dim; ++ie) {
        // h_a * e^(p,q) = (alpha_a + 1) e^(alpha + delta_a) in divided powers
        std::vector<int> mono = h2r.multi(ie);
        const int coef = mono[static_cast<std::size_t>(a)] + 1;
        ++mono[static_cast<std::size_t>(a)];
        const int row = h2r1.index_of(mono) * en + j;
        const int col = (a * en + j) * s.e0_dim + ie;
        p1.add_entry(row, col, Rational(coef));
      }
  s.component[1] = std::move(p1);
  return s;
}

SymbolData divergence_symbol(int v_dim) {
  if (v_dim < 1) throw std::invalid_argument("divergence_symbol: need v_dim >= 1");
  SymbolData s;
  s.order_k = 1;
  s.v_dim = v_dim;
  s.e0_dim = v_dim;
  s.f_dim = 1;
  s.component.assign(2, LinearMap());
  s.component[0] = LinearMap(1, v_dim);
  LinearMap p1(1, v_dim * v_dim);
  for (int i = 0; i < v_dim; ++i) p1.add_entry(0, i * v_dim + i, Rational(1));
  s.component[1] = std::move(p1);
  return s;
}

}  // namespace wolfhp
