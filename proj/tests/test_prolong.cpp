#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wolfhp/prolongation.hpp"
#include "wolfhp/symtensor.hpp"
#include "wolfhp/verification.hpp"

using namespace wolfhp;

TEST_CASE("sparse elimination basics") {
  // [[1,2],[2,4]] has rank 1, kernel (-2,1)
  LinearMap m(2, 2);
  m.add_entry(0, 0, Rational(1));
  m.add_entry(0, 1, Rational(2));
  m.add_entry(1, 0, Rational(2));
  m.add_entry(1, 1, Rational(4));
  CHECK(rank(m) == 1);
  const SubspaceBasis k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.vectors[0] == SparseVec{{0, Rational(-2)}, {1, Rational(1)}});
  // rank-nullity on a few random-ish small maps
  LinearMap a(3, 4);
  a.add_entry(0, 0, Rational(1));
  a.add_entry(0, 3, Rational(5, 2));
  a.add_entry(1, 1, Rational(-3));
  a.add_entry(2, 0, Rational(7));
  a.add_entry(2, 3, Rational(1, 3));
  CHECK(rank(a) + kernel(a).dim() == a.cols());
  // partial inverse: M S M = M
  for (const LinearMap* t : {&m, &a}) {
    const LinearMap s = partial_inverse(*t);
    CHECK(mul(*t, mul(s, *t)) == *t);
  }
  const LinearMap id = LinearMap::identity(4);
  CHECK(mul(partial_inverse(id), id) == id);
}

TEST_CASE("kernel of mapped subspace composes with inclusion") {
  // apply/apply_sparse agree
  LinearMap a(2, 3);
  a.add_entry(0, 0, Rational(1));
  a.add_entry(0, 2, Rational(2));
  a.add_entry(1, 1, Rational(4));
  const std::vector<Rational> x = {Rational(1), Rational(1, 2), Rational(-1)};
  const auto y = a.apply(x);
  CHECK(y[0] == Rational(-1));
  CHECK(y[1] == Rational(2));
  const SparseVec xs = {{0, Rational(1)}, {1, Rational(1, 2)}, {2, Rational(-1)}};
  CHECK(a.apply_sparse(xs) == SparseVec{{0, Rational(-1)}, {1, Rational(2)}});
}

TEST_CASE("sym tensor spaces") {
  const SymTensorSpace s(2, 3);
  REQUIRE(s.size() == 4);
  CHECK(s.multi(0) == std::vector<int>{3, 0});
  CHECK(s.multi(3) == std::vector<int>{0, 3});
  CHECK(sym_dim(8, 5) == 792);
  CHECK(sym_dim(4, 0) == 1);
}

TEST_CASE("comultiplication") {
  // single variable: Delta e^(2) = e^(1) (x) e^(1)
  const LinearMap d1 = comultiplication(1, 1, 1);
  CHECK(d1.rows() == 1);
  CHECK(d1.cols() == 1);
  CHECK(d1.entry(0, 0) == Rational(1));

  // d = 2, split (1,1) of degree 2: 3 domain columns into a 4-dim target
  const LinearMap d2 = comultiplication(2, 1, 1);
  CHECK(d2.cols() == 3);
  CHECK(d2.rows() == 4);
  // e^(1,1) -> e_0 (x) e_1 + e_1 (x) e_0
  CHECK(d2.entry(1, 1) == Rational(1));
  CHECK(d2.entry(2, 1) == Rational(1));
  CHECK(d2.entry(0, 1) == Rational(0));

  // k = 0 splits off the unit: the copy map
  const LinearMap d0 = comultiplication(3, 0, 2);
  CHECK(d0.rows() == d0.cols());
  CHECK(d0 == LinearMap::identity(d0.cols()));
}

TEST_CASE("coassociativity and iota compatibility") {
  for (int d = 1; d <= 3; ++d)
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l)
        for (int m = 0; m <= 2; ++m) {
          const int sk = static_cast<int>(sym_dim(d, k));
          const int sm = static_cast<int>(sym_dim(d, m));
          const LinearMap lhs =
              mul(kron(comultiplication(d, k, l), LinearMap::identity(sm)),
                  comultiplication(d, k + l, m));
          const LinearMap rhs =
              mul(kron(LinearMap::identity(sk), comultiplication(d, l, m)),
                  comultiplication(d, k, l + m));
          CHECK(lhs == rhs);
        }
  for (int d = 1; d <= 3; ++d)
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; k + l <= 4 && l <= 2; ++l)
        CHECK(mul(kron(iota(d, k), iota(d, l)), comultiplication(d, k, l)) == iota(d, k + l));
}

TEST_CASE("twistor symbol shape") {
  const SymbolData s = twistor_symbol({1, 1});
  CHECK(s.v_dim == 4);
  CHECK(s.e0_dim == 3);
  CHECK(s.f_dim == 8);
  CHECK(s.component[1].rows() == 8);
  CHECK(s.component[1].cols() == 12);
  CHECK(rank(s.component[1]) == 8);
  CHECK(kernel(s.component[1]).dim() == 4);
  CHECK(s.component[0].is_zero());

  // (h_0 (x) e_j) (x) h_0^(2r) always maps to a nonzero multiple of
  // h_0^(2r+1) (x) e_j
  const SymbolData t = twistor_symbol({2, 2});
  for (int j = 0; j < 4; ++j) {
    const int col = (0 * 4 + j) * 5 + 0;  // a = 0, e0 index 0 = (2r, 0)
    bool nonzero = false;
    for (int i = 0; i < t.f_dim && !nonzero; ++i)
      nonzero = !t.component[1].entry(i, col).is_zero();
    CHECK(nonzero);
  }
  CHECK(kernel(t.component[1]).dim() == 16);  // Sym^3 H (x) E

  // pure function of the spec
  const SymbolData again = twistor_symbol({2, 2});
  CHECK(again.component[1] == t.component[1]);
  CHECK_THROWS_AS(twistor_symbol({0, 1}), std::invalid_argument);
}

TEST_CASE("prolongation levels for the smallest twistor cell") {
  const SymbolData s = twistor_symbol({1, 1});
  CHECK(prolong_level(s, 0).dim() == 4);
  CHECK(prolong_level(s, 1).dim() == 3);
  CHECK(prolong_level(s, 2).dim() == 0);

  const ProlongationTower t = prolongation_tower(s, 4);
  REQUIRE(t.terminated());
  CHECK(*t.termination_degree == 1);
  CHECK(t.total_kernel.dim() == 7);  // Sym^2 H + ker sigma
  CHECK(t.total_dim_upto(1) == 10);
  CHECK(t.level_dim(3) == 0);
}

TEST_CASE("tower respects the cap") {
  const SymbolData s = twistor_symbol({1, 1});
  const ProlongationTower t = prolongation_tower(s, 1);
  CHECK_FALSE(t.terminated());
  CHECK(t.levels.size() == 2);
}

TEST_CASE("spencer exactness on small cells") {
  {
    const ProlongationTower t = prolongation_tower(twistor_symbol({1, 1}), 2);
    long kd = -1;
    CHECK(spencer_exactness(t, 1, &kd));
    CHECK(kd == 0);
  }
  {
    const ProlongationTower t = prolongation_tower(twistor_symbol({2, 1}), 2);
    long kd = -1;
    CHECK(spencer_exactness(t, 1, &kd));
    CHECK(kd == 0);
  }
  {
    const ProlongationTower t = prolongation_tower(twistor_symbol({1, 2}), 4);
    long kd = -1;
    CHECK(spencer_exactness(t, 1, &kd));
    CHECK(kd == 8);  // Sym^1 H (x) Sym^3 E
  }
}

TEST_CASE("P^l blocks") {
  const SymbolData s = twistor_symbol({1, 1});
  // l = 0 is P itself on Sym^{<=1}
  const LinearMap p0 = build_P_l(s, 0);
  CHECK(p0.rows() == s.f_dim);
  CHECK(p0.cols() == 3 + 12);
  for (int i = 0; i < s.component[1].rows(); ++i)
    for (const auto& [j, v] : s.component[1].row(i)) CHECK(p0.entry(i, 3 + j) == v);
  // restriction of P^1 to the top block has kernel A^(1)
  const LinearMap m1 = prolong_matrix(s, 1);
  CHECK(kernel(m1).dim() == 3);
  // blocks on degrees below l vanish
  const LinearMap p2 = build_P_l(s, 2);
  const long off_deg1 = graded_offset(s.v_dim, s.e0_dim, 1);
  for (int i = 0; i < p2.rows(); ++i)
    for (int j = 0; j < off_deg1; ++j) CHECK(p2.entry(i, j).is_zero());
}

TEST_CASE("I maps for the smallest twistor cell") {
  const ProlongationTower t = prolongation_tower(twistor_symbol({1, 1}), 4);
  const IMapChain chain = build_I_maps(t, 3);
  REQUIRE(chain.I.size() == 4);
  CHECK(chain.I[0].cols() == 7);
  CHECK(rank(chain.I[0]) == 7);
  CHECK(chain.I[3].cols() == 10);
  CHECK(rank(chain.I[3]) == 10);
  for (int l = 1; l <= 3; ++l) {
    const LinearMap ml = prolong_matrix(t.symbol, l);
    CHECK(mul(ml, mul(chain.S[static_cast<std::size_t>(l)], ml)) == ml);
  }
}

TEST_CASE("polynomial solution oracle") {
  const SymbolData s = twistor_symbol({1, 1});
  CHECK(polynomial_solution_space(s, 0).dim() == 3);  // constants: all of E0
  CHECK(polynomial_solution_space(s, 2).dim() == 10);
  CHECK(polynomial_solution_space(s, 3).dim() == 10);  // stationary
  CHECK(polynomial_solution_space(twistor_symbol({1, 2}), 5).dim() == 35);  // C(7,3)
}

TEST_CASE("prolongation lemma report") {
  const ProlongationLemmaReport r11 = verify_prolongation_lemma(1, 1);
  CHECK(r11.dims_match);
  CHECK(r11.total_matches);
  CHECK(r11.total == 10);

  const ProlongationLemmaReport r21 = verify_prolongation_lemma(2, 1);
  CHECK(r21.dims_match);
  CHECK(r21.a_dim == 11);
  CHECK(r21.total == 21);

  const ProlongationLemmaReport r13 = verify_prolongation_lemma(1, 3);
  CHECK(r13.dims_match);
  CHECK(r13.total_matches);
  CHECK(r13.total == binomial(Int(9), 3u));
}

TEST_CASE("divergence equation is infinite type") {
  const InfiniteTypeReport rep = divergence_cell(3, 5);
  CHECK(rep.not_terminated);
  for (long d : rep.level_dims) CHECK(d > 0);
  CHECK(rep.level_dims.size() == 6);
}

TEST_CASE("twistor cell (2,2) level dims") {
  const TwistorCellReport rep = twistor_cell(2, 2);
  CHECK(rep.level_dims == std::vector<long>{16, 30, 40, 35, 0});
  REQUIRE(rep.termination_degree.has_value());
  CHECK(*rep.termination_degree == 3);
  CHECK(rep.total_dim == 126);
  CHECK(rep.binomial_total == 126);
}
