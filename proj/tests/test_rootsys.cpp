#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wolfhp/rootsystem.hpp"
#include "wolfhp/wolf_grading.hpp"

using namespace wolfhp;

namespace {

// Oracle: generate the root system by closing the simple roots under the
// reflections s_a(x) = x - 2<x,a>/<a,a> a, independent of the table models.
std::set<std::vector<std::string>> reflection_closure(const std::vector<Vec>& simple) {
  auto key = [](const Vec& v) {
    std::vector<std::string> k;
    for (const auto& c : v) k.push_back(c.str());
    return k;
  };
  std::vector<Vec> frontier = simple;
  std::set<std::vector<std::string>> seen;
  for (const auto& v : simple) seen.insert(key(v));
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& x : frontier)
      for (const auto& a : simple) {
        const Rational c = Rational(2) * dot(x, a) / dot(a, a);
        const Vec y = vsub(x, vscale(c, a));
        if (seen.insert(key(y)).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

struct Expected {
  const char* label;
  std::size_t root_count;
  int n;  // quaternionic dimension
};

}  // namespace

TEST_CASE("admissibility") {
  CHECK_THROWS_AS(build_root_system(SimpleType::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(SimpleType::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(SimpleType::G, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(SimpleType::F, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(SimpleType::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system("Z9"), std::invalid_argument);
  CHECK_NOTHROW(build_root_system("A1"));
}

TEST_CASE("A1 is the rank-one system") {
  const RootSystem rs = build_root_system(SimpleType::A, 1);
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.positive_roots.size() == 1);
  CHECK(rs.positive_roots[0] == Vec{Rational(1), Rational(-1)});
  CHECK(half_sum_positive(rs) == Vec{Rational(1, 2), Rational(-1, 2)});
}

TEST_CASE("root counts and reflection-closure oracle") {
  const std::vector<Expected> table = {
      {"A1", 2, 0},   {"A3", 12, 2},  {"B2", 8, 1},   {"B3", 18, 3},  {"C2", 8, 1},
      {"C3", 18, 2},  {"D3", 12, 2},  {"D4", 24, 4},  {"G2", 12, 2},  {"F4", 48, 7},
      {"E6", 72, 10}, {"E7", 126, 16}, {"E8", 240, 28},
  };
  for (const auto& e : table) {
    CAPTURE(e.label);
    const RootSystem rs = build_root_system(e.label);
    CHECK(rs.roots.size() == e.root_count);
    CHECK(rs.positive_roots.size() == e.root_count / 2);
    const auto closure = reflection_closure(rs.simple_roots);
    CHECK(closure.size() == e.root_count);
    // closure under negation
    std::set<std::vector<std::string>> all;
    for (const auto& v : rs.roots) {
      std::vector<std::string> k;
      for (const auto& c : v) k.push_back(c.str());
      all.insert(k);
    }
    CHECK(all.size() == e.root_count);
    CHECK(closure == all);
    CHECK(rs.simple_roots.size() == static_cast<std::size_t>(rs.rank));
  }
}

TEST_CASE("exceptional dimensions") {
  CHECK(build_root_system("G2").dim_g() == 14);
  CHECK(build_root_system("F4").dim_g() == 52);
  CHECK(build_root_system("E6").dim_g() == 78);
  CHECK(build_root_system("E7").dim_g() == 133);
  CHECK(build_root_system("E8").dim_g() == 248);
}

TEST_CASE("wolf grading partitions and counts") {
  const std::vector<Expected> table = {
      {"A1", 2, 0},  {"A3", 12, 2},  {"B3", 18, 3},  {"C3", 18, 2},   {"D4", 24, 4},
      {"G2", 12, 2}, {"F4", 48, 7},  {"E6", 72, 10}, {"E7", 126, 16}, {"E8", 240, 28},
  };
  for (const auto& e : table) {
    CAPTURE(e.label);
    const RootSystem rs = build_root_system(e.label);
    const WolfGrading g = wolf_grading(rs);
    CHECK(g.quaternionic_dim == e.n);
    std::size_t total = 0;
    for (const auto& lev : g.levels) total += lev.size();
    CHECK(total == rs.roots.size());
    CHECK(g.levels[4].size() == 1);
    CHECK(g.levels[0].size() == 1);
    CHECK(g.level(1).size() == static_cast<std::size_t>(2 * e.n));
    // rho decomposition and the projected level sum
    CHECK(dot(g.rho_k0, g.wolf_root).is_zero());
    CHECK(Rational(2) * dot(g.rho, g.wolf_root) / g.wolf_norm_raw == Rational(e.n + 1));
    Vec s(static_cast<std::size_t>(rs.ambient_dim), Rational(0));
    for (const auto& mu : g.level(1)) s = vadd(s, mu);
    CHECK(s == vscale(Rational(e.n), g.wolf_root));
    // rho_k0 is the half sum of the positive level-0 roots
    Vec half0(static_cast<std::size_t>(rs.ambient_dim), Rational(0));
    for (const auto& mu : g.positive_roots)
      if (dot(g.wolf_root, mu).is_zero()) half0 = vadd(half0, mu);
    CHECK(vscale(Rational(1, 2), half0) == g.rho_k0);
    // killing-normalized length of the wolf root
    CHECK(dot(g.wolf_root, g.wolf_root) / g.casimir_ad_raw == Rational(1, e.n + 2));
  }
}

TEST_CASE("specific level-zero counts") {
  CHECK(wolf_grading(build_root_system("E8")).level(0).size() == 126);
  CHECK(wolf_grading(build_root_system("F4")).level(0).size() == 18);
  CHECK(wolf_grading(build_root_system("E8")).level(1).size() == 56);
}

TEST_CASE("casimir normalizations") {
  const RootSystem g2 = build_root_system("G2");
  const Vec hi = highest_root(g2);
  CHECK(casimir(hi, g2, Normalization::killing) == Rational(1));
  // <wolf,wolf> in killing normalization = 1/(n+2), n = 2
  const WolfGrading g = wolf_grading(g2);
  CHECK(g.wolf_norm_raw / g.casimir_ad_raw == Rational(1, 4));
  // F4, r = 3: r(n+1+r)/(n+2) with n = 7
  const RootSystem f4 = build_root_system("F4");
  CHECK(casimir(vscale(Rational(3), highest_root(f4)), f4, Normalization::killing) ==
        Rational(11, 3));
  CHECK(casimir(hi, g2, Normalization::raw) == dot(hi, vadd(hi, vscale(Rational(2), half_sum_positive(g2)))));
  CHECK(casimir(hi, g2, Normalization::wolf_unit) ==
        casimir(hi, g2, Normalization::raw) / dot(hi, hi));
}

TEST_CASE("weyl dimension formula") {
  const RootSystem g2 = build_root_system("G2");
  const Vec hi = highest_root(g2);
  CHECK(weyl_dim(Vec(3, Rational(0)), g2) == 1);
  CHECK(weyl_dim(hi, g2) == 14);
  CHECK(weyl_dim(vscale(Rational(2), hi), g2) == 77);
  CHECK_THROWS_AS(weyl_dim(vscale(Rational(-1), hi), g2), std::invalid_argument);

  // E7: 2<rho, wolf>/<wolf,wolf> = n + 1 = 17
  const WolfGrading e7 = wolf_grading(build_root_system("E7"));
  CHECK(Rational(2) * dot(e7.rho, e7.wolf_root) / e7.wolf_norm_raw == Rational(17));

  // factors over the level-0 positive roots are all 1 for lambda = r*wolf
  const WolfGrading g = wolf_grading(g2);
  for (const auto& a : g.positive_roots)
    if (dot(g.wolf_root, a).is_zero())
      CHECK(dot(vadd(vscale(Rational(5), g.wolf_root), g.rho), a) == dot(g.rho, a));
}

TEST_CASE("corrupted root table is rejected by the grading") {
  RootSystem b3 = build_root_system("B3");
  const Vec hi = highest_root(b3);
  const Rational norm = dot(hi, hi);
  for (auto& mu : b3.roots)
    if (dot(hi, mu) * Rational(2) == -norm) {
      mu = vscale(Rational(2), mu);
      break;
    }
  CHECK_THROWS_AS(wolf_grading(b3), std::runtime_error);
}
