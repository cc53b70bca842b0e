#include "wolfhp/rootsystem.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wolfhp {

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vadd(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vsub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vscale(const Rational& s, const Vec& a) {
  Vec r = a;
  for (auto& c : r) c *= s;
  return r;
}

bool vis_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c.is_zero(); });
}

int lex_sign(const Vec& a) {
  for (const auto& c : a)
    if (!c.is_zero()) return c.sign();
  return 0;
}

std::string vec_str(const Vec& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i].str();
  }
  os << ")";
  return os.str();
}

std::string RootSystem::label() const {
  return std::string(1, static_cast<char>(type)) + std::to_string(rank);
}

namespace {

Vec unit(int dim, int i) {
  Vec v(dim, Rational(0));
  v[i] = 1;
  return v;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

void add_pm_pairs(std::vector<Vec>& roots, int dim) {
  // +-e_i +- e_j for i < j
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(dim, Rational(0));
          v[i] = si;
          v[j] = sj;
          roots.push_back(v);
        }
}

std::vector<Vec> roots_A(int l) {
  std::vector<Vec> roots;
  const int d = l + 1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) roots.push_back(vsub(unit(d, i), unit(d, j)));
  return roots;
}

std::vector<Vec> roots_B(int l) {
  std::vector<Vec> roots;
  add_pm_pairs(roots, l);
  for (int i = 0; i < l; ++i) {
    roots.push_back(unit(l, i));
    roots.push_back(vscale(Rational(-1), unit(l, i)));
  }
  return roots;
}

std::vector<Vec> roots_C(int l) {
  std::vector<Vec> roots;
  add_pm_pairs(roots, l);
  for (int i = 0; i < l; ++i) {
    roots.push_back(vscale(Rational(2), unit(l, i)));
    roots.push_back(vscale(Rational(-2), unit(l, i)));
  }
  return roots;
}

std::vector<Vec> roots_D(int l) {
  std::vector<Vec> roots;
  add_pm_pairs(roots, l);
  return roots;
}

std::vector<Vec> roots_G2() {
  // Integer model in the sum-zero plane of R^3: short e_i - e_j, long
  // +-(2e_i - e_j - e_k).
  std::vector<Vec> roots;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) roots.push_back(vsub(unit(3, i), unit(3, j)));
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      Vec v(3, Rational(-s));
      v[i] = 2 * s;
      roots.push_back(v);
    }
  return roots;
}

std::vector<Vec> roots_F4() {
  std::vector<Vec> roots;
  add_pm_pairs(roots, 4);
  for (int i = 0; i < 4; ++i) {
    roots.push_back(unit(4, i));
    roots.push_back(vscale(Rational(-1), unit(4, i)));
  }
  for (int mask = 0; mask < 16; ++mask) {
    Vec v(4);
    for (int i = 0; i < 4; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
    roots.push_back(v);
  }
  return roots;
}

std::vector<Vec> half_integer_E8(int parity) {
  // (1/2)(eps_1,...,eps_8), eps_i = +-1, number of minus signs == parity mod 2.
  std::vector<Vec> out;
  for (int mask = 0; mask < 256; ++mask) {
    int minus = __builtin_popcount(mask);
    if ((minus & 1) != parity) continue;
    Vec v(8);
    for (int i = 0; i < 8; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
    out.push_back(v);
  }
  return out;
}

std::vector<Vec> roots_E8() {
  std::vector<Vec> roots;
  add_pm_pairs(roots, 8);
  for (auto& v : half_integer_E8(0)) roots.push_back(v);
  return roots;
}

std::vector<Vec> roots_E7() {
  // Roots of E8 orthogonal to e_7 + e_8.
  std::vector<Vec> roots;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(8, Rational(0));
          v[i] = si;
          v[j] = sj;
          roots.push_back(v);
        }
  Vec w(8, Rational(0));
  w[6] = 1;
  w[7] = -1;
  roots.push_back(w);
  roots.push_back(vscale(Rational(-1), w));
  for (auto& v : half_integer_E8(0))
    if (v[6] == -v[7]) roots.push_back(v);
  return roots;
}

std::vector<Vec> roots_E6() {
  // Roots of E8 with last three coordinates proportional to (-1,-1,1)/2.
  std::vector<Vec> roots;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(8, Rational(0));
          v[i] = si;
          v[j] = sj;
          roots.push_back(v);
        }
  for (auto& v : half_integer_E8(0))
    if (v[5] == v[6] && v[5] == -v[7]) roots.push_back(v);
  return roots;
}

void check_admissible(SimpleType t, int rank) {
  static const char* kAdmissible =
      "admissible systems: A_l (l>=1), B_l (l>=2), C_l (l>=2), D_l (l>=3), "
      "E6, E7, E8, F4, G2";
  bool ok = false;
  switch (t) {
    case SimpleType::A: ok = rank >= 1; break;
    case SimpleType::B: ok = rank >= 2; break;
    case SimpleType::C: ok = rank >= 2; break;
    case SimpleType::D: ok = rank >= 3; break;
    case SimpleType::E: ok = rank >= 6 && rank <= 8; break;
    case SimpleType::F: ok = rank == 4; break;
    case SimpleType::G: ok = rank == 2; break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "inadmissible root system " << static_cast<char>(t) << rank << "; " << kAdmissible;
    throw std::invalid_argument(os.str());
  }
}

std::vector<Vec> simple_from_positive(const std::vector<Vec>& pos) {
  // A positive root is simple iff it is not a sum of two positive roots.
  std::set<Vec, bool (*)(const Vec&, const Vec&)> pset(lex_less);
  for (const auto& v : pos) pset.insert(v);
  std::vector<Vec> simple;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos) {
      if (decomposable) break;
      const Vec c = vsub(a, b);
      if (!vis_zero(c) && pset.count(c)) decomposable = true;
    }
    if (!decomposable) simple.push_back(a);
  }
  return simple;
}

}  // namespace

RootSystem build_root_system(SimpleType type, int rank) {
  check_admissible(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  switch (type) {
    case SimpleType::A: rs.roots = roots_A(rank); break;
    case SimpleType::B: rs.roots = roots_B(rank); break;
    case SimpleType::C: rs.roots = roots_C(rank); break;
    case SimpleType::D: rs.roots = roots_D(rank); break;
    case SimpleType::E:
      rs.roots = rank == 8 ? roots_E8() : rank == 7 ? roots_E7() : roots_E6();
      break;
    case SimpleType::F: rs.roots = roots_F4(); break;
    case SimpleType::G: rs.roots = roots_G2(); break;
  }
  rs.ambient_dim = static_cast<int>(rs.roots.front().size());
  std::sort(rs.roots.begin(), rs.roots.end(), lex_less);
  for (const auto& v : rs.roots)
    if (lex_sign(v) > 0) rs.positive_roots.push_back(v);
  if (2 * rs.positive_roots.size() != rs.roots.size())
    throw std::logic_error("root system: positivity does not split the roots in half");
  rs.simple_roots = simple_from_positive(rs.positive_roots);
  return rs;
}

RootSystem build_root_system(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("algebra label too short: " + label);
  const char t = static_cast<char>(std::toupper(label[0]));
  if (std::string("ABCDEFG").find(t) == std::string::npos)
    throw std::invalid_argument("unknown algebra type in label: " + label);
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rank in algebra label: " + label);
  }
  return build_root_system(static_cast<SimpleType>(t), rank);
}

Vec half_sum_positive(const RootSystem& rs) {
  Vec rho(rs.ambient_dim, Rational(0));
  for (const auto& v : rs.positive_roots) rho = vadd(rho, v);
  return vscale(Rational(1, 2), rho);
}

Vec highest_root(const RootSystem& rs) {
  return rs.roots.back();  // roots are sorted lexicographically
}

Rational casimir(const Vec& lambda, const RootSystem& rs, Normalization norm) {
  const Vec rho = half_sum_positive(rs);
  const Rational raw = dot(lambda, vadd(lambda, vscale(Rational(2), rho)));
  switch (norm) {
    case Normalization::raw:
      return raw;
    case Normalization::killing: {
      const Vec hi = highest_root(rs);
      const Rational cas_ad = dot(hi, vadd(hi, vscale(Rational(2), rho)));
      return raw / cas_ad;
    }
    case Normalization::wolf_unit: {
      const Vec hi = highest_root(rs);
      return raw / dot(hi, hi);
    }
  }
  throw std::logic_error("casimir: unreachable");
}

Int weyl_dim(const Vec& lambda, const std::vector<Vec>& positive_roots) {
  Vec rho(lambda.size(), Rational(0));
  for (const auto& v : positive_roots) rho = vadd(rho, v);
  rho = vscale(Rational(1, 2), rho);
  const Vec shifted = vadd(lambda, rho);
  Rational prod = 1;
  for (const auto& a : positive_roots) {
    const Rational num = dot(shifted, a);
    if (num.sign() <= 0)
      throw std::invalid_argument("weyl_dim: weight not dominant (non-positive pairing with " +
                                  vec_str(a) + ")");
    prod *= num / dot(rho, a);
  }
  if (!prod.is_integer())
    throw std::logic_error("weyl_dim: non-integral dimension " + prod.str());
  return prod.num();
}

Int weyl_dim(const Vec& lambda, const RootSystem& rs) {
  return weyl_dim(lambda, rs.positive_roots);
}

}  // namespace wolfhp
