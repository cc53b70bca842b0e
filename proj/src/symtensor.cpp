#include "wolfhp/symtensor.hpp"

#include <stdexcept>

namespace wolfhp {

namespace {

void enumerate(int d, int m, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d - 1) {
    cur.push_back(m);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = m; e >= 0; --e) {
    cur.push_back(e);
    enumerate(d, m - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SymTensorSpace::SymTensorSpace(int base_dim, int degree) : d_(base_dim), m_(degree) {
  if (d_ < 1 || m_ < 0) throw std::invalid_argument("SymTensorSpace: need d >= 1, m >= 0");
  std::vector<int> cur;
  enumerate(d_, m_, cur, multi_);
  for (int i = 0; i < size(); ++i) index_[multi_[static_cast<std::size_t>(i)]] = i;
}

int SymTensorSpace::index_of(const std::vector<int>& alpha) const {
  auto it = index_.find(alpha);
  if (it == index_.end()) throw std::invalid_argument("SymTensorSpace: unknown multi-index");
  return it->second;
}

long sym_dim(int d, int m) {
  return binomial(Int(d + m - 1), static_cast<unsigned>(m)).get_si();
}

namespace {

void split_rec(const std::vector<int>& alpha, int pos, int rem_k, std::vector<int>& beta,
               const SymTensorSpace& sk, const SymTensorSpace& sl, int col, LinearMap& m) {
  if (pos == static_cast<int>(alpha.size())) {
    if (rem_k != 0) return;
    std::vector<int> gamma(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) gamma[i] = alpha[i] - beta[i];
    m.add_entry(sk.index_of(beta) * sl.size() + sl.index_of(gamma), col, Rational(1));
    return;
  }
  const int top = std::min(alpha[static_cast<std::size_t>(pos)], rem_k);
  for (int e = 0; e <= top; ++e) {
    beta[static_cast<std::size_t>(pos)] = e;
    split_rec(alpha, pos + 1, rem_k - e, beta, sk, sl, col, m);
  }
  beta[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

LinearMap comultiplication(int d, int k, int l) {
  const SymTensorSpace skl(d, k + l), sk(d, k), sl(d, l);
  LinearMap m(sk.size() * sl.size(), skl.size());
  for (int col = 0; col < skl.size(); ++col) {
    std::vector<int> beta(static_cast<std::size_t>(d), 0);
    split_rec(skl.multi(col), 0, k, beta, sk, sl, col, m);
  }
  return m;
}

LinearMap iota(int d, int k) {
  const SymTensorSpace s(d, k);
  long words = 1;
  for (int i = 0; i < k; ++i) words *= d;
  LinearMap m(static_cast<int>(words), s.size());
  for (long w = 0; w < words; ++w) {
    std::vector<int> content(static_cast<std::size_t>(d), 0);
    long t = w;
    for (int i = 0; i < k; ++i) {
      ++content[static_cast<std::size_t>(t % d)];
      t /= d;
    }
    m.add_entry(static_cast<int>(w), s.index_of(content), Rational(1));
  }
  return m;
}

}  // namespace wolfhp
