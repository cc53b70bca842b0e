#pragma once

#include <map>
#include <vector>

#include "wolfhp/linmap.hpp"

namespace wolfhp {

/// Divided-power basis e^(alpha) of Sym^m of a d-dimensional space, with
/// multi-indices |alpha| = m listed in lexicographically descending order
/// ((m,0,..), (m-1,1,0,..), ...). The order is fixed forever; serialized
/// bases depend on it, dimensions do not.
class SymTensorSpace {
 public:
  SymTensorSpace(int base_dim, int degree);

  int base_dim() const { return d_; }
  int degree() const { return m_; }
  int size() const { return static_cast<int>(multi_.size()); }
  const std::vector<int>& multi(int i) const { return multi_[static_cast<std::size_t>(i)]; }
  int index_of(const std::vector<int>& alpha) const;

 private:
  int d_, m_;
  std::vector<std::vector<int>> multi_;
  std::map<std::vector<int>, int> index_;
};

/// dim Sym^m = C(d+m-1, m)
long sym_dim(int d, int m);

/// Diagonal map Sym^{k+l} -> Sym^k (x) Sym^l. In divided powers every entry
/// is 0 or 1: e^(alpha) maps to the sum of e^(beta) (x) e^(gamma) over all
/// splittings beta + gamma = alpha. Row index is beta_idx * dim_l + gamma_idx.
LinearMap comultiplication(int d, int k, int l);

/// Embedding Sym^k -> (tensor)^k sending e^(alpha) to the sum of all words
/// with content alpha. Rows are base-d words of length k.
LinearMap iota(int d, int k);

}  // namespace wolfhp
