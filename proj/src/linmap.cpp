#include "wolfhp/linmap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wolfhp {

SparseVec sparse_axpy(const SparseVec& a, const Rational& s, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      Rational v = s * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Rational v = a[i].second + s * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& a, const Rational& s) {
  if (s.is_zero()) return {};
  SparseVec out = a;
  for (auto& e : out) e.second *= s;
  return out;
}

LinearMap LinearMap::identity(int n) {
  LinearMap m(n, n);
  for (int i = 0; i < n; ++i) m.add_entry(i, i, Rational(1));
  return m;
}

long LinearMap::nnz() const {
  long c = 0;
  for (const auto& r : row_) c += static_cast<long>(r.size());
  return c;
}

void LinearMap::add_entry(int i, int j, const Rational& v) {
  if (v.is_zero()) return;
  auto& r = row_[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, {j, v});
  }
}

Rational LinearMap::entry(int i, int j) const {
  const auto& r = row_[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& e, int col) { return e.first < col; });
  return (it != r.end() && it->first == j) ? it->second : Rational(0);
}

std::vector<Rational> LinearMap::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  std::vector<Rational> y(static_cast<std::size_t>(rows_), Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : row_[static_cast<std::size_t>(i)])
      y[static_cast<std::size_t>(i)] += v * x[static_cast<std::size_t>(j)];
  return y;
}

SparseVec LinearMap::apply_sparse(const SparseVec& x) const {
  // Column access is what we need here; go through a map keyed by row.
  std::map<int, Rational> acc;
  for (int i = 0; i < rows_; ++i) {
    const auto& r = row_[static_cast<std::size_t>(i)];
    if (r.empty()) continue;
    Rational s = 0;
    std::size_t a = 0, b = 0;
    bool any = false;
    while (a < r.size() && b < x.size()) {
      if (r[a].first < x[b].first) ++a;
      else if (x[b].first < r[a].first) ++b;
      else { s += r[a].second * x[b].second; any = true; ++a; ++b; }
    }
    if (any && !s.is_zero()) acc[i] = s;
  }
  SparseVec out(acc.begin(), acc.end());
  return out;
}

LinearMap mul(const LinearMap& a, const LinearMap& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("mul: dimension mismatch");
  LinearMap c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    SparseVec acc;
    for (const auto& [k, v] : a.row_[static_cast<std::size_t>(i)])
      acc = sparse_axpy(acc, v, b.row_[static_cast<std::size_t>(k)]);
    c.row_[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return c;
}

LinearMap kron(const LinearMap& a, const LinearMap& b) {
  LinearMap c(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int ia = 0; ia < a.rows_; ++ia)
    for (const auto& [ja, va] : a.row_[static_cast<std::size_t>(ia)])
      for (int ib = 0; ib < b.rows_; ++ib) {
        const auto& rb = b.row_[static_cast<std::size_t>(ib)];
        if (rb.empty()) continue;
        auto& out = c.row_[static_cast<std::size_t>(ia * b.rows_ + ib)];
        for (const auto& [jb, vb] : rb) out.emplace_back(ja * b.cols_ + jb, va * vb);
      }
  // Rows were appended per (ja) block; restore sorted order.
  for (auto& r : c.row_) std::sort(r.begin(), r.end(),
                                   [](const auto& x, const auto& y) { return x.first < y.first; });
  return c;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("operator-: dimension mismatch");
  LinearMap c(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    c.row_[static_cast<std::size_t>(i)] =
        sparse_axpy(a.row_[static_cast<std::size_t>(i)], Rational(-1),
                    b.row_[static_cast<std::size_t>(i)]);
  return c;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_;
}

bool LinearMap::is_zero() const {
  for (const auto& r : row_)
    if (!r.empty()) return false;
  return true;
}

LinearMap SubspaceBasis::inclusion() const {
  LinearMap m(ambient, dim());
  for (int j = 0; j < dim(); ++j)
    for (const auto& [i, v] : vectors[static_cast<std::size_t>(j)]) m.add_entry(i, j, v);
  return m;
}

Echelon row_echelon(const LinearMap& m, bool with_transform) {
  // pivot column -> slot in pivots; processed in row order so that each
  // column's pivot is the first row that leads there.
  std::map<int, std::size_t> by_col;
  std::vector<SparseVec> prows, phist;
  for (int i = 0; i < m.rows(); ++i) {
    SparseVec r = m.row(i);
    SparseVec h;
    if (with_transform) h.emplace_back(i, Rational(1));
    while (!r.empty()) {
      auto it = by_col.find(r.front().first);
      if (it == by_col.end()) break;
      const Rational f = -r.front().second;
      r = sparse_axpy(r, f, prows[it->second]);
      if (with_transform) h = sparse_axpy(h, f, phist[it->second]);
    }
    if (r.empty()) continue;
    const Rational lead = r.front().second;
    r = sparse_scale(r, lead.inverse());
    if (with_transform) h = sparse_scale(h, lead.inverse());
    by_col[r.front().first] = prows.size();
    prows.push_back(std::move(r));
    phist.push_back(std::move(h));
  }
  // Back-substitute to reduced form: canonical result, deterministic bases.
  std::vector<std::pair<int, std::size_t>> order(by_col.begin(), by_col.end());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto [col, slot] = *it;
    for (auto& [ocol, oslot] : order) {
      if (oslot == slot) continue;
      auto& r = prows[oslot];
      auto pos = std::lower_bound(r.begin(), r.end(), col,
                                  [](const auto& e, int c) { return e.first < c; });
      if (pos == r.end() || pos->first != col) continue;
      const Rational f = -pos->second;
      r = sparse_axpy(r, f, prows[slot]);
      if (with_transform) phist[oslot] = sparse_axpy(phist[oslot], f, phist[slot]);
    }
  }
  Echelon e;
  e.rank = static_cast<int>(order.size());
  for (const auto& [col, slot] : order) {
    e.pivot_cols.push_back(col);
    e.pivot_rows.push_back(prows[slot]);
    if (with_transform) e.pivot_hist.push_back(phist[slot]);
  }
  return e;
}

int rank(const LinearMap& m) { return row_echelon(m).rank; }

SubspaceBasis kernel(const LinearMap& m) {
  const Echelon e = row_echelon(m);
  SubspaceBasis ker;
  ker.ambient = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::map<int, Rational> entries;
    entries[f] = Rational(1);
    for (std::size_t t = 0; t < e.pivot_rows.size(); ++t) {
      const auto& r = e.pivot_rows[t];
      auto pos = std::lower_bound(r.begin(), r.end(), f,
                                  [](const auto& en, int c) { return en.first < c; });
      if (pos != r.end() && pos->first == f)
        entries[e.pivot_cols[t]] = -pos->second;
    }
    SparseVec v(entries.begin(), entries.end());
    ker.vectors.push_back(std::move(v));
  }
  return ker;
}

LinearMap partial_inverse(const LinearMap& m) {
  const Echelon e = row_echelon(m, /*with_transform=*/true);
  // S = X * T with T the pivot rows of the transform (so T*M = pivot rows of
  // the RREF) and X sending coordinate t to the pivot column e_{j_t}. Then
  // M*S*M = M because RREF column relations mirror those of M.
  LinearMap s(m.cols(), m.rows());
  for (std::size_t t = 0; t < e.pivot_hist.size(); ++t)
    s.set_row(e.pivot_cols[t], e.pivot_hist[t]);
  return s;
}

}  // namespace wolfhp
