#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/exact_algebra.hpp"

namespace netlog {

// Sparse row: (column, value) pairs with strictly increasing columns.
template <class K>
using SparseRow = std::vector<std::pair<int, K>>;

// Incremental row echelon form over a field.
template <class K>
class SparseEchelon {
 public:
  // Reduce `row` against the stored pivots; returns the remainder.
  SparseRow<K> reduce(SparseRow<K> row) const {
    std::size_t i = 0;
    while (i < row.size()) {
      auto it = pivots_.find(row[i].first);
      if (it == pivots_.end()) {
        ++i;
        continue;
      }
      K c = row[i].second;
      row = axpy(row, it->second, c, i);
    }
    return row;
  }

  // Insert a row; returns true if it increased the rank.
  bool insert(SparseRow<K> row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    K inv = row.front().second.inverse();
    for (auto& e : row) e.second *= inv;
    int col = row.front().first;
    pivots_.emplace(col, std::move(row));
    return true;
  }

  bool in_span(const SparseRow<K>& row) const { return reduce(row).empty(); }
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  // row - c * piv, where row[start] and piv[0] share the pivot column.
  static SparseRow<K> axpy(const SparseRow<K>& row, const SparseRow<K>& piv, const K& c, std::size_t start) {
    SparseRow<K> out;
    out.reserve(row.size() + piv.size());
    for (std::size_t k = 0; k < start; ++k) out.push_back(row[k]);
    std::size_t i = start, j = 0;
    while (i < row.size() || j < piv.size()) {
      if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || piv[j].first < row[i].first) {
        out.push_back({piv[j].first, -(piv[j].second * c)});
        ++j;
      } else {
        K v = row[i].second - piv[j].second * c;
        if (!v.is_zero()) out.push_back({row[i].first, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::unordered_map<int, SparseRow<K>> pivots_;
};

// Small dense matrices for eigen-data, solving and characteristic polynomials.
template <class K>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int r, int c, const K& zero) : r_(r), c_(c), a_(static_cast<std::size_t>(r) * c, zero) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const K& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  static DenseMatrix identity(int n, const K& zero, const K& one) {
    DenseMatrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.c_ != b.r_) throw InputError("matrix size mismatch");
    K zero = a.a_.empty() ? K() : a.a_[0] - a.a_[0];
    DenseMatrix m(a.r_, b.c_, zero);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < b.c_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
      int p = -1;
      for (int i = row; i < r_; ++i)
        if (!(*this)(i, col).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != row)
        for (int j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      K inv = (*this)(row, col).inverse();
      for (int j = 0; j < c_; ++j) (*this)(row, j) *= inv;
      for (int i = 0; i < r_; ++i) {
        if (i == row || (*this)(i, col).is_zero()) continue;
        K f = (*this)(i, col);
        for (int j = 0; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      piv.push_back(col);
      ++row;
    }
    return piv;
  }

  int rank() const {
    DenseMatrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Basis of {x : A x = 0}.
  std::vector<std::vector<K>> nullspace(const K& zero, const K& one) const {
    DenseMatrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(c_, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<std::vector<K>> basis;
    for (int f = 0; f < c_; ++f) {
      if (is_piv[f]) continue;
      std::vector<K> x(c_, zero);
      x[f] = one;
      for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m(static_cast<int>(r), f);
      basis.push_back(std::move(x));
    }
    return basis;
  }

  // One solution of A x = b, if any.
  std::optional<std::vector<K>> solve(const std::vector<K>& b, const K& zero) const {
    DenseMatrix aug(r_, c_ + 1, zero);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_) = b[i];
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == c_) return std::nullopt;
    std::vector<K> x(c_, zero);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), c_);
    return x;
  }

  std::optional<DenseMatrix> inverse(const K& zero, const K& one) const {
    if (r_ != c_) return std::nullopt;
    DenseMatrix aug(r_, 2 * c_, zero);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = one;
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) < r_ || piv.back() >= c_) return std::nullopt;
    DenseMatrix inv(r_, c_, zero);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
    return inv;
  }

  K trace(const K& zero) const {
    K t = zero;
    for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
  }

  // Characteristic polynomial det(x I - A) by Faddeev–LeVerrier; coefficients
  // low degree first.
  std::vector<K> charpoly(const K& zero, const K& one) const {
    const int n = r_;
    std::vector<K> c(n + 1, zero);
    c[n] = one;
    DenseMatrix M(n, n, zero);
    for (int k = 1; k <= n; ++k) {
      DenseMatrix AM = (*this) * M;
      for (int i = 0; i < n; ++i) AM(i, i) += c[n - k + 1];
      M = AM;
      DenseMatrix AMk = (*this) * M;
      K tr = AMk.trace(zero);
      c[n - k] = -(tr * (one / times(one, k)));
    }
    return c;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<K> a_;
};

}  // namespace netlog
