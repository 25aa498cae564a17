#include "detail/linear_algebra.hpp"

#include <algorithm>
#include <utility>

namespace divcon::detail {

std::size_t matrix_rank(RationalMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix id(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

std::optional<RationalMatrix> matrix_inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[c]);
    std::swap(inv[pivot], inv[c]);
    Rational scale = 1 / a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] *= scale;
      inv[c][k] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational factor = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= factor * a[c][k];
        inv[r][k] -= factor * inv[c][k];
      }
    }
  }
  return inv;
}

namespace {

// Column j of a and p gets column j + factor * column i; row j of a likewise.
void add_multiple(RationalMatrix& a, RationalMatrix& p, std::size_t i, std::size_t j,
                  const Rational& factor) {
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) a[r][j] += factor * a[r][i];
  for (std::size_t c = 0; c < n; ++c) a[j][c] += factor * a[i][c];
  for (std::size_t r = 0; r < n; ++r) p[r][j] += factor * p[r][i];
}

void swap_indices(RationalMatrix& a, RationalMatrix& p, std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap(a[i], a[j]);
  for (auto& row : a) std::swap(row[i], row[j]);
  for (auto& row : p) std::swap(row[i], row[j]);
}

}  // namespace

Congruence diagonalize_symmetric(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix p = identity_matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][pivot] == 0) ++pivot;
    if (pivot == n) {
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (a[i][j] != 0) {
            add_multiple(a, p, j, i, Rational(1));
            pivot = i;
            found = true;
          }
        }
      }
      if (!found) break;
    }
    swap_indices(a, p, pivot, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      Rational factor = -a[r][k] / a[k][k];
      add_multiple(a, p, k, r, factor);
    }
  }
  Congruence out;
  out.transform = std::move(p);
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = a[i][i];
  return out;
}

SparseRow sparse_axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, -c * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

bool Echelon::insert(SparseRow row, std::size_t generator) {
  SparseRow combination;
  if (track_) combination.emplace_back(static_cast<int>(generator), Rational(1));
  while (!row.empty()) {
    auto it = rows_.find(row.front().first);
    if (it == rows_.end()) break;
    Rational c = row.front().second;
    row = sparse_axpy(row, c, it->second.entries);
    if (track_) combination = sparse_axpy(combination, c, it->second.combination);
  }
  if (row.empty()) return false;
  Rational lead = row.front().second;
  if (lead != 1) {
    for (auto& e : row) e.second /= lead;
    for (auto& e : combination) e.second /= lead;
  }
  const int column = row.front().first;
  rows_.emplace(column, Row{std::move(row), std::move(combination)});
  return true;
}

Echelon::Reduction Echelon::reduce(SparseRow target) const {
  Reduction out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = start;
    while (pos < target.size() && rows_.count(target[pos].first) == 0) ++pos;
    if (pos == target.size()) break;
    const Row& row = rows_.at(target[pos].first);
    Rational c = target[pos].second;
    target = sparse_axpy(target, c, row.entries);
    if (track_) {
      SparseRow scaled = row.combination;
      for (auto& e : scaled) e.second *= c;
      out.combination = sparse_axpy(out.combination, Rational(-1), scaled);
    }
    start = pos;
  }
  out.remainder = std::move(target);
  return out;
}

bool Echelon::contains(const SparseRow& row) const { return reduce(row).remainder.empty(); }

}  // namespace divcon::detail
