#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "divcon/polynomial.hpp"

namespace divcon::detail {

std::size_t matrix_rank(RationalMatrix m);
std::optional<RationalMatrix> matrix_inverse(const RationalMatrix& m);
RationalMatrix identity_matrix(std::size_t n);

// P with P^T M P diagonal; nonzero diagonal entries come first.
struct Congruence {
  RationalMatrix transform;
  std::vector<Rational> diagonal;
};
Congruence diagonalize_symmetric(const RationalMatrix& m);

// Sparse vector sorted by column, largest column first.
using SparseRow = std::vector<std::pair<int, Rational>>;

// a - c * b
SparseRow sparse_axpy(const SparseRow& a, const Rational& c, const SparseRow& b);

// Semi-echelon basis over the rationals. Each stored row has a distinct
// leading (largest) column normalized to 1. With tracking enabled, every
// stored row remembers its expression in terms of the inserted generators.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  bool insert(SparseRow row, std::size_t generator = 0);

  struct Reduction {
    SparseRow remainder;
    // target = remainder + sum coefficient * generator
    SparseRow combination;
  };
  Reduction reduce(SparseRow target) const;

  bool contains(const SparseRow& row) const;
  bool is_pivot(int column) const { return rows_.count(column) != 0; }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    SparseRow entries;
    SparseRow combination;
  };
  bool track_;
  std::unordered_map<int, Row> rows_;
};

}  // namespace divcon::detail
