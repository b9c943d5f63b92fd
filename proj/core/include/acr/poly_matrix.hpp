#pragma once

#include <cstddef>
#include <vector>

#include "acr/multipoly.hpp"
#include "acr/rational_matrix.hpp"

namespace acr {

// Dense matrix of MultiPoly entries sharing one variable list.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(VarSetPtr vars, std::size_t rows, std::size_t cols);  // zeros

  static PolyMatrix from_rational(VarSetPtr vars, const RationalMatrix& m);
  static PolyMatrix diagonal(std::vector<MultiPoly> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarSetPtr& vars() const { return vars_; }

  MultiPoly& operator()(std::size_t i, std::size_t j);
  const MultiPoly& operator()(std::size_t i, std::size_t j) const;

  PolyMatrix operator*(const PolyMatrix& rhs) const;
  PolyMatrix transposed() const;
  PolyMatrix stacked(const PolyMatrix& other) const;

  bool operator==(const PolyMatrix&) const = default;

  RationalMatrix eval(const std::vector<Rational>& point) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  VarSetPtr vars_;
  std::vector<MultiPoly> data_;

  void check(std::size_t i, std::size_t j) const;
};

// Determinant by Laplace expansion along successive rows, memoized on the
// set of active columns so subdeterminants are shared. DimensionError if the
// matrix is not square (or wider than 64 columns, the memo-key width).
MultiPoly poly_det(const PolyMatrix& m);

struct Minor {
  std::vector<std::size_t> rows;  // ascending
  std::vector<std::size_t> cols;  // ascending
  MultiPoly value;
};

// Every size x size minor with columns drawn from the complement of
// `excluded_cols`. Column subsets are enumerated in lexicographic order; if
// m.rows() > size, row subsets are enumerated too (outer loop, lexicographic).
// Subdeterminants are shared across the enumeration via the poly_det memo.
// DimensionError if size exceeds the available rows or columns.
std::vector<Minor> minors(const PolyMatrix& m, std::size_t size,
                          const std::vector<std::size_t>& excluded_cols = {});

}  // namespace acr
