#pragma once

#include <cstddef>
#include <vector>

#include "acr/rational_matrix.hpp"

namespace acr {

// Exact elimination over Q. Rows are first scaled to integers, then a
// fraction-free (Bareiss) forward pass runs with first-nonzero pivoting and
// column skipping; intermediate entries stay integral, divisions are exact.
// Nothing here touches floating point.

std::size_t rank(const RationalMatrix& m);

// Determinant of a square matrix (DimensionError otherwise).
Rational det(const RationalMatrix& m);

// Reduced row-echelon form. Zero rows are dropped; pivot columns (ascending)
// are reported through `pivot_cols` when given.
RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

// Canonical basis of {v : m v = 0}, returned as the rows of a k x cols
// matrix where k = cols - rank. One basis vector per free column, free
// columns in ascending index order; each vector has integer entries with
// content 1 and positive first nonzero entry. The result depends only on the
// null space, so equal null spaces give byte-identical bases.
RationalMatrix kernel_basis(const RationalMatrix& m);

// kernel_basis of the transpose: canonical basis of {w : w m = 0} as rows.
RationalMatrix left_kernel_basis(const RationalMatrix& m);

struct RowSelection {
  std::vector<std::size_t> indices;  // ascending
  RationalMatrix submatrix;          // the selected rows, in that order
};

// Greedy top-down scan keeping each row that enlarges the span of the rows
// already kept; the lexicographically first maximal independent subset.
RowSelection select_independent_rows(const RationalMatrix& m);

// True iff the rows of a and b span the same subspace of Q^cols.
bool same_row_span(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace acr
