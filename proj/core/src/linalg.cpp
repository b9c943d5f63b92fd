#include "acr/linalg.hpp"

#include <utility>

#include "acr/errors.hpp"

namespace acr {
namespace {

struct Echelon {
  std::vector<std::vector<Int>> a;       // row echelon, integral
  std::vector<std::size_t> pivot_cols;   // ascending
  std::vector<Rational> row_scales;      // original row i was multiplied by row_scales[i]
  int sign = 1;                          // parity of row swaps
  std::size_t rows = 0, cols = 0;
};

// Fraction-free forward elimination. After step t the entries below and to
// the right of pivot t are (t+1)-minors of the scaled input, so the division
// by the previous pivot is exact in Z.
Echelon bareiss(const RationalMatrix& m) {
  Echelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.a.assign(e.rows, std::vector<Int>(e.cols));
  e.row_scales.resize(e.rows);
  for (std::size_t i = 0; i < e.rows; ++i) {
    Int l = common_denominator(m.row(i));
    e.row_scales[i] = l;
    for (std::size_t j = 0; j < e.cols; ++j) {
      const Rational& q = m(i, j);
      e.a[i][j] = num(q) * (l / den(q));
    }
  }

  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < e.cols && r < e.rows; ++c) {
    std::size_t p = r;
    while (p < e.rows && e.a[p][c] == 0) ++p;
    if (p == e.rows) continue;
    if (p != r) {
      std::swap(e.a[p], e.a[r]);
      std::swap(e.row_scales[p], e.row_scales[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < e.rows; ++i) {
      for (std::size_t j = c + 1; j < e.cols; ++j)
        e.a[i][j] = (e.a[r][c] * e.a[i][j] - e.a[i][c] * e.a[r][j]) / prev;
      e.a[i][c] = 0;
    }
    prev = e.a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return bareiss(m).pivot_cols.size(); }

Rational det(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("det: matrix is not square");
  if (m.rows() == 0) return 1;
  Echelon e = bareiss(m);
  if (e.pivot_cols.size() < m.rows()) return 0;
  // Last Bareiss pivot equals the determinant of the integer-scaled matrix.
  Rational d(e.a[m.rows() - 1][m.rows() - 1] * e.sign);
  for (const auto& s : e.row_scales) d /= s;
  return d;
}

RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivot_cols) {
  Echelon e = bareiss(m);
  std::size_t k = e.pivot_cols.size();
  RationalMatrix r(k, m.cols());
  for (std::size_t i = 0; i < k; ++i) {
    Rational p(e.a[i][e.pivot_cols[i]]);
    for (std::size_t j = e.pivot_cols[i]; j < m.cols(); ++j) r(i, j) = Rational(e.a[i][j]) / p;
  }
  // Back-eliminate above each pivot.
  for (std::size_t i = k; i-- > 0;) {
    for (std::size_t u = 0; u < i; ++u) {
      Rational f = r(u, e.pivot_cols[i]);
      if (f == 0) continue;
      for (std::size_t j = e.pivot_cols[i]; j < m.cols(); ++j) r(u, j) -= f * r(i, j);
    }
  }
  if (pivot_cols) *pivot_cols = e.pivot_cols;
  return r;
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  RationalMatrix r = rref(m, &pivots);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  RationalMatrix basis(n - pivots.size(), n);
  std::size_t out = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.set_row(out++, canonical_sign_vector(v));
  }
  return basis;
}

RationalMatrix left_kernel_basis(const RationalMatrix& m) { return kernel_basis(m.transposed()); }

RowSelection select_independent_rows(const RationalMatrix& m) {
  RowSelection sel;
  RationalMatrix chosen(0, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RationalMatrix candidate = chosen.stacked(RationalMatrix::from_rows({m.row(i)}));
    if (rank(candidate) > sel.indices.size()) {
      sel.indices.push_back(i);
      chosen = std::move(candidate);
    }
  }
  sel.submatrix = std::move(chosen);
  return sel;
}

bool same_row_span(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) return false;
  std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(a.stacked(b)) == ra;
}

}  // namespace acr
