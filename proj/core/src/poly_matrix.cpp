#include "acr/poly_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

#include "acr/errors.hpp"

namespace acr {

PolyMatrix::PolyMatrix(VarSetPtr vars, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), vars_(std::move(vars)),
      data_(rows * cols, MultiPoly(vars_)) {}

PolyMatrix PolyMatrix::from_rational(VarSetPtr vars, const RationalMatrix& m) {
  PolyMatrix p(std::move(vars), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      p(i, j) = MultiPoly::constant(p.vars_, m(i, j));
  return p;
}

PolyMatrix PolyMatrix::diagonal(std::vector<MultiPoly> entries) {
  if (entries.empty()) return {};
  PolyMatrix p(entries.front().vars(), entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) p(i, i) = std::move(entries[i]);
  return p;
}

void PolyMatrix::check(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("poly matrix index out of range");
}

MultiPoly& PolyMatrix::operator()(std::size_t i, std::size_t j) {
  check(i, j);
  return data_[i * cols_ + j];
}

const MultiPoly& PolyMatrix::operator()(std::size_t i, std::size_t j) const {
  check(i, j);
  return data_[i * cols_ + j];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("poly matrix product: inner dimensions differ");
  PolyMatrix p(vars_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const MultiPoly& a = data_[i * cols_ + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs(k, j).is_zero()) continue;
        p(i, j) += a * rhs(k, j);
      }
    }
  return p;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix p(vars_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) p(j, i) = data_[i * cols_ + j];
  return p;
}

PolyMatrix PolyMatrix::stacked(const PolyMatrix& other) const {
  if (other.cols_ != cols_) throw DimensionError("stacked: column counts differ");
  PolyMatrix p(vars_, rows_ + other.rows_, cols_);
  for (std::size_t i = 0; i < rows_ * cols_; ++i) p.data_[i] = data_[i];
  for (std::size_t i = 0; i < other.rows_ * cols_; ++i)
    p.data_[rows_ * cols_ + i] = other.data_[i];
  return p;
}

RationalMatrix PolyMatrix::eval(const std::vector<Rational>& point) const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = data_[i * cols_ + j].eval(point);
  return m;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < cols_; ++j)
      os << data_[i * cols_ + j].to_string() << (j + 1 < cols_ ? " , " : "");
    os << " ]\n";
  }
  return os.str();
}

namespace {

// Shared Laplace worker: determinants of the submatrices formed by the last
// |mask| rows of `row_set` and the columns in `mask`. One memo serves every
// minor of one row selection, which is where the enumeration saves work.
class LaplaceWorker {
 public:
  LaplaceWorker(const PolyMatrix& m, std::vector<std::size_t> row_set)
      : m_(m), rows_(std::move(row_set)) {}

  const MultiPoly& det(std::uint64_t col_mask) {
    auto it = memo_.find(col_mask);
    if (it != memo_.end()) return it->second;

    MultiPoly result(m_.vars());
    std::size_t width = static_cast<std::size_t>(std::popcount(col_mask));
    if (width == 0) {
      result = MultiPoly::constant(m_.vars(), 1);
    } else {
      std::size_t row = rows_[rows_.size() - width];
      int pos = 0;
      for (std::uint64_t rest = col_mask; rest; rest &= rest - 1, ++pos) {
        std::size_t j = static_cast<std::size_t>(std::countr_zero(rest));
        const MultiPoly& entry = m_(row, j);
        if (entry.is_zero()) continue;
        MultiPoly term = entry * det(col_mask & ~(std::uint64_t{1} << j));
        if (pos % 2) result -= term;
        else result += term;
      }
    }
    return memo_.emplace(col_mask, std::move(result)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::vector<std::size_t> rows_;
  std::map<std::uint64_t, MultiPoly> memo_;
};

std::uint64_t to_mask(const std::vector<std::size_t>& cols) {
  std::uint64_t mask = 0;
  for (auto c : cols) mask |= std::uint64_t{1} << c;
  return mask;
}

// Lexicographically next k-subset of {0..limit-1} drawn from `universe`.
bool next_combination(std::vector<std::size_t>& idx, std::size_t universe_size) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < universe_size) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

MultiPoly poly_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("poly_det: matrix is not square");
  if (m.cols() > 64) throw DimensionError("poly_det: more than 64 columns");
  if (m.rows() == 0) return MultiPoly::constant(m.vars(), 1);
  std::vector<std::size_t> all_rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
  LaplaceWorker w(m, all_rows);
  return w.det((m.cols() == 64) ? ~std::uint64_t{0}
                                : ((std::uint64_t{1} << m.cols()) - 1));
}

std::vector<Minor> minors(const PolyMatrix& m, std::size_t size,
                          const std::vector<std::size_t>& excluded_cols) {
  if (m.cols() > 64) throw DimensionError("minors: more than 64 columns");
  std::vector<bool> excluded(m.cols(), false);
  for (auto c : excluded_cols) {
    if (c >= m.cols()) throw DimensionError("minors: excluded column out of range");
    excluded[c] = true;
  }
  std::vector<std::size_t> available;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!excluded[j]) available.push_back(j);
  if (size > available.size() || size > m.rows())
    throw DimensionError("minors: size exceeds available rows or columns");

  // Row subsets (single subset in the common square-height case).
  std::vector<std::vector<std::size_t>> row_sets;
  std::vector<std::size_t> ridx(size);
  for (std::size_t i = 0; i < size; ++i) ridx[i] = i;
  do {
    row_sets.push_back(ridx);
  } while (m.rows() > size && next_combination(ridx, m.rows()));

  std::vector<Minor> out;
  for (const auto& rs : row_sets) {
    LaplaceWorker w(m, rs);
    std::vector<std::size_t> cidx(size);
    for (std::size_t i = 0; i < size; ++i) cidx[i] = i;
    do {
      std::vector<std::size_t> cols(size);
      for (std::size_t i = 0; i < size; ++i) cols[i] = available[cidx[i]];
      out.push_back(Minor{rs, cols, w.det(to_mask(cols))});
    } while (next_combination(cidx, available.size()));
  }
  return out;
}

}  // namespace acr
