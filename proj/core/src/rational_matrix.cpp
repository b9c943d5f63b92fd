#include "acr/rational_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "acr/errors.hpp"

namespace acr {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw DimensionError("from_rows: ragged row lengths");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::initializer_list<std::vector<Rational>> rows) {
  return from_rows(std::vector<std::vector<Rational>>(rows));
}

void RationalMatrix::check(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw DimensionError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range for " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
}

Rational& RationalMatrix::operator()(std::size_t i, std::size_t j) {
  check(i, j);
  return data_[i * cols_ + j];
}

const Rational& RationalMatrix::operator()(std::size_t i, std::size_t j) const {
  check(i, j);
  return data_[i * cols_ + j];
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
  if (i >= rows_) throw DimensionError("row index out of range");
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> RationalMatrix::col(std::size_t j) const {
  if (j >= cols_) throw DimensionError("column index out of range");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = data_[i * cols_ + j];
  return out;
}

void RationalMatrix::set_row(std::size_t i, const std::vector<Rational>& values) {
  if (i >= rows_ || values.size() != cols_)
    throw DimensionError("set_row: bad index or length");
  std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& other) const {
  if (rows_ == 0 && cols_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (other.cols_ != cols_) throw DimensionError("stacked: column counts differ");
  RationalMatrix m(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(rows_ * cols_));
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = data_[i * cols_ + j];
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product: inner dimensions differ");
  RationalMatrix m(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = data_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, j) += a * rhs(k, j);
    }
  return m;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector product: length mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += data_[i * cols_ + j] * v[j];
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

std::string RationalMatrix::to_string() const {
  std::vector<std::string> cells(data_.size());
  std::size_t width = 0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    cells[i] = acr::to_string(data_[i]);
    width = std::max(width, cells[i].size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::string& c = cells[i * cols_ + j];
      os << std::string(width - c.size(), ' ') << c << (j + 1 < cols_ ? "  " : "");
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace acr
