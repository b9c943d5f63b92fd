#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "acr/rational.hpp"

namespace acr {

// Dense exact-rational matrix, row major. Desk-scale sizes; every access is
// bounds checked.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);  // zero filled

  static RationalMatrix identity(std::size_t n);
  // Throws DimensionError unless the rows are rectangular.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_rows(std::initializer_list<std::vector<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j);
  const Rational& operator()(std::size_t i, std::size_t j) const;

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> col(std::size_t j) const;
  void set_row(std::size_t i, const std::vector<Rational>& values);

  // Rows of `other` appended below. Column counts must agree.
  RationalMatrix stacked(const RationalMatrix& other) const;
  RationalMatrix transposed() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;

  bool operator==(const RationalMatrix&) const = default;

  bool is_zero() const;
  std::string to_string() const;  // aligned, for diagnostics

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;

  void check(std::size_t i, std::size_t j) const;
};

}  // namespace acr
