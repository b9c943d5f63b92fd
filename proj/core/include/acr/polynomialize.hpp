#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "acr/multipoly.hpp"
#include "acr/network.hpp"
#include "acr/rational_matrix.hpp"

namespace acr {

// Generalized polynomial system g_i(x) = sum_j coeffs(i,j) * x^(col j of
// exponents); exponents may be rational and negative, x ranges over the
// positive orthant.
struct GenPolySystem {
  std::vector<std::string> vars;  // size n
  RationalMatrix coeffs;          // s x r
  RationalMatrix exponents;       // n x r

  std::size_t n() const { return exponents.rows(); }
  std::size_t r() const { return exponents.cols(); }
  std::size_t s() const { return coeffs.rows(); }
};

// Folds the rate constants into the coefficient matrix (all-ones by default).
GenPolySystem as_gen_poly(const PowerLawSystem& sys);
GenPolySystem as_gen_poly(const PowerLawSystem& sys, const std::vector<Rational>& k);

// Monomial substitution x_j = z_j^(m_j) followed by the smallest monomial
// shift z^(beta(i)) clearing negative exponents per equation: gtilde has
// integer non-negative exponents and, on the positive orthant, the same zero
// set as g up to the coordinate-wise homeomorphism phi.
struct PolynomializedSystem {
  GenPolySystem original;
  std::vector<Int> m;             // per-variable substitution exponents, >= 1
  RationalMatrix beta;            // s x n integer shifts
  VarSetPtr zvars;                // z1..zn
  std::vector<MultiPoly> gtilde;  // s polynomials over zvars

  // True iff the transform changed nothing (integer non-negative input).
  bool identity = false;
};

PolynomializedSystem polynomialize(const GenPolySystem& g);

// phi(z) = (z_1^(m_1), ..., z_n^(m_n)) and its inverse; positive inputs only
// (DomainError otherwise).
std::vector<double> phi(const PolynomializedSystem& p, const std::vector<double>& z);
std::vector<double> phi_inverse(const PolynomializedSystem& p, const std::vector<double>& x);

// Numeric evaluation of a generalized system on the positive orthant.
std::vector<double> eval(const GenPolySystem& g, const std::vector<double>& x);
// Jacobian rows: dg_i/dx_j; row-major s x n.
std::vector<std::vector<double>> jacobian(const GenPolySystem& g, const std::vector<double>& x);

}  // namespace acr
