#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acr/rational.hpp"

namespace acr {

// Immutable ordered variable list, shared by every polynomial and polynomial
// matrix of one analysis so that term maps compare cheaply.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VarSet& other) const { return names_ == other.names_; }

  // Convenience builders: "a1..am", or a concatenation of two lists.
  static std::shared_ptr<const VarSet> numbered(const std::string& stem, std::size_t count);
  static std::shared_ptr<const VarSet> concat(const VarSet& a, const VarSet& b);

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

enum class SignProfile { AllPositive, AllNegative, Mixed, Zero };

std::string to_string(SignProfile p);

// Sparse multivariate polynomial over Q: exponent vector -> nonzero
// coefficient. Exponents are non-negative; the zero polynomial has an empty
// term map. Operands of arithmetic must share one variable list.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;  // detached zero; assign before use
  explicit MultiPoly(VarSetPtr vars);

  static MultiPoly constant(VarSetPtr vars, const Rational& c);
  static MultiPoly variable(VarSetPtr vars, std::size_t index);
  static MultiPoly monomial(VarSetPtr vars, Exponents exps, const Rational& c);

  const VarSetPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  SignProfile sign_profile() const;

  // True iff every term has a positive exponent in the given variable (the
  // zero polynomial qualifies vacuously).
  bool divisible_by(std::size_t var) const;
  bool divisible_by(std::string_view var_name) const;  // DomainError on unknown name

  int total_degree() const;               // -1 for the zero polynomial
  int degree_in(std::size_t var) const;   // -1 for the zero polynomial

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly operator*(const Rational& c) const;

  bool operator==(const MultiPoly& rhs) const;

  Rational eval(const std::vector<Rational>& point) const;
  double eval(const std::vector<double>& point) const;

  // Rewrites the polynomial over `target`, matching variables by name.
  // DomainError if a used variable is missing from the target list.
  MultiPoly reindexed(VarSetPtr target) const;

  // Coefficient extraction: groups terms by their exponents on `keep` and
  // returns, per distinct pattern, the polynomial factor in the remaining
  // variables (still expressed over the full variable list).
  std::map<Exponents, MultiPoly> collect(const std::vector<std::size_t>& keep) const;

  // Content 1 and positive leading coefficient (graded-lex leading term);
  // canonical representative up to positive scaling for dedup purposes.
  MultiPoly normalized() const;

  // Graded-lex order, leading term first, e.g. "z1^4*z2^2 - 2*z1^3*z2^2 + z2^2".
  std::string to_string() const;

 private:
  VarSetPtr vars_;
  TermMap terms_;

  void add_term(const Exponents& e, const Rational& c);
  void require_compatible(const MultiPoly& rhs) const;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

}  // namespace acr
