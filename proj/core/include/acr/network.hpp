#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "acr/linalg.hpp"
#include "acr/rational_matrix.hpp"

namespace acr {

// One reaction: reactant and product complexes as non-negative integer
// stoichiometric coefficient vectors over the species list. A reaction whose
// complexes coincide is rejected everywhere (it contributes nothing to the
// dynamics).
struct Reaction {
  std::vector<Int> reactant;
  std::vector<Int> product;
  std::string rate_name;  // unique across the network, e.g. "k1"
};

struct Network {
  std::vector<std::string> species;
  std::vector<Reaction> reactions;

  std::size_t n() const { return species.size(); }
  std::size_t r() const { return reactions.size(); }

  // Net production (product - reactant), n x r.
  RationalMatrix stoichiometric_matrix() const;
  // Reactant coefficients, n x r: the mass-action exponent matrix.
  RationalMatrix mass_action_exponents() const;

  // Throws DomainError on empty networks, duplicate names, coefficient
  // vectors of the wrong length, negative coefficients or null reactions.
  void validate() const;
};

// The reduced steady-state system g_k(x) = N diag(k) x^B together with the
// data needed downstream: the selected rows of the stoichiometric matrix and
// the conservation matrix W spanning its left kernel.
struct PowerLawSystem {
  std::vector<std::string> species;  // size n
  std::vector<std::string> rates;    // size r
  std::optional<RationalMatrix> gamma;  // n x r; absent for raw-matrix systems
  RationalMatrix B;                  // n x r, rational exponents
  RationalMatrix N;                  // s x r, full row rank
  std::vector<std::size_t> selected_rows;  // rows of gamma forming N (empty for raw)
  RationalMatrix W;                  // d x n when has_w
  bool has_w = false;

  std::size_t n = 0, r = 0, s = 0, d = 0;  // d = n - s

  bool mass_action = false;          // true iff B came from reactant coefficients
  bool integer_exponents() const;
};

// Mass-action build: B = reactant coefficients.
PowerLawSystem build_system(const Network& net);
// Power-law build with an explicit n x r rational exponent matrix.
PowerLawSystem build_system(const Network& net, const RationalMatrix& exponents);

// System given directly by its matrices. W is optional because nothing in
// (N, B) determines a conservation structure; when absent, operations that
// need W report themselves as skipped instead of inventing one.
PowerLawSystem raw_system(const RationalMatrix& N, const RationalMatrix& B,
                          std::optional<RationalMatrix> W = std::nullopt,
                          std::vector<std::string> species = {},
                          std::vector<std::string> rates = {});

}  // namespace acr
