#pragma once

#include <string>
#include <vector>

#include "acr/analysis.hpp"
#include "acr/network.hpp"
#include "acr/rational_matrix.hpp"

// Shared systems with hand-checked reference values. Tests freeze the
// expected numbers next to their assertions; this header only builds the
// inputs.
namespace acr::testing {

RationalMatrix int_matrix(const std::vector<std::vector<int>>& rows);
// Rows of whitespace-separated rationals, e.g. {"1 -2/3", "0 1"}.
RationalMatrix rational_matrix(const std::vector<std::string>& rows);

// Two species interconverting through one catalytic step, the smallest
// network with a robust coordinate.
std::string two_species_text();
Network two_species_network();
PowerLawSystem two_species_system();
// Same dynamics given as matrices, with the row choice N = (1, -1) and an
// explicit conservation row (1, 1).
PowerLawSystem two_species_raw();

// Isocitrate dehydrogenase regulation loop: a bifunctional enzyme keeps one
// substrate concentration robust.
std::string idhkp_text();
Network idhkp_network();
PowerLawSystem idhkp_system();
// Exponent entries replaced by symbols on the mass-action support.
SymbolicSystem idhkp_symbolic();
std::vector<std::string> idhkp_symbol_names();

// Mass-action network whose reduced system has a single row.
std::string rank1_text();
Network rank1_network();
// The same single-row system as raw matrices, no conservation matrix.
PowerLawSystem rank1_system();

// Two-dimensional flux cone whose extreme rays are linearly independent, so
// the cone parametrization is itself a kernel basis.
PowerLawSystem free_kernel_system();

// The divisibility criterion passes for x1 even though x1 is not robust:
// necessary, not sufficient.
PowerLawSystem divisible_trap_system();

// Carries an exactly representable positive steady state where the Jacobian
// drops rank.
PowerLawSystem degenerate_pair_system();

// Rational exponent matrix needing a monomial change of variables before
// polynomial root counting applies.
PowerLawSystem root_shift_system();

// s = n: no conserved quantities, fibers of the steady-state set are finite.
PowerLawSystem finite_fiber_system();

// Single decay reaction; the mass-action build produces an empty (0 x 1)
// conservation matrix rather than no matrix at all.
std::string decay_text();
PowerLawSystem decay_system();

}  // namespace acr::testing
