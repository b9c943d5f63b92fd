#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "acr/network.hpp"
#include "acr/rational_matrix.hpp"

namespace acr {

// A steady state is admitted when max |g_k(x)| is at most 1e-9 relative to
// the largest single term magnitude |N(a,j) k_j x^{B_j}| (floored at 1).
// The threshold is an artifact decision; the underlying mathematics is
// exact and fixes no tolerance.
inline constexpr double kAdmissionTol = 1e-9;
// Relative pivot threshold for floating-point rank decisions.
inline constexpr double kRankTol = 1e-9;

struct SteadyStatePoint {
  std::vector<double> k;  // length r, positive
  std::vector<double> x;  // length n, positive
  // Exact copies when the point was given rationally; they enable exact rank
  // decisions for integer exponent matrices.
  std::optional<std::vector<Rational>> k_exact, x_exact;
  double residual = 0.0;  // max |g_k(x)|
  double scale = 0.0;     // max term magnitude
};

// Validate and admit a point; DomainError on wrong lengths, non-positive
// entries or a residual above tolerance.
SteadyStatePoint make_point(const PowerLawSystem& sys, std::vector<double> k,
                            std::vector<double> x, double tol = kAdmissionTol);
SteadyStatePoint make_point(const PowerLawSystem& sys, std::vector<Rational> k,
                            std::vector<Rational> x, double tol = kAdmissionTol);

std::vector<double> eval_g(const PowerLawSystem& sys, const std::vector<double>& k,
                           const std::vector<double>& x);

// Jacobian of g at (k, x) via N diag(diag(k) x^B) B^t diag(1/x), s x n rows.
std::vector<std::vector<double>> jacobian_at(const PowerLawSystem& sys,
                                             const std::vector<double>& k,
                                             const std::vector<double>& x);
// Exact counterpart; DomainError unless the exponent matrix is integral.
RationalMatrix jacobian_at_exact(const PowerLawSystem& sys, const std::vector<Rational>& k,
                                 const std::vector<Rational>& x);

// Rank by full-pivot elimination, pivots below tol * (max row norm) treated
// as zero.
std::size_t numeric_rank(const std::vector<std::vector<double>>& rows, double tol = kRankTol);

struct Degeneracy {
  bool degenerate = false;  // rank of the Jacobian < s
  // Rank of [Jacobian; W] < n; unset when no conservation matrix is known.
  std::optional<bool> degenerate_wrt_s;
  bool exact = false;  // decided by exact rank rather than thresholds
};

std::string to_string(const Degeneracy& d);

// W falls back to the system's conservation matrix; degenerate_wrt_s stays
// unset when neither is available. Degenerate implies degenerate w.r.t. the
// compatibility class whenever the latter is defined.
Degeneracy classify_degeneracy(const PowerLawSystem& sys, const SteadyStatePoint& pt,
                               const std::optional<RationalMatrix>& W = std::nullopt,
                               double rank_tol = kRankTol);

struct SensitivityVector {
  enum class Method { Cramer, Solve };
  std::vector<double> values;        // length n, lies in ker(Jacobian)
  std::vector<double> perturbation;  // gamma'(0), length d
  Method method = Method::Solve;
};

struct SensitivityPair {
  SensitivityVector cramer, solve;
};

// Sensitivity of the steady state to the j-th canonical perturbation of the
// conserved totals (0-based j < d), computed independently by a cofactor
// ratio and by a linear solve of [J; W] S = e_{s+j}; the methods must agree
// to 1e-9 relative or an Error is thrown. DomainError at points degenerate
// w.r.t. the compatibility class.
SensitivityPair sensitivity_both(const PowerLawSystem& sys, const SteadyStatePoint& pt,
                                 std::size_t j,
                                 const std::optional<RationalMatrix>& W = std::nullopt);
SensitivityVector sensitivity_canonical(const PowerLawSystem& sys, const SteadyStatePoint& pt,
                                        std::size_t j,
                                        const std::optional<RationalMatrix>& W = std::nullopt);

// Linear combination sum_j gamma_prime[j] * canon[j] for an arbitrary
// perturbation direction of the totals.
SensitivityVector sensitivity_general(const std::vector<SensitivityVector>& canon,
                                      const std::vector<double>& gamma_prime);

// The totals perturbation induced by moving the state along `dir`: W dir.
std::vector<double> state_perturbation_direction(const RationalMatrix& W,
                                                 const std::vector<double>& dir);

// True iff the Jacobian with column i removed drops below rank s, which at
// admitted nondegenerate points is equivalent to all canonical sensitivities
// of coordinate i vanishing. DomainError at degenerate points (the
// equivalence needs the nondegeneracy hypothesis). On the floating path the
// rank threshold is anchored to the full Jacobian's row norms, so a removed
// column that carried the whole scale leaves a submatrix of rank 0, not a
// noise-ranked full matrix.
bool zero_sensitivity_test(const PowerLawSystem& sys, const SteadyStatePoint& pt,
                           std::size_t i,
                           const std::optional<RationalMatrix>& W = std::nullopt,
                           double rank_tol = kRankTol);

// Damped Newton on [g; Wx - T] with T fixed by the seed's compatibility
// class (plain g when d = 0). OracleFailure on non-convergence.
SteadyStatePoint find_steady_state(const PowerLawSystem& sys, const std::vector<double>& k,
                                   const std::vector<double>& x_seed,
                                   const std::optional<RationalMatrix>& W = std::nullopt,
                                   int max_iter = 100);

// Independent derivative estimate: re-solve the steady state on the fibers
// T* +- h e_j and central-difference. Newton capped at 50 iterations per
// fiber; OracleFailure on non-convergence. Test oracle, not a product path.
std::vector<double> continuation_oracle(const PowerLawSystem& sys, const SteadyStatePoint& pt,
                                        std::size_t j, double h,
                                        const std::optional<RationalMatrix>& W = std::nullopt);

}  // namespace acr
