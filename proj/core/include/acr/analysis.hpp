#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acr/cone.hpp"
#include "acr/network.hpp"
#include "acr/poly_matrix.hpp"

namespace acr {

// The steady-state Jacobian with the unknown flux replaced by a generic
// kernel vector v = sum_t a_t * basis_t: an s x n polynomial matrix whose
// entries are linear in the a-parameters (and polynomial in any symbolic
// exponent entries).
struct ConvexJacobian {
  PolyMatrix matrix;               // s x n
  RationalMatrix basis;            // kernel basis used, rows = basis vectors
  std::vector<std::string> param_names;  // leading variables of matrix.vars()

  std::size_t params() const { return param_names.size(); }
};

// Power-law system whose exponent matrix carries symbols (entries over a
// b-symbol variable list) instead of numbers.
struct SymbolicSystem {
  RationalMatrix N;  // s x r, full row rank
  PolyMatrix B;      // n x r
};

ConvexJacobian convex_jacobian(const PowerLawSystem& sys);
// Same, over a caller-chosen kernel basis (rows) with caller-named
// parameters; the rows must span ker(N).
ConvexJacobian convex_jacobian(const PowerLawSystem& sys, const RationalMatrix& basis_rows,
                               const std::vector<std::string>& param_names);
ConvexJacobian convex_jacobian(const SymbolicSystem& sys);
ConvexJacobian convex_jacobian(const SymbolicSystem& sys, const RationalMatrix& basis_rows,
                               const std::vector<std::string>& param_names);

// N diag(v) B^t over unconstrained coordinates v1..vr (exponent symbols
// appended for the symbolic overload): the matrix behind the sign shortcut.
PolyMatrix free_flux_jacobian(const PowerLawSystem& sys);
PolyMatrix free_flux_jacobian(const SymbolicSystem& sys);
// Same with v = sum_i l_i * ray_i over the cone's extreme rays.
PolyMatrix ray_substituted_jacobian(const PowerLawSystem& sys, const ConeRays& rays);

struct MinorWitness {
  std::vector<std::size_t> cols;
  MultiPoly value;
};

// Robustness verdict for one coordinate: YES iff every s x s minor avoiding
// that coordinate's column vanishes identically over the kernel.
struct AcrVerdict {
  std::size_t species_index = 0;
  bool local_acr = false;
  std::size_t minors_checked = 0;
  std::optional<MinorWitness> nonzero_minor;  // set iff NO
};

AcrVerdict local_acr_test(const ConvexJacobian& cj, std::size_t species);

// Conditions on the exponent symbols under which every avoiding minor
// vanishes: the nonzero coefficient polynomials of the minors with respect
// to the a-parameters, normalized and deduplicated. Empty list = identically
// robust; for a numeric exponent matrix this degenerates to local_acr_test.
std::vector<MultiPoly> symbolic_acr_condition(const ConvexJacobian& cj, std::size_t species);

enum class NondegStatus { Certified, Fails, Inconclusive, EmptyCone };
enum class NondegStage { None, SignShortcut, RayShortcut, Sampling };

std::string to_string(NondegStatus s);
std::string to_string(NondegStage s);

struct NondegeneracyVerdict {
  NondegStatus status = NondegStatus::Inconclusive;
  NondegStage stage = NondegStage::None;
  // CERTIFIED: a minor, in free flux coordinates v1..vr (sign shortcut) or
  // ray weights l1..lp (ray shortcut), with single-signed coefficients.
  std::optional<MinorWitness> certificate;
  // FAILS: a strictly positive kernel vector where the substituted Jacobian
  // drops rank.
  std::optional<std::vector<Rational>> counterexample;
  std::uint64_t seed = 0;
  int samples = 0;
};

// Three-stage pipeline: sign shortcut over free v, sign shortcut over the
// extreme-ray parametrization, then seeded rational sampling of the open
// cone. Sampling can only certify failure, hence INCONCLUSIVE.
NondegeneracyVerdict nondegeneracy_test(const PowerLawSystem& sys, const ConeRays& rays,
                                        std::uint64_t seed = 0, int samples = 64);

struct DivisibilityReport {
  enum class Status { Divides, DoesNotDivide, Skipped };
  Status status = Status::Skipped;
  bool informative = true;  // false when the determinant vanishes identically
  std::optional<MultiPoly> p;  // det [ M(a) diag(h) ; W ] over (a, h)
  std::string note;            // reason when skipped
};

std::string to_string(DivisibilityReport::Status s);

// Necessary criterion: local robustness in coordinate i forces h_i to divide
// the determinant above. Divisibility alone proves nothing (see the
// rank-drop counterexample fixture); failure refutes.
DivisibilityReport divisibility_test(const PowerLawSystem& sys, const ConvexJacobian& cj,
                                     std::size_t species);

struct SpeciesFinding {
  std::string name;
  AcrVerdict acr;
  DivisibilityReport divisibility;
  // By the main equivalence, a YES verdict forces zero sensitivity of this
  // coordinate at the covered steady states.
  bool zero_sensitivity_implied = false;
};

struct AnalysisReport {
  std::string source;  // file path or caller label
  std::size_t n = 0, r = 0, s = 0, d = 0;
  std::vector<std::string> species;
  std::vector<std::string> rates;
  ConeRays rays;
  std::optional<ConvexJacobian> convex;  // absent when the cone is empty
  NondegeneracyVerdict nondegeneracy;
  std::vector<SpeciesFinding> findings;  // empty when the cone is empty
  std::vector<std::string> notes;
};

// Full pipeline for one system. An empty positive cone short-circuits
// everything (no positive steady states exist for any rate vector).
AnalysisReport analyze(const PowerLawSystem& sys, std::uint64_t seed = 0, int samples = 64,
                       std::string source = "");

}  // namespace acr
