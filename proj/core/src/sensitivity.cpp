#include "acr/sensitivity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "acr/errors.hpp"
#include "acr/linalg.hpp"

namespace acr {

namespace {

void check_lengths(const PowerLawSystem& sys, std::size_t klen, std::size_t xlen,
                   const char* who) {
  if (klen != sys.r || xlen != sys.n)
    throw DimensionError(std::string(who) + ": expected " + std::to_string(sys.r) +
                         " rate values and " + std::to_string(sys.n) + " coordinates");
}

void check_positive(const std::vector<double>& v, const char* who) {
  for (double e : v)
    if (!(std::isfinite(e) && e > 0.0))
      throw DomainError(std::string(who) + ": entries must be positive finite numbers");
}

// Monomial term values lam_j = k_j * prod_i x_i^{B(i,j)}.
std::vector<double> term_values(const PowerLawSystem& sys, const std::vector<double>& k,
                                const std::vector<double>& x) {
  std::vector<double> lam(sys.r);
  for (std::size_t j = 0; j < sys.r; ++j) {
    double v = k[j];
    for (std::size_t i = 0; i < sys.n; ++i) {
      double e = to_double(sys.B(i, j));
      if (e != 0.0) v *= std::pow(x[i], e);
    }
    lam[j] = v;
  }
  return lam;
}

Rational pow_integer(const Rational& base, const Int& e) {
  if (e == 0) return Rational(1);
  const bool negative = e < 0;
  const unsigned long m = Int(negative ? Int(-e) : e).convert_to<unsigned long>();
  Int np = boost::multiprecision::pow(num(base), m);
  Int dp = boost::multiprecision::pow(den(base), m);
  return negative ? Rational(dp, np) : Rational(np, dp);
}

std::vector<Rational> term_values_exact(const PowerLawSystem& sys,
                                        const std::vector<Rational>& k,
                                        const std::vector<Rational>& x) {
  std::vector<Rational> lam(sys.r);
  for (std::size_t j = 0; j < sys.r; ++j) {
    Rational v = k[j];
    for (std::size_t i = 0; i < sys.n; ++i) {
      const Rational& e = sys.B(i, j);
      if (e != 0) v *= pow_integer(x[i], num(e));
    }
    lam[j] = v;
  }
  return lam;
}

void residual_and_scale(const PowerLawSystem& sys, const std::vector<double>& lam,
                        double& residual, double& scale) {
  residual = 0.0;
  scale = 0.0;
  for (std::size_t a = 0; a < sys.s; ++a) {
    double acc = 0.0;
    for (std::size_t j = 0; j < sys.r; ++j) {
      double term = to_double(sys.N(a, j)) * lam[j];
      acc += term;
      scale = std::max(scale, std::fabs(term));
    }
    residual = std::max(residual, std::fabs(acc));
  }
}

Eigen::MatrixXd jac_eigen(const PowerLawSystem& sys, const std::vector<double>& k,
                          const std::vector<double>& x) {
  std::vector<double> lam = term_values(sys, k, x);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(sys.s, sys.n);
  for (std::size_t a = 0; a < sys.s; ++a)
    for (std::size_t i = 0; i < sys.n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < sys.r; ++j) {
        double b = to_double(sys.B(i, j));
        if (b != 0.0) acc += to_double(sys.N(a, j)) * lam[j] * b;
      }
      J(a, i) = acc / x[i];
    }
  return J;
}

std::vector<std::vector<double>> to_rows(const Eigen::MatrixXd& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

// scale_floor lets a caller anchor the pivot threshold to the scale of a
// larger parent matrix; a submatrix made of pure roundoff noise would
// otherwise rank as full against its own (noise-sized) norm.
std::size_t numeric_rank_eigen(Eigen::MatrixXd A, double tol, double scale_floor = 0.0) {
  if (A.rows() == 0 || A.cols() == 0) return 0;
  double max_row_norm = scale_floor;
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    max_row_norm = std::max(max_row_norm, A.row(i).norm());
  const double threshold = tol * max_row_norm;

  std::size_t rank = 0;
  Eigen::Index r0 = 0, c0 = 0;
  while (r0 < A.rows() && c0 < A.cols()) {
    Eigen::Index pi = r0, pj = c0;
    double best = 0.0;
    for (Eigen::Index i = r0; i < A.rows(); ++i)
      for (Eigen::Index j = c0; j < A.cols(); ++j)
        if (std::fabs(A(i, j)) > best) {
          best = std::fabs(A(i, j));
          pi = i;
          pj = j;
        }
    if (best <= threshold) break;
    A.row(r0).swap(A.row(pi));
    A.col(c0).swap(A.col(pj));
    for (Eigen::Index i = r0 + 1; i < A.rows(); ++i) {
      double f = A(i, c0) / A(r0, c0);
      if (f != 0.0) A.row(i) -= f * A.row(r0);
    }
    ++rank;
    ++r0;
    ++c0;
  }
  return rank;
}

// nullptr when no conservation matrix is available anywhere.
const RationalMatrix* resolve_w(const PowerLawSystem& sys,
                                const std::optional<RationalMatrix>& W, const char* who) {
  const RationalMatrix* w = W ? &*W : (sys.has_w ? &sys.W : nullptr);
  if (w && w->cols() != sys.n)
    throw DimensionError(std::string(who) + ": conservation matrix must have " +
                         std::to_string(sys.n) + " columns");
  return w;
}

Eigen::MatrixXd w_eigen(const RationalMatrix& W) {
  Eigen::MatrixXd m(W.rows(), W.cols());
  for (std::size_t i = 0; i < W.rows(); ++i)
    for (std::size_t j = 0; j < W.cols(); ++j) m(i, j) = to_double(W(i, j));
  return m;
}

// Damped Newton for [g_k(x); W x - T] = 0 (just g when W has no rows).
std::vector<double> newton_solve(const PowerLawSystem& sys, const std::vector<double>& k,
                                 std::vector<double> x, const Eigen::MatrixXd& Wd,
                                 const Eigen::VectorXd& T, int max_iter, const char* who) {
  const std::size_t n = sys.n;
  const std::size_t d = static_cast<std::size_t>(Wd.rows());
  if (sys.s + d != n)
    throw DimensionError(std::string(who) + ": system is not square (s + d != n)");
  check_positive(x, who);

  auto full_residual = [&](const std::vector<double>& xc, double& rmax, double& scale) {
    std::vector<double> lam = term_values(sys, k, xc);
    Eigen::VectorXd rho(n);
    scale = 0.0;
    for (std::size_t a = 0; a < sys.s; ++a) {
      double acc = 0.0;
      for (std::size_t j = 0; j < sys.r; ++j) {
        double term = to_double(sys.N(a, j)) * lam[j];
        acc += term;
        scale = std::max(scale, std::fabs(term));
      }
      rho(a) = acc;
    }
    for (std::size_t t = 0; t < d; ++t) {
      double acc = -T(t);
      for (std::size_t i = 0; i < n; ++i) acc += Wd(t, i) * xc[i];
      rho(sys.s + t) = acc;
    }
    rmax = rho.lpNorm<Eigen::Infinity>();
    return rho;
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    double rmax = 0.0, scale = 0.0;
    Eigen::VectorXd rho = full_residual(x, rmax, scale);
    if (rmax <= 1e-12 * std::max(1.0, scale)) return x;

    Eigen::MatrixXd F(n, n);
    F.topRows(sys.s) = jac_eigen(sys, k, x);
    if (d > 0) F.bottomRows(d) = Wd;
    Eigen::VectorXd delta = F.fullPivLu().solve(-rho);
    if (!delta.allFinite()) throw OracleFailure(std::string(who) + ": singular Newton step");

    double lambda = 1.0;
    // Positivity first, then demand residual decrease.
    auto positive_at = [&](double l) {
      for (std::size_t i = 0; i < n; ++i)
        if (x[i] + l * delta(i) <= 0.0) return false;
      return true;
    };
    while (lambda > 1e-12 && !positive_at(lambda)) lambda *= 0.5;
    bool accepted = false;
    while (lambda > 1e-12) {
      std::vector<double> xt(n);
      for (std::size_t i = 0; i < n; ++i) xt[i] = x[i] + lambda * delta(i);
      double rt = 0.0, st = 0.0;
      full_residual(xt, rt, st);
      if (rt <= (1.0 - 0.25 * lambda) * rmax || rt <= 1e-12 * std::max(1.0, st)) {
        x = std::move(xt);
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) throw OracleFailure(std::string(who) + ": line search stalled");
  }
  throw OracleFailure(std::string(who) + ": no convergence in " + std::to_string(max_iter) +
                      " iterations");
}

}  // namespace

SteadyStatePoint make_point(const PowerLawSystem& sys, std::vector<double> k,
                            std::vector<double> x, double tol) {
  check_lengths(sys, k.size(), x.size(), "make_point");
  check_positive(k, "make_point");
  check_positive(x, "make_point");
  SteadyStatePoint pt;
  std::vector<double> lam = term_values(sys, k, x);
  residual_and_scale(sys, lam, pt.residual, pt.scale);
  if (pt.residual > tol * std::max(1.0, pt.scale)) {
    std::ostringstream os;
    os << "point rejected: residual " << pt.residual << " exceeds " << tol
       << " relative to term scale " << pt.scale;
    throw DomainError(os.str());
  }
  pt.k = std::move(k);
  pt.x = std::move(x);
  return pt;
}

SteadyStatePoint make_point(const PowerLawSystem& sys, std::vector<Rational> k,
                            std::vector<Rational> x, double tol) {
  check_lengths(sys, k.size(), x.size(), "make_point");
  std::vector<double> kd(k.size()), xd(x.size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] <= 0) throw DomainError("make_point: entries must be positive");
    kd[j] = to_double(k[j]);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0) throw DomainError("make_point: entries must be positive");
    xd[i] = to_double(x[i]);
  }

  if (!sys.integer_exponents()) {
    SteadyStatePoint pt = make_point(sys, std::move(kd), std::move(xd), tol);
    pt.k_exact = std::move(k);
    pt.x_exact = std::move(x);
    return pt;
  }

  // Integer exponents admit an exact residual; borderline floating noise
  // cannot then flip the admission decision.
  SteadyStatePoint pt;
  std::vector<Rational> lam = term_values_exact(sys, k, x);
  Rational residual = 0, scale = 0;
  for (std::size_t a = 0; a < sys.s; ++a) {
    Rational acc = 0;
    for (std::size_t j = 0; j < sys.r; ++j) {
      Rational term = sys.N(a, j) * lam[j];
      acc += term;
      if (abs(term) > scale) scale = abs(term);
    }
    if (abs(acc) > residual) residual = abs(acc);
  }
  pt.residual = to_double(residual);
  pt.scale = to_double(scale);
  if (pt.residual > tol * std::max(1.0, pt.scale)) {
    std::ostringstream os;
    os << "point rejected: residual " << pt.residual << " exceeds " << tol
       << " relative to term scale " << pt.scale;
    throw DomainError(os.str());
  }
  pt.k = std::move(kd);
  pt.x = std::move(xd);
  pt.k_exact = std::move(k);
  pt.x_exact = std::move(x);
  return pt;
}

std::vector<double> eval_g(const PowerLawSystem& sys, const std::vector<double>& k,
                           const std::vector<double>& x) {
  check_lengths(sys, k.size(), x.size(), "eval_g");
  check_positive(k, "eval_g");
  check_positive(x, "eval_g");
  std::vector<double> lam = term_values(sys, k, x);
  std::vector<double> g(sys.s, 0.0);
  for (std::size_t a = 0; a < sys.s; ++a)
    for (std::size_t j = 0; j < sys.r; ++j) g[a] += to_double(sys.N(a, j)) * lam[j];
  return g;
}

std::vector<std::vector<double>> jacobian_at(const PowerLawSystem& sys,
                                             const std::vector<double>& k,
                                             const std::vector<double>& x) {
  check_lengths(sys, k.size(), x.size(), "jacobian_at");
  check_positive(k, "jacobian_at");
  check_positive(x, "jacobian_at");
  return to_rows(jac_eigen(sys, k, x));
}

RationalMatrix jacobian_at_exact(const PowerLawSystem& sys, const std::vector<Rational>& k,
                                 const std::vector<Rational>& x) {
  check_lengths(sys, k.size(), x.size(), "jacobian_at_exact");
  if (!sys.integer_exponents())
    throw DomainError("jacobian_at_exact: requires an integer exponent matrix");
  for (const Rational& e : k)
    if (e <= 0) throw DomainError("jacobian_at_exact: entries must be positive");
  for (const Rational& e : x)
    if (e <= 0) throw DomainError("jacobian_at_exact: entries must be positive");

  std::vector<Rational> lam = term_values_exact(sys, k, x);
  RationalMatrix J(sys.s, sys.n);
  for (std::size_t a = 0; a < sys.s; ++a)
    for (std::size_t i = 0; i < sys.n; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < sys.r; ++j) {
        const Rational& b = sys.B(i, j);
        if (b != 0) acc += sys.N(a, j) * lam[j] * b;
      }
      J(a, i) = acc / x[i];
    }
  return J;
}

std::size_t numeric_rank(const std::vector<std::vector<double>>& rows, double tol) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  Eigen::MatrixXd A(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("numeric_rank: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) A(i, j) = rows[i][j];
  }
  return numeric_rank_eigen(std::move(A), tol);
}

std::string to_string(const Degeneracy& d) {
  std::string s = d.degenerate ? "DEG" : "NONDEG";
  if (d.degenerate_wrt_s) s += *d.degenerate_wrt_s ? ", DEG_WRT_S" : ", NONDEG_WRT_S";
  return s;
}

Degeneracy classify_degeneracy(const PowerLawSystem& sys, const SteadyStatePoint& pt,
                               const std::optional<RationalMatrix>& W, double rank_tol) {
  const RationalMatrix* w = resolve_w(sys, W, "classify_degeneracy");
  Degeneracy out;
  if (pt.k_exact && pt.x_exact && sys.integer_exponents()) {
    out.exact = true;
    RationalMatrix J = jacobian_at_exact(sys, *pt.k_exact, *pt.x_exact);
    out.degenerate = rank(J) < sys.s;
    if (w) out.degenerate_wrt_s = rank(J.stacked(*w)) < sys.n;
    return out;
  }
  Eigen::MatrixXd J = jac_eigen(sys, pt.k, pt.x);
  out.degenerate = numeric_rank_eigen(J, rank_tol) < sys.s;
  if (w) {
    Eigen::MatrixXd aug(J.rows() + w->rows(), sys.n);
    aug.topRows(J.rows()) = J;
    aug.bottomRows(w->rows()) = w_eigen(*w);
    out.degenerate_wrt_s = numeric_rank_eigen(std::move(aug), rank_tol) < sys.n;
  }
  return out;
}

SensitivityPair sensitivity_both(const PowerLawSystem& sys, const SteadyStatePoint& pt,
                                 std::size_t j, const std::optional<RationalMatrix>& W) {
  const RationalMatrix* w = resolve_w(sys, W, "sensitivity");
  if (!w) throw DomainError("sensitivity: no conservation matrix available");
  const std::size_t n = sys.n, s = sys.s, d = w->rows();
  if (s + d != n)
    throw DimensionError("sensitivity: conservation matrix must have n - s rows");
  if (d == 0)
    throw DomainError(
        "sensitivity: no conserved totals to perturb (d = 0); all sensitivities are "
        "vacuously zero");
  if (j >= d) throw DimensionError("sensitivity: perturbation index out of range");

  Degeneracy deg = classify_degeneracy(sys, pt, W);
  if (deg.degenerate_wrt_s.value_or(true))
    throw DomainError(
        "sensitivity: point is degenerate with respect to its compatibility class; the "
        "defining linear system is singular");

  Eigen::MatrixXd F(n, n);
  F.topRows(s) = jac_eigen(sys, pt.k, pt.x);
  F.bottomRows(d) = w_eigen(*w);

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(s + j) = 1.0;
  Eigen::VectorXd sol = F.fullPivLu().solve(rhs);

  const double detF = F.determinant();
  std::vector<double> cram(n);
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::MatrixXd M(n - 1, n - 1);
    Eigen::Index mr = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (a == s + j) continue;
      Eigen::Index mc = 0;
      for (std::size_t b = 0; b < n; ++b) {
        if (b == i) continue;
        M(mr, mc++) = F(a, b);
      }
      ++mr;
    }
    const double sign = ((i + j + n - d) % 2 == 0) ? 1.0 : -1.0;
    cram[i] = sign * (n == 1 ? 1.0 : M.determinant()) / detF;
  }

  SensitivityPair pair;
  pair.solve.values.assign(sol.data(), sol.data() + n);
  pair.solve.method = SensitivityVector::Method::Solve;
  pair.cramer.values = cram;
  pair.cramer.method = SensitivityVector::Method::Cramer;
  pair.solve.perturbation.assign(d, 0.0);
  pair.solve.perturbation[j] = 1.0;
  pair.cramer.perturbation = pair.solve.perturbation;

  for (std::size_t i = 0; i < n; ++i) {
    double tol = 1e-9 * std::max({1.0, std::fabs(cram[i]), std::fabs(sol(i))});
    if (std::fabs(cram[i] - sol(i)) > tol) {
      std::ostringstream os;
      os << "sensitivity: cofactor and solve computations disagree at coordinate " << i + 1
         << " (" << cram[i] << " vs " << sol(i) << ")";
      throw Error(os.str());
    }
  }
  return pair;
}

SensitivityVector sensitivity_canonical(const PowerLawSystem& sys, const SteadyStatePoint& pt,
                                        std::size_t j, const std::optional<RationalMatrix>& W) {
  return sensitivity_both(sys, pt, j, W).solve;
}

SensitivityVector sensitivity_general(const std::vector<SensitivityVector>& canon,
                                      const std::vector<double>& gamma_prime) {
  if (canon.size() != gamma_prime.size())
    throw DimensionError("sensitivity_general: one weight per canonical direction");
  if (canon.empty())
    throw DimensionError("sensitivity_general: empty perturbation space (d = 0)");
  const std::size_t n = canon.front().values.size();
  SensitivityVector out;
  out.values.assign(n, 0.0);
  out.perturbation = gamma_prime;
  out.method = canon.front().method;
  for (std::size_t t = 0; t < canon.size(); ++t) {
    if (canon[t].values.size() != n)
      throw DimensionError("sensitivity_general: inconsistent vector lengths");
    for (std::size_t i = 0; i < n; ++i) out.values[i] += gamma_prime[t] * canon[t].values[i];
  }
  return out;
}

std::vector<double> state_perturbation_direction(const RationalMatrix& W,
                                                 const std::vector<double>& dir) {
  if (dir.size() != W.cols())
    throw DimensionError("state_perturbation_direction: direction has wrong length");
  std::vector<double> out(W.rows(), 0.0);
  for (std::size_t t = 0; t < W.rows(); ++t)
    for (std::size_t i = 0; i < W.cols(); ++i) out[t] += to_double(W(t, i)) * dir[i];
  return out;
}

bool zero_sensitivity_test(const PowerLawSystem& sys, const SteadyStatePoint& pt,
                           std::size_t i, const std::optional<RationalMatrix>& W,
                           double rank_tol) {
  if (i >= sys.n) throw DimensionError("zero_sensitivity_test: coordinate out of range");
  const RationalMatrix* w = resolve_w(sys, W, "zero_sensitivity_test");
  if (!w)
    throw DomainError(
        "zero_sensitivity_test: needs a conservation matrix to check the nondegeneracy "
        "hypothesis");
  Degeneracy deg = classify_degeneracy(sys, pt, W, rank_tol);
  if (deg.degenerate_wrt_s.value_or(true))
    throw DomainError(
        "zero_sensitivity_test: the rank criterion assumes a point that is nondegenerate "
        "with respect to its compatibility class");

  if (deg.exact) {
    RationalMatrix J = jacobian_at_exact(sys, *pt.k_exact, *pt.x_exact);
    RationalMatrix Ji(sys.s, sys.n - 1);
    for (std::size_t a = 0; a < sys.s; ++a) {
      std::size_t c = 0;
      for (std::size_t b = 0; b < sys.n; ++b) {
        if (b == i) continue;
        Ji(a, c++) = J(a, b);
      }
    }
    return rank(Ji) < sys.s;
  }

  Eigen::MatrixXd J = jac_eigen(sys, pt.k, pt.x);
  double j_norm = 0.0;
  for (Eigen::Index a = 0; a < J.rows(); ++a) j_norm = std::max(j_norm, J.row(a).norm());
  Eigen::MatrixXd Ji(sys.s, sys.n - 1);
  Eigen::Index c = 0;
  for (std::size_t b = 0; b < sys.n; ++b) {
    if (b == i) continue;
    Ji.col(c++) = J.col(b);
  }
  // Anchor at the full Jacobian's scale: when column i carried all the
  // weight, the leftover entries are noise and must not count as a pivot.
  return numeric_rank_eigen(std::move(Ji), rank_tol, j_norm) < sys.s;
}

SteadyStatePoint find_steady_state(const PowerLawSystem& sys, const std::vector<double>& k,
                                   const std::vector<double>& x_seed,
                                   const std::optional<RationalMatrix>& W, int max_iter) {
  check_lengths(sys, k.size(), x_seed.size(), "find_steady_state");
  check_positive(k, "find_steady_state");
  const RationalMatrix* w = resolve_w(sys, W, "find_steady_state");
  if (!w && sys.s < sys.n)
    throw DomainError(
        "find_steady_state: underdetermined without a conservation matrix (s < n)");

  Eigen::MatrixXd Wd = w ? w_eigen(*w) : Eigen::MatrixXd(0, sys.n);
  Eigen::VectorXd T(Wd.rows());
  for (Eigen::Index t = 0; t < Wd.rows(); ++t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < sys.n; ++i) acc += Wd(t, i) * x_seed[i];
    T(t) = acc;
  }
  std::vector<double> x =
      newton_solve(sys, k, x_seed, Wd, T, max_iter, "find_steady_state");
  return make_point(sys, k, x);
}

std::vector<double> continuation_oracle(const PowerLawSystem& sys, const SteadyStatePoint& pt,
                                        std::size_t j, double h,
                                        const std::optional<RationalMatrix>& W) {
  const RationalMatrix* w = resolve_w(sys, W, "continuation_oracle");
  if (!w) throw DomainError("continuation_oracle: no conservation matrix available");
  if (!(h > 0.0)) throw DomainError("continuation_oracle: step must be positive");
  const std::size_t d = w->rows();
  if (j >= d) throw DimensionError("continuation_oracle: perturbation index out of range");

  Degeneracy deg = classify_degeneracy(sys, pt, W);
  if (deg.degenerate_wrt_s.value_or(true))
    throw DomainError("continuation_oracle: point is degenerate with respect to its "
                      "compatibility class");

  Eigen::MatrixXd Wd = w_eigen(*w);
  Eigen::VectorXd T(d);
  for (std::size_t t = 0; t < d; ++t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < sys.n; ++i) acc += Wd(t, i) * pt.x[i];
    T(t) = acc;
  }

  Eigen::VectorXd Tp = T, Tm = T;
  Tp(j) += h;
  Tm(j) -= h;
  std::vector<double> xp = newton_solve(sys, pt.k, pt.x, Wd, Tp, 50, "continuation_oracle");
  std::vector<double> xm = newton_solve(sys, pt.k, pt.x, Wd, Tm, 50, "continuation_oracle");
  std::vector<double> fd(sys.n);
  for (std::size_t i = 0; i < sys.n; ++i) fd[i] = (xp[i] - xm[i]) / (2.0 * h);
  return fd;
}

}  // namespace acr
