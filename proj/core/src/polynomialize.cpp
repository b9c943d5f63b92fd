#include "acr/polynomialize.hpp"

#include <algorithm>
#include <cmath>

#include "acr/errors.hpp"

namespace acr {

GenPolySystem as_gen_poly(const PowerLawSystem& sys) {
  return as_gen_poly(sys, std::vector<Rational>(sys.r, Rational(1)));
}

GenPolySystem as_gen_poly(const PowerLawSystem& sys, const std::vector<Rational>& k) {
  if (k.size() != sys.r) throw DimensionError("as_gen_poly: k must have r entries");
  GenPolySystem g;
  g.vars = sys.species;
  g.coeffs = sys.N;
  for (std::size_t j = 0; j < sys.r; ++j)
    for (std::size_t i = 0; i < g.coeffs.rows(); ++i) g.coeffs(i, j) *= k[j];
  g.exponents = sys.B;
  return g;
}

PolynomializedSystem polynomialize(const GenPolySystem& g) {
  if (g.coeffs.cols() != g.exponents.cols())
    throw DimensionError("polynomialize: coefficient/exponent column mismatch");

  // Columns whose coefficients all vanish contribute nothing; their
  // exponents must not influence the substitution.
  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < g.r(); ++j)
    for (std::size_t i = 0; i < g.s(); ++i)
      if (g.coeffs(i, j) != 0) {
        live.push_back(j);
        break;
      }

  PolynomializedSystem p;
  p.original = g;
  p.zvars = VarSet::numbered("z", g.n());

  // m_j: lcm of the exponent denominators of variable j across every live term.
  p.m.assign(g.n(), Int(1));
  for (std::size_t j = 0; j < g.n(); ++j)
    for (std::size_t t : live)
      p.m[j] = boost::multiprecision::lcm(p.m[j], den(g.exponents(j, t)));

  // Scaled integer exponents: mE(j,t) = m_j * exponents(j,t).
  auto scaled = [&](std::size_t j, std::size_t t) {
    Rational v = g.exponents(j, t) * Rational(p.m[j]);
    return num(v);  // integral by construction
  };

  // beta(i)_j = max(0, -min over live terms of equation i).
  p.beta = RationalMatrix(g.s(), g.n());
  for (std::size_t i = 0; i < g.s(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j) {
      Int lo = 0;
      for (std::size_t t : live)
        if (g.coeffs(i, t) != 0) lo = std::min(lo, scaled(j, t));
      p.beta(i, j) = Rational(-lo);
    }

  p.gtilde.reserve(g.s());
  for (std::size_t i = 0; i < g.s(); ++i) {
    MultiPoly gi(p.zvars);
    for (std::size_t t : live) {
      if (g.coeffs(i, t) == 0) continue;
      MultiPoly::Exponents e(g.n());
      for (std::size_t j = 0; j < g.n(); ++j)
        e[j] = static_cast<int>(scaled(j, t) + num(p.beta(i, j)));
      gi += MultiPoly::monomial(p.zvars, std::move(e), g.coeffs(i, t));
    }
    p.gtilde.push_back(std::move(gi));
  }

  p.identity = p.beta.is_zero() &&
               std::all_of(p.m.begin(), p.m.end(), [](const Int& v) { return v == 1; });
  return p;
}

std::vector<double> phi(const PolynomializedSystem& p, const std::vector<double>& z) {
  if (z.size() != p.m.size()) throw DimensionError("phi: wrong point length");
  std::vector<double> x(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (!(z[j] > 0)) throw DomainError("phi: point must be strictly positive");
    x[j] = std::pow(z[j], p.m[j].convert_to<double>());
  }
  return x;
}

std::vector<double> phi_inverse(const PolynomializedSystem& p, const std::vector<double>& x) {
  if (x.size() != p.m.size()) throw DimensionError("phi_inverse: wrong point length");
  std::vector<double> z(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] > 0)) throw DomainError("phi_inverse: point must be strictly positive");
    z[j] = std::pow(x[j], 1.0 / p.m[j].convert_to<double>());
  }
  return z;
}

std::vector<double> eval(const GenPolySystem& g, const std::vector<double>& x) {
  if (x.size() != g.n()) throw DimensionError("eval: wrong point length");
  for (double v : x)
    if (!(v > 0)) throw DomainError("eval: point must be strictly positive");
  std::vector<double> out(g.s(), 0.0);
  for (std::size_t t = 0; t < g.r(); ++t) {
    double mono = 1.0;
    for (std::size_t j = 0; j < g.n(); ++j)
      mono *= std::pow(x[j], to_double(g.exponents(j, t)));
    for (std::size_t i = 0; i < g.s(); ++i) out[i] += to_double(g.coeffs(i, t)) * mono;
  }
  return out;
}

std::vector<std::vector<double>> jacobian(const GenPolySystem& g, const std::vector<double>& x) {
  if (x.size() != g.n()) throw DimensionError("jacobian: wrong point length");
  for (double v : x)
    if (!(v > 0)) throw DomainError("jacobian: point must be strictly positive");
  std::vector<std::vector<double>> out(g.s(), std::vector<double>(g.n(), 0.0));
  for (std::size_t t = 0; t < g.r(); ++t) {
    double mono = 1.0;
    for (std::size_t j = 0; j < g.n(); ++j)
      mono *= std::pow(x[j], to_double(g.exponents(j, t)));
    for (std::size_t j = 0; j < g.n(); ++j) {
      double factor = to_double(g.exponents(j, t)) * mono / x[j];
      for (std::size_t i = 0; i < g.s(); ++i)
        out[i][j] += to_double(g.coeffs(i, t)) * factor;
    }
  }
  return out;
}

}  // namespace acr
