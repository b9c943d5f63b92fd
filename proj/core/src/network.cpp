#include "acr/network.hpp"

#include <set>

#include "acr/errors.hpp"

namespace acr {

RationalMatrix Network::stoichiometric_matrix() const {
  RationalMatrix g(n(), r());
  for (std::size_t j = 0; j < r(); ++j)
    for (std::size_t i = 0; i < n(); ++i)
      g(i, j) = Rational(reactions[j].product[i] - reactions[j].reactant[i]);
  return g;
}

RationalMatrix Network::mass_action_exponents() const {
  RationalMatrix b(n(), r());
  for (std::size_t j = 0; j < r(); ++j)
    for (std::size_t i = 0; i < n(); ++i) b(i, j) = Rational(reactions[j].reactant[i]);
  return b;
}

void Network::validate() const {
  if (species.empty()) throw DomainError("network has no species");
  if (reactions.empty()) throw DomainError("network has no reactions");
  std::set<std::string> seen(species.begin(), species.end());
  if (seen.size() != species.size()) throw DomainError("duplicate species name");
  std::set<std::string> rate_names;
  for (const auto& rx : reactions) {
    if (rx.reactant.size() != n() || rx.product.size() != n())
      throw DomainError("reaction coefficient vector has wrong length");
    for (const auto& c : rx.reactant)
      if (c < 0) throw DomainError("negative stoichiometric coefficient");
    for (const auto& c : rx.product)
      if (c < 0) throw DomainError("negative stoichiometric coefficient");
    if (rx.reactant == rx.product)
      throw DomainError("null reaction: reactant and product complexes coincide");
    if (!rate_names.insert(rx.rate_name).second)
      throw DomainError("duplicate rate name '" + rx.rate_name + "'");
  }
}

bool PowerLawSystem::integer_exponents() const {
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j)
      if (!is_integer(B(i, j))) return false;
  return true;
}

namespace {

PowerLawSystem finish_build(const Network& net, RationalMatrix exponents, bool mass_action) {
  net.validate();
  if (exponents.rows() != net.n() || exponents.cols() != net.r())
    throw DimensionError("exponent matrix must be n x r");

  PowerLawSystem sys;
  sys.species = net.species;
  for (const auto& rx : net.reactions) sys.rates.push_back(rx.rate_name);
  sys.gamma = net.stoichiometric_matrix();
  if (sys.gamma->is_zero())
    throw DomainError("stoichiometric matrix is zero: every reaction is trivial");
  sys.B = std::move(exponents);
  sys.mass_action = mass_action;

  RowSelection sel = select_independent_rows(*sys.gamma);
  sys.N = sel.submatrix;
  sys.selected_rows = sel.indices;
  sys.W = left_kernel_basis(*sys.gamma);
  sys.has_w = true;

  sys.n = net.n();
  sys.r = net.r();
  sys.s = sys.N.rows();
  sys.d = sys.n - sys.s;
  return sys;
}

}  // namespace

PowerLawSystem build_system(const Network& net) {
  return finish_build(net, net.mass_action_exponents(), true);
}

PowerLawSystem build_system(const Network& net, const RationalMatrix& exponents) {
  return finish_build(net, exponents, false);
}

PowerLawSystem raw_system(const RationalMatrix& N, const RationalMatrix& B,
                          std::optional<RationalMatrix> W,
                          std::vector<std::string> species, std::vector<std::string> rates) {
  if (N.rows() == 0 || N.cols() == 0) throw DomainError("raw system: N is empty");
  if (B.rows() == 0) throw DomainError("raw system: B is empty");
  if (B.cols() != N.cols())
    throw DimensionError("raw system: N and B must have the same number of columns");
  if (N.rows() > B.rows())
    throw DimensionError("raw system: more equations than species");
  if (rank(N) != N.rows())
    throw DomainError("raw system: N must have independent rows");

  PowerLawSystem sys;
  sys.n = B.rows();
  sys.r = B.cols();
  sys.s = N.rows();
  sys.d = sys.n - sys.s;
  sys.N = N;
  sys.B = B;

  if (species.empty())
    for (std::size_t i = 1; i <= sys.n; ++i) species.push_back("x" + std::to_string(i));
  if (rates.empty())
    for (std::size_t j = 1; j <= sys.r; ++j) rates.push_back("k" + std::to_string(j));
  if (species.size() != sys.n) throw DimensionError("raw system: species name count != n");
  if (rates.size() != sys.r) throw DimensionError("raw system: rate name count != r");
  sys.species = std::move(species);
  sys.rates = std::move(rates);

  if (W) {
    if (W->rows() != sys.d || W->cols() != sys.n)
      throw DimensionError("raw system: W must be (n - s) x n");
    if (rank(*W) != sys.d) throw DomainError("raw system: W must have independent rows");
    sys.W = std::move(*W);
    sys.has_w = true;
  }
  return sys;
}

}  // namespace acr
