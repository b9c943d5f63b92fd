#include "support/fixtures.hpp"

#include <sstream>

#include "acr/errors.hpp"
#include "acr/multipoly.hpp"
#include "acr/parser.hpp"

namespace acr::testing {

RationalMatrix int_matrix(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return RationalMatrix::from_rows(out);
}

RationalMatrix rational_matrix(const std::vector<std::string>& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& line : rows) {
    std::istringstream in(line);
    std::vector<Rational> row;
    std::string tok;
    while (in >> tok) {
      auto q = parse_rational(tok);
      if (!q) throw DomainError("fixture: bad rational '" + tok + "'");
      row.push_back(*q);
    }
    out.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(out);
}

namespace {

std::vector<Int> ints(std::vector<int> v) { return {v.begin(), v.end()}; }

}  // namespace

std::string two_species_text() {
  return "species: X1, X2\n"
         "X1 + X2 -> 2 X2 ; k1\n"
         "X2 -> X1 ; k2\n";
}

Network two_species_network() {
  Network net;
  net.species = {"X1", "X2"};
  net.reactions = {{ints({1, 1}), ints({0, 2}), "k1"},
                   {ints({0, 1}), ints({1, 0}), "k2"}};
  return net;
}

PowerLawSystem two_species_system() { return build_system(two_species_network()); }

PowerLawSystem two_species_raw() {
  return raw_system(int_matrix({{1, -1}}), int_matrix({{1, 0}, {1, 1}}),
                    int_matrix({{1, 1}}));
}

std::string idhkp_text() {
  return "species: X1, X2, X3, X4, X5\n"
         "X1 + X2 <=> X3 ; k1, k2\n"
         "X3 -> X1 + X4 ; k3\n"
         "X3 + X4 <=> X5 ; k4, k5\n"
         "X5 -> X2 + X3 ; k6\n";
}

Network idhkp_network() { return parse_network(idhkp_text()); }

PowerLawSystem idhkp_system() { return build_system(idhkp_network()); }

SymbolicSystem idhkp_symbolic() {
  auto vars = std::make_shared<const VarSet>(idhkp_symbol_names());
  PolyMatrix b(vars, 5, 6);
  // One symbol per nonzero mass-action exponent, named b<i><j>.
  const std::vector<std::pair<std::size_t, std::size_t>> support = {
      {0, 0}, {1, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 3}, {4, 4}, {4, 5}};
  for (std::size_t t = 0; t < support.size(); ++t)
    b(support[t].first, support[t].second) = MultiPoly::variable(vars, t);
  return SymbolicSystem{idhkp_system().N, b};
}

std::vector<std::string> idhkp_symbol_names() {
  return {"b11", "b21", "b32", "b33", "b34", "b44", "b55", "b56"};
}

std::string rank1_text() {
  return "3 X1 + X2 -> 4 X1 ; k1\n"
         "2 X1 + X2 -> 3 X2 ; k2\n"
         "X1 + X2 -> 2 X1 ; k3\n";
}

Network rank1_network() { return parse_network(rank1_text()); }

PowerLawSystem rank1_system() {
  return raw_system(int_matrix({{1, -2, 1}}), int_matrix({{3, 2, 1}, {1, 1, 1}}));
}

PowerLawSystem free_kernel_system() {
  return raw_system(int_matrix({{-1, 1, 1, 0}, {0, 0, 1, -1}}),
                    int_matrix({{1, 1, 0, 1}, {0, 0, 1, 1}, {2, 2, 0, 2}}));
}

PowerLawSystem divisible_trap_system() {
  return raw_system(int_matrix({{1, -1}}), int_matrix({{1, 0}, {1, 0}}),
                    int_matrix({{0, 1}}));
}

PowerLawSystem degenerate_pair_system() {
  // Columns are monomials x^(col of B) with the two coefficient rows of N;
  // at x = (3/5, 4/5, 1) both polynomials vanish exactly and the Jacobian
  // has rank 1.
  return raw_system(
      int_matrix({{1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0},
                  {0, 0, -2, 0, 1, 2, 1, -2, 1, -2, 2}}),
      int_matrix({{2, 0, 2, 0, 4, 2, 0, 0, 0, 0, 0},
                  {0, 1, 0, 1, 0, 2, 4, 2, 0, 0, 0},
                  {1, 1, 0, 0, 0, 0, 0, 0, 2, 1, 0}}));
}

PowerLawSystem root_shift_system() {
  return raw_system(int_matrix({{1, -2, 1}}),
                    rational_matrix({"1 2/3 -1/3", "2/3 2/3 2/3"}));
}

PowerLawSystem finite_fiber_system() {
  return raw_system(int_matrix({{1, -1, 0}, {0, 1, -1}}),
                    int_matrix({{1, 0, 0}, {0, 1, 0}}));
}

std::string decay_text() { return "X1 -> 0 ; k1\n"; }

PowerLawSystem decay_system() { return build_system(parse_network(decay_text())); }

}  // namespace acr::testing
