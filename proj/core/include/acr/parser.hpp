#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "acr/errors.hpp"
#include "acr/network.hpp"

namespace acr {

// Reported with 1-based line/column and the offending source line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::string snippet);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& snippet() const { return snippet_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_, column_;
  std::string snippet_;
};

// Either a reaction-network file (with an optional explicit kinetics block)
// or a raw-matrix file (N:/B: blocks, optional W: block).
struct ParsedInput {
  enum class Kind { NetworkFile, RawMatrices };
  Kind kind = Kind::NetworkFile;

  // NetworkFile
  Network network;
  std::optional<RationalMatrix> kinetics;  // n x r exponents when a kinetics block is present

  // RawMatrices
  RationalMatrix N, B;
  std::optional<RationalMatrix> W;
};

// Reaction-network text:
//   # comment
//   species: E, S, ES            (optional; otherwise first-appearance order)
//   E + S -> ES ; k1
//   ES <=> E + S ; kr, kf        (sugar: forward then reverse)
//   0 -> E                       ('0' is the empty complex; rate auto-named)
// Coefficients default to 1 ("2 X" or "2X"). Species names match
// [A-Za-z_][A-Za-z0-9_]*. Throws ParseError with position on any problem.
Network parse_network(std::string_view text);

// 'kinetics:' block (header optional in standalone use): n rows of r
// rationals overriding the mass-action exponents of `net`.
RationalMatrix parse_kinetics(std::string_view text, const Network& net);

// Whole-file driver: dispatches on the first significant line ("N:" starts a
// raw-matrix file) and splits off a trailing kinetics block for network
// files. Error positions refer to the original text.
ParsedInput parse_input(std::string_view text);

// ParsedInput -> PowerLawSystem (mass-action unless a kinetics block or raw
// exponents say otherwise).
PowerLawSystem build_from_input(const ParsedInput& input);

// Canonical textual form; parse_network(print_network(net)) == net.
std::string print_network(const Network& net);

}  // namespace acr
