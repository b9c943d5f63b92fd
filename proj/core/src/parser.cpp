#include "acr/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace acr {
namespace {

std::string format_message(const std::string& message, std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column,
                       std::string snippet)
    : Error(format_message(message, line, column)),
      message_(message),
      line_(line),
      column_(column),
      snippet_(std::move(snippet)) {}

namespace {

struct Line {
  std::string content;  // comment stripped, \r removed
  std::string raw;      // original text for snippets
  std::size_t number;   // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view raw = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string content(raw);
    if (auto hash = content.find('#'); hash != std::string::npos) content.resize(hash);
    lines.push_back(Line{std::move(content), std::string(raw), number});
    if (end == std::string_view::npos) break;
    start = end + 1;
    ++number;
  }
  return lines;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

bool is_ident(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && s.front() != '_') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

class SpeciesTable {
 public:
  void declare(const std::string& name) {
    names_.push_back(name);
    index_.emplace(name, names_.size() - 1);
    declared_ = true;
  }

  std::size_t resolve(const std::string& name, const Line& line, std::size_t col) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    if (declared_)
      throw ParseError("species '" + name + "' not in the species header", line.number, col,
                       line.raw);
    names_.push_back(name);
    index_.emplace(name, names_.size() - 1);
    return names_.size() - 1;
  }

  bool contains(const std::string& name) const { return index_.count(name) > 0; }
  const std::vector<std::string>& names() const { return names_; }
  bool declared() const { return declared_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  bool declared_ = false;
};

// Complex as (species index, coefficient) pairs; densified once the final
// species count is known.
using RawComplex = std::vector<std::pair<std::size_t, Int>>;

// `offset` is the position of `text` inside line.content (for error columns).
RawComplex parse_complex(std::string_view text, std::size_t offset, const Line& line,
                         SpeciesTable& species) {
  RawComplex result;
  std::size_t lead = 0;
  std::string_view whole = trim(text, &lead);
  if (whole.empty())
    throw ParseError("empty complex (use '0' for no species)", line.number, offset + lead + 1,
                     line.raw);
  if (whole == "0") return result;

  std::size_t pos = 0;  // within text
  for (std::string_view part : split_on(text, '+')) {
    std::size_t part_lead = 0;
    std::string_view term = trim(part, &part_lead);
    std::size_t col = offset + pos + part_lead + 1;  // 1-based
    if (term.empty()) throw ParseError("dangling '+' in complex", line.number, col, line.raw);
    if (term == "0")
      throw ParseError("'0' denotes the empty complex and cannot be combined", line.number, col,
                       line.raw);

    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits])))
      ++digits;
    Int coeff = 1;
    std::string_view name = term;
    if (digits > 0) {
      coeff = Int{std::string(term.substr(0, digits))};
      std::size_t name_lead = 0;
      name = trim(term.substr(digits), &name_lead);
      if (coeff == 0)
        throw ParseError("coefficient must be positive (use '0' alone for the empty complex)",
                         line.number, col, line.raw);
      if (name.empty())
        throw ParseError("coefficient without species name", line.number, col, line.raw);
      col += digits + name_lead;
    }
    if (!is_ident(name))
      throw ParseError("invalid species name '" + std::string(name) + "'", line.number, col,
                       line.raw);

    std::size_t idx = species.resolve(std::string(name), line, col);
    bool merged = false;
    for (auto& [i, c] : result)
      if (i == idx) {
        c += coeff;
        merged = true;
        break;
      }
    if (!merged) result.emplace_back(idx, coeff);
    pos += part.size() + 1;
  }
  return result;
}

std::vector<Int> densify(const RawComplex& c, std::size_t n) {
  std::vector<Int> v(n, Int(0));
  for (const auto& [i, coeff] : c) v[i] = coeff;
  return v;
}

struct PendingReaction {
  RawComplex reactant, product;
  std::string rate_name;  // empty: auto-name k<index> after parsing
  std::size_t line_number;
  std::string raw_line;
};

Network parse_network_lines(const std::vector<Line>& lines) {
  SpeciesTable species;
  std::vector<PendingReaction> pending;
  bool seen_reaction = false;

  for (const Line& line : lines) {
    if (is_blank(line.content)) continue;
    std::size_t lead = 0;
    std::string_view body = trim(line.content, &lead);

    if (body.rfind("species:", 0) == 0) {
      if (seen_reaction || species.declared())
        throw ParseError("species header must come first and appear once", line.number, lead + 1,
                         line.raw);
      std::string_view rest = body.substr(8);
      std::size_t pos = lead + 8;
      for (std::string_view part : split_on(rest, ',')) {
        std::size_t part_lead = 0;
        std::string_view name = trim(part, &part_lead);
        std::size_t col = pos + part_lead + 1;
        if (!is_ident(name))
          throw ParseError("invalid species name '" + std::string(name) + "'", line.number, col,
                           line.raw);
        if (species.contains(std::string(name)))
          throw ParseError("duplicate species '" + std::string(name) + "'", line.number, col,
                           line.raw);
        species.declare(std::string(name));
        pos += part.size() + 1;
      }
      continue;
    }
    seen_reaction = true;

    const std::string& content = line.content;
    bool reversible = false;
    std::size_t arrow = content.find("<=>");
    std::size_t arrow_len = 3;
    if (arrow == std::string::npos) {
      arrow = content.find("->");
      arrow_len = 2;
      if (arrow == std::string::npos)
        throw ParseError("expected '->' or '<=>'", line.number, lead + 1, line.raw);
    } else {
      reversible = true;
    }

    std::string_view after = std::string_view(content).substr(arrow + arrow_len);
    std::size_t semi_rel = after.find(';');
    std::string_view product_text =
        semi_rel == std::string_view::npos ? after : after.substr(0, semi_rel);

    RawComplex reactant =
        parse_complex(std::string_view(content).substr(0, arrow), 0, line, species);
    RawComplex product = parse_complex(product_text, arrow + arrow_len, line, species);

    std::vector<std::string> rate_names;
    if (semi_rel != std::string_view::npos) {
      std::size_t rate_off = arrow + arrow_len + semi_rel + 1;
      std::string_view rates_text = std::string_view(content).substr(rate_off);
      std::size_t pos = 0;
      for (std::string_view part : split_on(rates_text, ',')) {
        std::size_t part_lead = 0;
        std::string_view name = trim(part, &part_lead);
        std::size_t col = rate_off + pos + part_lead + 1;
        if (!is_ident(name))
          throw ParseError("invalid rate name '" + std::string(name) + "'", line.number, col,
                           line.raw);
        rate_names.emplace_back(name);
        pos += part.size() + 1;
      }
      std::size_t expected = reversible ? 2 : 1;
      if (rate_names.size() != expected)
        throw ParseError(reversible ? "'<=>' takes two rate names: '; kf, kr'"
                                    : "'->' takes one rate name",
                         line.number, rate_off + 1, line.raw);
    }

    if (reactant == product)
      throw ParseError("null reaction: both sides are the same complex", line.number, lead + 1,
                       line.raw);

    pending.push_back(PendingReaction{reactant, product,
                                      rate_names.empty() ? "" : rate_names[0], line.number,
                                      line.raw});
    if (reversible)
      pending.push_back(PendingReaction{product, reactant,
                                        rate_names.empty() ? "" : rate_names[1], line.number,
                                        line.raw});
  }

  if (pending.empty()) throw ParseError("no reactions found", 1, 1, "");

  Network net;
  net.species = species.names();
  std::map<std::string, std::size_t> rate_lines;
  for (std::size_t j = 0; j < pending.size(); ++j) {
    PendingReaction& p = pending[j];
    if (p.rate_name.empty()) p.rate_name = "k" + std::to_string(j + 1);
    auto [it, inserted] = rate_lines.emplace(p.rate_name, p.line_number);
    if (!inserted)
      throw ParseError("duplicate rate name '" + p.rate_name + "' (also line " +
                           std::to_string(it->second) + ")",
                       p.line_number, 1, p.raw_line);
    net.reactions.push_back(Reaction{densify(p.reactant, net.species.size()),
                                     densify(p.product, net.species.size()), p.rate_name});
  }
  return net;
}

std::vector<Rational> parse_rational_row(const Line& line) {
  std::vector<Rational> row;
  std::size_t i = 0;
  const std::string& s = line.content;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::string token = s.substr(start, i - start);
    auto q = parse_rational(token);
    if (!q)
      throw ParseError("expected a rational number, got '" + token + "'", line.number, start + 1,
                       line.raw);
    row.push_back(*q);
  }
  return row;
}

RationalMatrix parse_matrix_rows(const std::vector<const Line*>& lines, const std::string& what) {
  std::vector<std::vector<Rational>> rows;
  for (const Line* line : lines) {
    std::vector<Rational> row = parse_rational_row(*line);
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(what + " rows have inconsistent lengths", line->number, 1, line->raw);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(what + " block is empty", 1, 1, "");
  return RationalMatrix::from_rows(rows);
}

ParsedInput parse_raw_lines(const std::vector<Line>& lines) {
  std::map<std::string, std::vector<const Line*>> blocks;
  std::string current;
  for (const Line& line : lines) {
    if (is_blank(line.content)) continue;
    std::size_t lead = 0;
    std::string_view body = trim(line.content, &lead);
    if (body == "N:" || body == "B:" || body == "W:") {
      current = std::string(body.substr(0, 1));
      if (blocks.count(current))
        throw ParseError("duplicate '" + current + ":' block", line.number, lead + 1, line.raw);
      blocks[current];
      continue;
    }
    if (current.empty())
      throw ParseError("expected 'N:', 'B:' or 'W:' block header", line.number, lead + 1,
                       line.raw);
    blocks[current].push_back(&line);
  }
  if (!blocks.count("N")) throw ParseError("missing 'N:' block", 1, 1, "");
  if (!blocks.count("B")) throw ParseError("missing 'B:' block", 1, 1, "");

  ParsedInput input;
  input.kind = ParsedInput::Kind::RawMatrices;
  input.N = parse_matrix_rows(blocks["N"], "N");
  input.B = parse_matrix_rows(blocks["B"], "B");
  if (blocks.count("W")) input.W = parse_matrix_rows(blocks["W"], "W");
  return input;
}

RationalMatrix parse_kinetics_lines(const std::vector<const Line*>& lines, const Network& net) {
  std::vector<std::vector<Rational>> rows;
  const Line* last = nullptr;
  for (const Line* line : lines) {
    std::vector<Rational> row = parse_rational_row(*line);
    if (row.empty()) continue;
    last = line;
    if (rows.size() == net.n())
      throw ParseError("kinetics block has more than n = " + std::to_string(net.n()) + " rows",
                       line->number, 1, line->raw);
    if (row.size() != net.r())
      throw ParseError("kinetics row needs r = " + std::to_string(net.r()) + " entries, got " +
                           std::to_string(row.size()),
                       line->number, 1, line->raw);
    rows.push_back(std::move(row));
  }
  if (rows.size() != net.n())
    throw ParseError("kinetics block needs n = " + std::to_string(net.n()) + " rows, got " +
                         std::to_string(rows.size()),
                     last ? last->number : 1, 1, last ? last->raw : "");
  return RationalMatrix::from_rows(rows);
}

bool starts_raw(const std::vector<Line>& lines) {
  for (const Line& line : lines) {
    if (is_blank(line.content)) continue;
    return trim(line.content) == "N:";
  }
  return false;
}

}  // namespace

Network parse_network(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  for (const Line& line : lines)
    if (trim(line.content).rfind("kinetics:", 0) == 0)
      throw ParseError("unexpected kinetics block (parse the whole file with parse_input)",
                       line.number, 1, line.raw);
  return parse_network_lines(lines);
}

RationalMatrix parse_kinetics(std::string_view text, const Network& net) {
  std::vector<Line> lines = split_lines(text);
  std::vector<const Line*> body;
  bool skipped_header = false;
  for (const Line& line : lines) {
    if (is_blank(line.content)) continue;
    if (!skipped_header && trim(line.content) == "kinetics:") {
      skipped_header = true;
      continue;
    }
    skipped_header = true;
    body.push_back(&line);
  }
  return parse_kinetics_lines(body, net);
}

ParsedInput parse_input(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  if (starts_raw(lines)) return parse_raw_lines(lines);

  std::vector<Line> network_part;
  std::vector<const Line*> kinetics_part;
  bool in_kinetics = false;
  for (const Line& line : lines) {
    if (!in_kinetics && trim(line.content) == "kinetics:") {
      in_kinetics = true;
      continue;
    }
    if (in_kinetics) {
      if (!is_blank(line.content)) kinetics_part.push_back(&line);
    } else {
      network_part.push_back(line);
    }
  }

  ParsedInput input;
  input.kind = ParsedInput::Kind::NetworkFile;
  input.network = parse_network_lines(network_part);
  if (in_kinetics) input.kinetics = parse_kinetics_lines(kinetics_part, input.network);
  return input;
}

PowerLawSystem build_from_input(const ParsedInput& input) {
  if (input.kind == ParsedInput::Kind::RawMatrices)
    return raw_system(input.N, input.B, input.W);
  if (input.kinetics) return build_system(input.network, *input.kinetics);
  return build_system(input.network);
}

std::string print_network(const Network& net) {
  std::ostringstream os;
  os << "species: ";
  for (std::size_t i = 0; i < net.species.size(); ++i)
    os << net.species[i] << (i + 1 < net.species.size() ? ", " : "\n");

  auto complex_str = [&](const std::vector<Int>& coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      if (!out.empty()) out += " + ";
      if (coeffs[i] != 1) out += coeffs[i].str() + " ";
      out += net.species[i];
    }
    return out.empty() ? std::string("0") : out;
  };

  for (const Reaction& rx : net.reactions)
    os << complex_str(rx.reactant) << " -> " << complex_str(rx.product) << " ; " << rx.rate_name
       << "\n";
  return os.str();
}

}  // namespace acr
