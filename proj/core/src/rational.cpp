#include "acr/rational.hpp"

#include <cctype>

namespace acr {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view p = text.substr(0, slash), q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) return std::nullopt;
    Int qi{std::string(q)};
    if (qi == 0) return std::nullopt;
    value = Rational(Int{std::string(p)}, qi);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot), fp = text.substr(dot + 1);
    if (ip.empty() && fp.empty()) return std::nullopt;
    if (!ip.empty() && !all_digits(ip)) return std::nullopt;
    if (!fp.empty() && !all_digits(fp)) return std::nullopt;
    Int scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Int units = ip.empty() ? Int(0) : Int{std::string(ip)};
    Int frac = fp.empty() ? Int(0) : Int{std::string(fp)};
    value = Rational(units * scale + frac, scale);
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rational(Int{std::string(text)});
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  std::string s = num(q).str();
  if (!is_integer(q)) s += "/" + den(q).str();
  return s;
}

Int common_denominator(const std::vector<Rational>& v) {
  Int l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, den(q));
  return l;
}

std::vector<Rational> primitive_vector(const std::vector<Rational>& v) {
  Int l = common_denominator(v);
  Int g = 0;
  for (const auto& q : v) g = boost::multiprecision::gcd(g, Int(num(q) * (l / den(q))));
  if (g == 0) return v;  // zero vector
  std::vector<Rational> out;
  out.reserve(v.size());
  Rational scale(l, g);
  for (const auto& q : v) out.push_back(q * scale);
  return out;
}

std::vector<Rational> canonical_sign_vector(const std::vector<Rational>& v) {
  std::vector<Rational> out = primitive_vector(v);
  for (const auto& q : out) {
    if (q == 0) continue;
    if (q < 0)
      for (auto& e : out) e = -e;
    break;
  }
  return out;
}

}  // namespace acr
