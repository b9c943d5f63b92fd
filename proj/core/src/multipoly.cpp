#include "acr/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "acr/errors.hpp"

namespace acr {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw DomainError("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VarSetPtr VarSet::numbered(const std::string& stem, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
  return std::make_shared<const VarSet>(std::move(names));
}

VarSetPtr VarSet::concat(const VarSet& a, const VarSet& b) {
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  return std::make_shared<const VarSet>(std::move(names));
}

std::string to_string(SignProfile p) {
  switch (p) {
    case SignProfile::AllPositive: return "all-positive";
    case SignProfile::AllNegative: return "all-negative";
    case SignProfile::Mixed: return "mixed";
    case SignProfile::Zero: return "zero";
  }
  return "?";
}

MultiPoly::MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw DomainError("MultiPoly requires a variable list");
}

MultiPoly MultiPoly::constant(VarSetPtr vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.vars_->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::size_t index) {
  MultiPoly p(std::move(vars));
  if (index >= p.vars_->size()) throw DimensionError("variable index out of range");
  Exponents e(p.vars_->size(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(VarSetPtr vars, Exponents exps, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (exps.size() != p.vars_->size()) throw DimensionError("monomial: exponent length mismatch");
  for (int e : exps)
    if (e < 0) throw DomainError("monomial: negative exponent");
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

SignProfile MultiPoly::sign_profile() const {
  if (terms_.empty()) return SignProfile::Zero;
  bool pos = false, neg = false;
  for (const auto& [e, c] : terms_) (c > 0 ? pos : neg) = true;
  if (pos && neg) return SignProfile::Mixed;
  return pos ? SignProfile::AllPositive : SignProfile::AllNegative;
}

bool MultiPoly::divisible_by(std::size_t var) const {
  if (vars_ && var >= vars_->size()) throw DimensionError("divisible_by: variable index out of range");
  for (const auto& [e, c] : terms_)
    if (e[var] == 0) return false;
  return true;
}

bool MultiPoly::divisible_by(std::string_view var_name) const {
  if (!vars_) throw DomainError("divisible_by on detached polynomial");
  auto idx = vars_->index_of(var_name);
  if (!idx) throw DomainError("unknown variable '" + std::string(var_name) + "'");
  return divisible_by(*idx);
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void MultiPoly::require_compatible(const MultiPoly& rhs) const {
  if (!vars_ || !rhs.vars_) throw DomainError("arithmetic on detached polynomial");
  if (vars_ != rhs.vars_ && !(*vars_ == *rhs.vars_))
    throw DomainError("polynomial operands use different variable lists");
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  MultiPoly p(*this);
  p += rhs;
  return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
  MultiPoly p(*this);
  p -= rhs;
  return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  require_compatible(rhs);
  MultiPoly p(vars_);
  Exponents sum(vars_->size());
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = e1[i] + e2[i];
      p.add_term(sum, c1 * c2);
    }
  return p;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly p(vars_);
  if (c == 0) return p;
  for (const auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
  return p;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  if (!vars_ || !rhs.vars_) return !vars_ && !rhs.vars_;
  if (vars_ != rhs.vars_ && !(*vars_ == *rhs.vars_)) return false;
  return terms_ == rhs.terms_;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (!vars_ || point.size() != vars_->size()) throw DimensionError("eval: point length mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int p = 0; p < e[i]; ++p) t *= point[i];
    acc += t;
  }
  return acc;
}

double MultiPoly::eval(const std::vector<double>& point) const {
  if (!vars_ || point.size() != vars_->size()) throw DimensionError("eval: point length mismatch");
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int p = 0; p < e[i]; ++p) t *= point[i];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::reindexed(VarSetPtr target) const {
  if (!vars_) throw DomainError("reindexed on detached polynomial");
  MultiPoly p(target);
  std::vector<std::optional<std::size_t>> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = target->index_of(vars_->name(i));
  Exponents e2(target->size());
  for (const auto& [e, c] : terms_) {
    std::fill(e2.begin(), e2.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i])
        throw DomainError("reindexed: variable '" + vars_->name(i) + "' missing from target");
      e2[*map[i]] = e[i];
    }
    p.add_term(e2, c);
  }
  return p;
}

std::map<MultiPoly::Exponents, MultiPoly> MultiPoly::collect(
    const std::vector<std::size_t>& keep) const {
  std::map<Exponents, MultiPoly> out;
  for (const auto& [e, c] : terms_) {
    Exponents pattern(keep.size());
    Exponents rest = e;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      pattern[i] = e[keep[i]];
      rest[keep[i]] = 0;
    }
    auto [it, inserted] = out.emplace(std::move(pattern), MultiPoly(vars_));
    it->second.add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  // Scale by lcm(denominators), then divide out the gcd of the resulting
  // integers: integral coefficients with content 1.
  Int l = 1;
  for (const auto& [e, c] : terms_) l = boost::multiprecision::lcm(l, den(c));
  Int g = 0;
  for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, Int(num(c) * (l / den(c))));
  Rational scale(l, g);
  // Leading term in graded lex: highest total degree, then lexicographically
  // largest exponent vector.
  const Exponents* lead = nullptr;
  int lead_deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (d > lead_deg || (d == lead_deg && (!lead || e > *lead))) {
      lead = &e;
      lead_deg = d;
    }
  }
  if (terms_.at(*lead) < 0) scale = -scale;
  return *this * scale;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  auto deg = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
    int da = deg(a->first), db = deg(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += vars_->name(i);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      os << acr::to_string(mag);
    } else {
      if (mag != 1) os << acr::to_string(mag) << "*";
      os << vars;
    }
  }
  return os.str();
}

}  // namespace acr
