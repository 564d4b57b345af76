#include "ckdist/ordinal.hpp"

#include <charconv>
#include <stdexcept>

namespace ckdist {

Ordinal Ordinal::top() {
  Ordinal o;
  o.top_ = true;
  return o;
}

Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back({0, n});
  return o;
}

Ordinal Ordinal::single(std::uint64_t exp, std::uint64_t coeff) {
  if (coeff == 0) throw std::invalid_argument("ordinal coefficient must be >= 1");
  Ordinal o;
  o.terms_.push_back({exp, coeff});
  return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0)
      throw std::invalid_argument("ordinal coefficient must be >= 1");
    if (i > 0 && terms[i - 1].exp <= terms[i].exp)
      throw std::invalid_argument("ordinal exponents must be strictly decreasing");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

bool Ordinal::is_finite() const {
  if (top_) return false;
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw std::logic_error("ordinal is not finite");
  return terms_.empty() ? 0 : terms_[0].coeff;
}

Cmp compare(const Ordinal& a, const Ordinal& b) {
  if (a.is_top() || b.is_top()) {
    if (a.is_top() && b.is_top()) return Cmp::equal;
    return a.is_top() ? Cmp::greater : Cmp::less;
  }
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    if (ta[i].exp != tb[i].exp)
      return ta[i].exp > tb[i].exp ? Cmp::greater : Cmp::less;
    if (ta[i].coeff != tb[i].coeff)
      return ta[i].coeff > tb[i].coeff ? Cmp::greater : Cmp::less;
  }
  if (ta.size() == tb.size()) return Cmp::equal;
  return ta.size() > tb.size() ? Cmp::greater : Cmp::less;
}

bool PointRank::at_least(const PointRank& other) const {
  if (is_omega) return true;
  if (other.is_omega) return false;
  return value >= other.value;
}

Classification classify(const Ordinal& a) {
  if (a.is_top()) return {OrdinalKind::limit, PointRank::omega()};
  if (a.is_zero()) return {OrdinalKind::zero, PointRank::finite(0)};
  std::uint64_t smallest = a.terms().back().exp;
  if (smallest == 0) return {OrdinalKind::successor, PointRank::finite(0)};
  return {OrdinalKind::limit, PointRank::finite(smallest)};
}

std::optional<Ordinal> div_omega(const Ordinal& a) {
  if (a.is_top()) return Ordinal::top();
  if (a.is_finite()) return std::nullopt;
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    if (t.exp == 0) continue;
    out.push_back({t.exp - 1, t.coeff});
  }
  Ordinal d = Ordinal::from_terms(std::move(out));
  // The p-th limit ordinal is indexed from 0, so a finite count of limits
  // n yields the endpoint n - 1.
  if (d.is_finite()) return Ordinal::finite(d.finite_value() - 1);
  return d;
}

Ordinal successor(const Ordinal& a) {
  if (a.is_top()) throw std::invalid_argument("successor of w^w is out of range");
  auto terms = a.terms();
  if (!terms.empty() && terms.back().exp == 0)
    terms.back().coeff += 1;
  else
    terms.push_back({0, 1});
  return Ordinal::from_terms(std::move(terms));
}

namespace {

std::uint64_t parse_nat(std::string_view s) {
  std::uint64_t v = 0;
  if (s.empty()) throw std::invalid_argument("expected a decimal natural");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad decimal natural: " + std::string(s));
  return v;
}

Ordinal::Term parse_term(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty ordinal term");
  if (s[0] != 'w') return {0, parse_nat(s)};
  s.remove_prefix(1);
  std::uint64_t exp = 1;
  if (!s.empty() && s[0] == '^') {
    s.remove_prefix(1);
    auto star = s.find('*');
    exp = parse_nat(s.substr(0, star));
    s = star == std::string_view::npos ? std::string_view{} : s.substr(star);
  }
  std::uint64_t coeff = 1;
  if (!s.empty()) {
    if (s[0] != '*') throw std::invalid_argument("bad ordinal term");
    coeff = parse_nat(s.substr(1));
  }
  if (coeff == 0) throw std::invalid_argument("ordinal coefficient must be >= 1");
  return {exp, coeff};
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  if (text == "0") return Ordinal::zero();
  if (text == "w^w") return Ordinal::top();
  std::vector<Ordinal::Term> terms;
  std::size_t pos = 0;
  while (true) {
    auto plus = text.find('+', pos);
    auto piece = text.substr(pos, plus == std::string_view::npos
                                      ? std::string_view::npos
                                      : plus - pos);
    terms.push_back(parse_term(piece));
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return Ordinal::from_terms(std::move(terms));  // rejects non-decreasing exps
}

std::string format_ordinal(const Ordinal& a) {
  if (a.is_top()) return "w^w";
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exp == 0) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += 'w';
    if (t.exp != 1) out += "^" + std::to_string(t.exp);
    if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
  }
  return out;
}

}  // namespace ckdist
