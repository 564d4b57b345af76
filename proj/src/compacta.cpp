#include "ckdist/compacta.hpp"

#include <stdexcept>

namespace ckdist {

std::optional<CompactInterval> derivative(const CompactInterval& k) {
  auto d = div_omega(k.endpoint);
  if (!d) return std::nullopt;
  return CompactInterval{*d};
}

std::optional<CompactInterval> iterated_derivative(const CompactInterval& k,
                                                   DeriveOrder alpha) {
  if (alpha.is_omega) {
    // Only points of rank >= omega survive every finite derivative.
    if (k.endpoint.is_top()) return CompactInterval{Ordinal::zero()};
    return std::nullopt;
  }
  std::optional<CompactInterval> cur = k;
  for (std::uint64_t i = 0; i < alpha.n && cur; ++i) cur = derivative(*cur);
  return cur;
}

SigmaValue sigma(const CompactInterval& k) {
  if (k.endpoint.is_top()) return SigmaValue::omega();
  if (k.endpoint.is_zero()) return SigmaValue::finite(0);
  return SigmaValue::finite(k.endpoint.terms().front().exp);
}

Ordinal cb_index(const CompactInterval& k) {
  SigmaValue s = sigma(k);
  if (s.kind == SigmaValue::Kind::omega)
    return Ordinal::from_terms({{1, 1}, {0, 1}});  // w+1
  return Ordinal::finite(s.n + 1);
}

bool point_in_derivative(const Ordinal& gamma, DeriveOrder i,
                         const CompactInterval& k) {
  if (!k.contains(gamma))
    throw std::invalid_argument("point outside the compact");
  PointRank rank = classify(gamma).rank;
  PointRank need = i.is_omega ? PointRank::omega() : PointRank::finite(i.n);
  return rank.at_least(need);
}

Ordinal from_derived(const Ordinal& p) {
  if (p.is_top()) return Ordinal::top();
  // d = 1 + p; then raise every exponent by one.
  Ordinal d = p.is_finite() ? successor(p) : p;
  std::vector<Ordinal::Term> terms;
  for (const auto& t : d.terms()) terms.push_back({t.exp + 1, t.coeff});
  return Ordinal::from_terms(std::move(terms));
}

std::optional<Ordinal> floor_to_derived(const Ordinal& gamma) {
  if (gamma.is_top()) return Ordinal::top();
  if (gamma.is_finite()) return std::nullopt;
  // Largest limit ordinal <= gamma: drop the constant term.
  std::vector<Ordinal::Term> terms;
  for (const auto& t : gamma.terms())
    if (t.exp > 0) terms.push_back({t.exp - 1, t.coeff});
  Ordinal d = Ordinal::from_terms(std::move(terms));
  if (d.is_finite()) return Ordinal::finite(d.finite_value() - 1);
  return d;
}

Ordinal from_derived_iter(const Ordinal& p, std::uint64_t i) {
  Ordinal cur = p;
  for (std::uint64_t j = 0; j < i; ++j) cur = from_derived(cur);
  return cur;
}

std::optional<Ordinal> floor_to_derived_iter(const Ordinal& gamma,
                                             std::uint64_t i) {
  std::optional<Ordinal> cur = gamma;
  for (std::uint64_t j = 0; j < i && cur; ++j) cur = floor_to_derived(*cur);
  return cur;
}

std::string format_sigma(const SigmaValue& s) {
  switch (s.kind) {
    case SigmaValue::Kind::finite:
      return std::to_string(s.n);
    case SigmaValue::Kind::omega:
      return "w";
    default:
      return "inf";
  }
}

}  // namespace ckdist
