#include "ckdist/restriction.hpp"

#include <algorithm>
#include <stdexcept>

namespace ckdist {

namespace {

bool disjoint_supports(const SparseVector& x, const SparseVector& y) {
  auto ix = x.begin();
  auto iy = y.begin();
  while (ix != x.end() && iy != y.end()) {
    if (ix->first == iy->first) return false;
    if (ix->first < iy->first)
      ++ix;
    else
      ++iy;
  }
  return true;
}

SparseVector with_unit(const SparseVector& x, std::uint64_t i, const Rat& c) {
  SparseVector out = x;
  out[i] += c;
  if (out[i] == 0) out.erase(i);
  return out;
}

}  // namespace

const StepFunction& EmbeddingSample::at(const SparseVector& v) const {
  auto it = table.find(v);
  if (it == table.end())
    throw std::invalid_argument("vector not in the sample table");
  return it->second;
}

EmbeddingSample restrict_embedding(const EmbeddingSample& g) {
  auto derived = derivative(g.compact);
  if (!derived)
    throw std::invalid_argument("finite compact has an empty derivative");
  EmbeddingSample out;
  out.compact = *derived;
  out.epsilon_prime = g.epsilon_prime;
  for (const auto& [v, f] : g.table)
    out.table.emplace(v, restrict_to_derived(f, 1));
  return out;
}

std::vector<PairBoundReport> check_disjoint_lower_bound(
    const EmbeddingSample& f,
    const std::vector<std::pair<SparseVector, SparseVector>>& pairs) {
  std::vector<PairBoundReport> out;
  const Rat& ep = f.epsilon_prime;
  for (const auto& [x, y] : pairs) {
    if (!disjoint_supports(x, y))
      throw std::invalid_argument("pair shares a support index");
    Rat threshold = (1 - 2 * ep) * ell1_distance(x, y) / (1 + ep);
    Rat measured = sup_norm_diff(f.at(x), f.at(y)).first;
    out.push_back({x, y, threshold, measured, Rat(measured - threshold),
                   measured >= threshold});
  }
  return out;
}

std::optional<Beta0Result> locate_beta0(
    const EmbeddingSample& g, const SparseVector& x, const SparseVector& y,
    const Rat& delta, const std::vector<std::uint64_t>& window) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  if (!disjoint_supports(x, y))
    throw std::invalid_argument("x and y share a support index");
  if (ell1_distance(x, y) != delta)
    throw std::invalid_argument("delta must equal ||x-y||_1");
  for (auto i : window)
    if (x.count(i) || y.count(i))
      throw std::invalid_argument("window index inside a support");

  const Rat& ep = g.epsilon_prime;
  Rat entry_threshold = 3 * delta / (1 + ep);
  struct PairSet {
    std::uint64_t i, j;
    ClopenUnion set;
  };
  std::vector<PairSet> sets;
  ClopenUnion b(g.compact);
  for (auto i : window)
    for (auto j : window) {
      if (i == j) continue;
      auto s = threshold_set(g.at(with_unit(x, i, delta)),
                             g.at(with_unit(y, j, delta)), entry_threshold);
      b = unite(b, s);
      sets.push_back({i, j, std::move(s)});
    }

  // Smallest point of B of rank >= 1, part by part.
  std::optional<Ordinal> beta0;
  for (const auto& p : b.parts()) {
    std::optional<Ordinal> coord;
    if (p.lo) {
      auto fl = floor_to_derived_iter(*p.lo, 1);
      coord = fl ? successor(*fl) : Ordinal::zero();
    } else {
      coord = Ordinal::zero();
    }
    Ordinal candidate = from_derived_iter(*coord, 1);
    if (candidate <= p.hi) {
      beta0 = candidate;
      break;
    }
  }
  if (!beta0) return std::nullopt;

  for (const auto& ps : sets) {
    if (!ps.set.contains(*beta0)) continue;
    return Beta0Result{
        *beta0,
        b,
        ps.i,
        ps.j,
        rat_abs(g.at(x).eval(*beta0) -
                g.at(with_unit(y, ps.j, delta)).eval(*beta0)),
        Rat((2 - ep) * delta / (1 + ep)),
        rat_abs(g.at(x).eval(*beta0) - g.at(y).eval(*beta0)),
        Rat((1 - 2 * ep) * delta / (1 + ep))};
  }
  throw std::logic_error("beta0 in B but in none of its parts");
}

Rat epsilon_prime_for(const Rat& eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  Rat t = eps / (2 * (3 + 2 * eps));
  if (!((1 - 2 * t) / (1 + t) > 1 / (1 + eps)))
    throw std::logic_error("eps' violates the strict inequality");
  return t;
}

}  // namespace ckdist
