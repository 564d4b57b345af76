#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ckdist/delta_metric.hpp"
#include "ckdist/step_function.hpp"

namespace ckdist {

// A finite sample of an almost-isometric embedding g of disjoint-support
// c00 vectors into C(K): a table of images, claimed to satisfy
//   ||x-y||_1 / (1+eps') <= ||g(x)-g(y)||_inf <= ||x-y||_1
// on every recorded disjoint-support pair.
struct EmbeddingSample {
  CompactInterval compact;
  Rat epsilon_prime;
  std::map<SparseVector, StepFunction> table;

  const StepFunction& at(const SparseVector& v) const;
};

// f(x) = g(x)|_{K'}; requires an infinite compact.
EmbeddingSample restrict_embedding(const EmbeddingSample& g);

struct PairBoundReport {
  SparseVector x, y;
  Rat threshold;  // (1-2eps') ||x-y||_1 / (1+eps')
  Rat measured;
  Rat slack;      // measured - threshold
  bool satisfied;
};

// Checks the restricted lower bound on each disjoint-support pair.
std::vector<PairBoundReport> check_disjoint_lower_bound(
    const EmbeddingSample& f,
    const std::vector<std::pair<SparseVector, SparseVector>>& pairs);

struct Beta0Result {
  Ordinal beta0;
  ClopenUnion b;
  std::uint64_t i, j;   // the window pair whose threshold set holds beta0
  Rat mid_value;        // |g(x)(b0) - g(y + delta e_j)(b0)|
  Rat mid_threshold;    // (2-eps') delta / (1+eps')
  Rat final_value;      // |g(x)(b0) - g(y)(b0)|
  Rat final_threshold;  // (1-2eps') delta / (1+eps')
};

// B = union over window pairs (i, j), i != j, of
//   {beta : |g(x + delta e_i)(beta) - g(y + delta e_j)(beta)| >= 3delta/(1+eps')},
// beta0 = the smallest point of B meeting K'. Returns nullopt when B misses
// K' within the window (finite tables may exhaust; an embedding of all of
// ell_1 could not).
std::optional<Beta0Result> locate_beta0(const EmbeddingSample& g,
                                        const SparseVector& x,
                                        const SparseVector& y,
                                        const Rat& delta,
                                        const std::vector<std::uint64_t>& window);

// eps'(eps) = eps / (2(3 + 2eps)), half the boundary solution of
// (1-2t)/(1+t) = 1/(1+eps); satisfies the strict inequality.
Rat epsilon_prime_for(const Rat& eps);

}  // namespace ckdist
