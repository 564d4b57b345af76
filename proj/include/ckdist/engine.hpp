#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ckdist/delta_metric.hpp"
#include "ckdist/step_function.hpp"

namespace ckdist {

// A candidate embedding of Delta<=k(N) into C(K), claimed to satisfy the
// noncontractive form d <= ||f(s)-f(t)||_inf <= D d. The assignment returns
// nullopt for points outside the supplied table or window; images are
// translated so that the empty set maps to zero.
struct CandidateMap {
  std::uint64_t k = 2;
  CompactInterval compact;
  Rat claimed_D;
  std::function<std::optional<StepFunction>(const DeltaPoint&)> assignment;

  // Normalized image: assignment(p) - assignment(empty).
  std::optional<StepFunction> image(const DeltaPoint& p) const;
};

CandidateMap table_map(std::uint64_t k, CompactInterval compact, Rat claimed_D,
                       std::map<DeltaPoint, StepFunction> table);
// sigma maps to the sum over n in sigma of scale * indicator((n, n+1]).
// Total on all of Delta<=k; requires an infinite compact.
CandidateMap basis_indicator_map(std::uint64_t k, CompactInterval compact,
                                 Rat claimed_D, Rat scale = 1);
// Finite-table Frechet-style map on [0, w]: coordinate pieces indexed by the
// points of enumerate_delta(k, n), value d(sigma, p) - d(empty, p), tail 0.
// Isometric on its window.
CandidateMap frechet_window_map(std::uint64_t k, std::uint64_t n,
                                Rat claimed_D);
// Rescale a raw map by its minimal observed stretch over the sample so the
// lower Lipschitz constant becomes 1.
CandidateMap normalize_noncontractive(const CandidateMap& raw,
                                      const std::vector<DeltaPoint>& sample);

struct DistortionReport {
  Rat expansion;                    // max image distance / domain distance
  std::optional<Rat> contraction;   // max domain/image; nullopt = infinite
  std::optional<Rat> distortion;    // expansion * contraction
  std::pair<DeltaPoint, DeltaPoint> expansion_pair;
  std::pair<DeltaPoint, DeltaPoint> contraction_pair;
};

DistortionReport distortion_of_sample(const std::vector<DeltaPoint>& points,
                                      const CandidateMap& map);

// eta = 2k - 2(k-1)D; positive iff D < k/(k-1).
Rat eta(std::uint64_t k, const Rat& d);

// X^r_{i,j} = {beta : |f({n_i^r})(beta) - f({n_j^r})(beta)| >= eta}.
ClopenUnion witness_set(const CandidateMap& map, std::uint64_t r,
                        std::uint64_t i, std::uint64_t j);

// Any family in [-D, D]^d pairwise >= eta apart in sup norm has size at
// most (floor(2D/eta) + 1)^d.
std::uint64_t packing_bound(const Rat& d_bound, const Rat& separation,
                            std::uint64_t dim);

// A concrete bi-Lipschitz violation: a pair of domain points whose image
// distance breaks the claimed bounds.
struct RefutationWitness {
  enum class Bound { lower, upper };

  DeltaPoint a, b;
  StepFunction image_a, image_b;
  Rat measured;
  Bound violated;
  std::vector<std::string> trace;
};

struct EngineOutcome {
  enum class Kind { witness, inconclusive };
  enum class Reason { none, window_exhausted, derived_set_infinite };

  Kind kind = Kind::inconclusive;
  Reason reason = Reason::none;
  std::optional<RefutationWitness> witness;
  std::vector<std::string> trace;
};

struct RefuteOptions {
  std::uint64_t initial_window = 8;
  std::uint64_t max_index = 256;  // cap on singleton indices per family
};

EngineOutcome refute(const CandidateMap& map, const RefuteOptions& opts = {});

// Recomputes the distances of a witness and confirms the claimed violation.
bool verify_witness(const CandidateMap& map, const RefutationWitness& w);

// (sigma+1)/sigma for finite sigma >= 1; no obstruction past omega.
Rat lower_bound_for_sigma(const SigmaValue& s);

struct UniversalityReport {
  SigmaValue sigma;
  Rat bound;
  bool ai_universal_possible;
};

UniversalityReport universality_obstruction(const CompactInterval& k);

// The k = 2, K = [0, w] walkthrough over the t122 query set (1-based
// labels), tracing the X-set computations of Aharoni's argument. The map
// defaults to the basis-indicator assignment when none is given.
EngineOutcome demo_aharoni(std::uint64_t n, const Rat& claimed_D,
                           const CandidateMap* map = nullptr);

}  // namespace ckdist
