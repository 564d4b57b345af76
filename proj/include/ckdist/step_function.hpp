#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckdist/compacta.hpp"
#include "ckdist/rational.hpp"

namespace ckdist {

// A finite union of disjoint clopen intervals (lo, hi] (lo absent means
// [0, hi]) inside a CompactInterval; sorted and merged.
class ClopenUnion {
 public:
  struct Interval {
    std::optional<Ordinal> lo;  // open lower bound; absent = from 0 inclusive
    Ordinal hi;                 // closed upper bound
    bool operator==(const Interval&) const = default;
  };

  explicit ClopenUnion(CompactInterval compact) : compact_(std::move(compact)) {}
  static ClopenUnion whole(const CompactInterval& compact);
  static ClopenUnion from_intervals(CompactInterval compact,
                                    std::vector<Interval> parts);

  const CompactInterval& compact() const { return compact_; }
  const std::vector<Interval>& parts() const { return parts_; }

  bool is_empty() const { return parts_.empty(); }
  bool contains(const Ordinal& gamma) const;
  // True iff the union meets K^(i).
  bool meets_derived(std::uint64_t i) const;
  bool contains_limit_point() const { return meets_derived(1); }
  // A clopen union is infinite exactly when it contains a limit point.
  bool is_infinite() const { return contains_limit_point(); }

  bool operator==(const ClopenUnion&) const = default;

 private:
  CompactInterval compact_;
  std::vector<Interval> parts_;  // sorted, disjoint, non-adjacent
};

ClopenUnion intersect(const ClopenUnion& a, const ClopenUnion& b);
ClopenUnion unite(const ClopenUnion& a, const ClopenUnion& b);

// The points of rank exactly >= i in the union, when finitely many;
// nullopt when the union meets K^(i+1) (and the set is infinite).
std::optional<std::vector<Ordinal>> finite_points_of_rank(const ClopenUnion& u,
                                                          std::uint64_t i);

std::string format_clopen(const ClopenUnion& u);

// A continuous piecewise-constant rational function on a CompactInterval:
// cuts g_1 < ... < g_{m-1} < endpoint, value j on the clopen piece
// (g_{j-1}, g_j], first piece [0, g_1], last piece ending at the endpoint.
// Canonical: adjacent pieces carry distinct values.
class StepFunction {
 public:
  static StepFunction make(CompactInterval compact, std::vector<Ordinal> cuts,
                           std::vector<Rat> values);
  static StepFunction constant(const CompactInterval& compact, Rat v);

  const CompactInterval& compact() const { return compact_; }
  const std::vector<Ordinal>& cuts() const { return cuts_; }
  const std::vector<Rat>& values() const { return values_; }

  Rat eval(const Ordinal& gamma) const;

  bool operator==(const StepFunction&) const = default;

 private:
  StepFunction() = default;
  CompactInterval compact_;
  std::vector<Ordinal> cuts_;
  std::vector<Rat> values_;
};

StepFunction difference(const StepFunction& f, const StepFunction& g);
StepFunction scale(const StepFunction& f, const Rat& c);

// Exact sup norm of f - g together with the clopen set where it is attained.
std::pair<Rat, ClopenUnion> sup_norm_diff(const StepFunction& f,
                                          const StepFunction& g);
Rat sup_norm(const StepFunction& f);

// {beta : |f(beta) - g(beta)| >= theta}, theta > 0.
ClopenUnion threshold_set(const StepFunction& f, const StepFunction& g,
                          const Rat& theta);

// f restricted to K^(i), re-expressed over the abstract derived interval.
StepFunction restrict_to_derived(const StepFunction& f, std::uint64_t i);

}  // namespace ckdist
