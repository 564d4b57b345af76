#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ckdist/ordinal.hpp"

namespace ckdist {

// A countable compact K = [0, endpoint] of ordinals with the order topology.
struct CompactInterval {
  Ordinal endpoint;

  bool contains(const Ordinal& gamma) const { return gamma <= endpoint; }
  bool is_finite() const { return endpoint.is_finite(); }
  bool operator==(const CompactInterval&) const = default;
};

// A derivation count: a natural number or omega.
struct DeriveOrder {
  bool is_omega = false;
  std::uint64_t n = 0;

  static DeriveOrder omega() { return {true, 0}; }
  static DeriveOrder finite(std::uint64_t n) { return {false, n}; }
};

// Derivation order sigma(K) = sup{alpha : K^(alpha) nonempty}. The infinite
// marker is reserved for the symbolic non-scattered rows ([0,1], betaN); no
// operation ever produces it from a CompactInterval.
struct SigmaValue {
  enum class Kind { finite, omega, infinite_marker };
  Kind kind = Kind::finite;
  std::uint64_t n = 0;

  static SigmaValue finite(std::uint64_t n) { return {Kind::finite, n}; }
  static SigmaValue omega() { return {Kind::omega, 0}; }
  static SigmaValue infinite() { return {Kind::infinite_marker, 0}; }
  bool operator==(const SigmaValue&) const = default;
};

// The derived set K' as an interval, via div_omega; empty when K is finite.
std::optional<CompactInterval> derivative(const CompactInterval& k);

// K^(alpha); alpha = omega is the intersection of all finite derivatives.
std::optional<CompactInterval> iterated_derivative(const CompactInterval& k,
                                                   DeriveOrder alpha);

SigmaValue sigma(const CompactInterval& k);

// i_CB(K) = sigma(K) + 1: the smallest alpha with K^(alpha) empty.
Ordinal cb_index(const CompactInterval& k);

// gamma in K^(i) <=> cb_point_rank(gamma) >= i. Throws when gamma lies
// outside K.
bool point_in_derivative(const Ordinal& gamma, DeriveOrder i,
                         const CompactInterval& k);

// Canonical order isomorphism between K' (as a subset of K) and the
// abstract interval [0, div_omega(endpoint)]: position p maps to the p-th
// limit ordinal.
Ordinal from_derived(const Ordinal& p);
// Largest derived-coordinate p with from_derived(p) <= gamma, none when
// gamma < w.
std::optional<Ordinal> floor_to_derived(const Ordinal& gamma);

// i-fold compositions of the maps above.
Ordinal from_derived_iter(const Ordinal& p, std::uint64_t i);
std::optional<Ordinal> floor_to_derived_iter(const Ordinal& gamma,
                                             std::uint64_t i);

std::string format_sigma(const SigmaValue& s);

}  // namespace ckdist
