#include "ckdist/engine.hpp"

#include <cassert>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ckdist {

namespace {

StepFunction sum_step(const StepFunction& f, const StepFunction& g) {
  return difference(f, scale(g, -1));
}

std::string pair_label(const DeltaPoint& a, const DeltaPoint& b) {
  return format_delta_point(a) + "," + format_delta_point(b);
}

}  // namespace

std::optional<StepFunction> CandidateMap::image(const DeltaPoint& p) const {
  auto raw = assignment(p);
  if (!raw) return std::nullopt;
  auto at_empty = assignment({});
  if (!at_empty) return raw;
  return difference(*raw, *at_empty);
}

CandidateMap table_map(std::uint64_t k, CompactInterval compact, Rat claimed_D,
                       std::map<DeltaPoint, StepFunction> table) {
  auto shared = std::make_shared<std::map<DeltaPoint, StepFunction>>(
      std::move(table));
  CandidateMap m;
  m.k = k;
  m.compact = compact;
  m.claimed_D = std::move(claimed_D);
  m.assignment = [shared](const DeltaPoint& p) -> std::optional<StepFunction> {
    auto it = shared->find(p);
    if (it == shared->end()) return std::nullopt;
    return it->second;
  };
  return m;
}

CandidateMap basis_indicator_map(std::uint64_t k, CompactInterval compact,
                                 Rat claimed_D, Rat sc) {
  if (compact.is_finite())
    throw std::invalid_argument("basis indicator map needs an infinite compact");
  CandidateMap m;
  m.k = k;
  m.compact = compact;
  m.claimed_D = std::move(claimed_D);
  m.assignment = [k, compact,
                  sc](const DeltaPoint& p) -> std::optional<StepFunction> {
    if (p.size() > k) return std::nullopt;
    // Boundary/value pairs; piece (prev, ub].
    std::vector<Ordinal> bounds;
    std::vector<Rat> values;
    std::optional<std::uint64_t> covered;  // last covered natural
    for (auto n : p) {
      if (!covered || *covered < n) {
        bounds.push_back(Ordinal::finite(n));
        values.push_back(0);
      }
      bounds.push_back(Ordinal::finite(n + 1));
      values.push_back(sc);
      covered = n + 1;
    }
    bounds.push_back(compact.endpoint);
    values.push_back(0);
    bounds.pop_back();
    if (!bounds.empty() && bounds.back() == compact.endpoint) {
      // Cannot happen for finite naturals inside an infinite compact.
      bounds.pop_back();
      values.pop_back();
    }
    return StepFunction::make(compact, std::move(bounds), std::move(values));
  };
  return m;
}

CandidateMap frechet_window_map(std::uint64_t k, std::uint64_t n,
                                Rat claimed_D) {
  CompactInterval compact{Ordinal::omega()};
  auto window =
      std::make_shared<std::vector<DeltaPoint>>(enumerate_delta(k, n));
  auto members = std::make_shared<std::set<DeltaPoint>>(window->begin(),
                                                        window->end());
  CandidateMap m;
  m.k = k;
  m.compact = compact;
  m.claimed_D = std::move(claimed_D);
  m.assignment = [compact, window,
                  members](const DeltaPoint& p) -> std::optional<StepFunction> {
    if (!members->count(p)) return std::nullopt;
    std::vector<Ordinal> cuts;
    std::vector<Rat> values;
    for (std::size_t t = 0; t < window->size(); ++t) {
      cuts.push_back(Ordinal::finite(t + 1));
      auto& w = (*window)[t];
      values.push_back(Rat(Int(sym_diff_distance(p, w)) - Int(w.size())));
    }
    values.push_back(0);  // tail
    return StepFunction::make(compact, std::move(cuts), std::move(values));
  };
  return m;
}

CandidateMap normalize_noncontractive(const CandidateMap& raw,
                                      const std::vector<DeltaPoint>& sample) {
  Rat min_stretch = 0;
  bool seen = false;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      std::uint64_t d = sym_diff_distance(sample[i], sample[j]);
      if (d == 0) continue;
      auto fi = raw.image(sample[i]);
      auto fj = raw.image(sample[j]);
      if (!fi || !fj) continue;
      Rat stretch = sup_norm_diff(*fi, *fj).first / Rat(d);
      if (!seen || stretch < min_stretch) {
        min_stretch = stretch;
        seen = true;
      }
    }
  }
  if (!seen || min_stretch == 0)
    throw std::invalid_argument(
        "cannot normalize: no usable pair or coincident images");
  CandidateMap m = raw;
  auto inner = raw.assignment;
  Rat factor = 1 / min_stretch;
  m.assignment = [inner,
                  factor](const DeltaPoint& p) -> std::optional<StepFunction> {
    auto f = inner(p);
    if (!f) return std::nullopt;
    return scale(*f, factor);
  };
  return m;
}

DistortionReport distortion_of_sample(const std::vector<DeltaPoint>& points,
                                      const CandidateMap& map) {
  std::vector<const DeltaPoint*> distinct;
  for (const auto& p : points) {
    bool dup = false;
    for (auto* q : distinct) dup = dup || *q == p;
    if (!dup) distinct.push_back(&p);
  }
  if (distinct.size() < 2)
    throw std::invalid_argument("need at least two distinct points");
  DistortionReport rep;
  rep.expansion = 0;
  Rat contraction = 0;
  bool contraction_infinite = false;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      const DeltaPoint& a = *distinct[i];
      const DeltaPoint& b = *distinct[j];
      Rat d{Int(sym_diff_distance(a, b))};
      auto fa = map.image(a);
      auto fb = map.image(b);
      if (!fa || !fb)
        throw std::invalid_argument("sample point outside the map domain");
      Rat m = sup_norm_diff(*fa, *fb).first;
      if (m / d > rep.expansion) {
        rep.expansion = m / d;
        rep.expansion_pair = {a, b};
      }
      if (m == 0) {
        if (!contraction_infinite) rep.contraction_pair = {a, b};
        contraction_infinite = true;
      } else if (!contraction_infinite && d / m > contraction) {
        contraction = d / m;
        rep.contraction_pair = {a, b};
      }
    }
  }
  if (!contraction_infinite) {
    rep.contraction = contraction;
    rep.distortion = rep.expansion * contraction;
  }
  return rep;
}

Rat eta(std::uint64_t k, const Rat& d) {
  return Rat(Int(2 * k)) - Rat(Int(2 * (k - 1))) * d;
}

std::uint64_t packing_bound(const Rat& d_bound, const Rat& separation,
                            std::uint64_t dim) {
  if (!(d_bound > 0) || !(separation > 0))
    throw std::invalid_argument("packing bound needs positive inputs");
  Int cells_per_axis = rat_floor(2 * d_bound / separation) + 1;
  Int total = 1;
  for (std::uint64_t i = 0; i < dim; ++i) {
    total *= cells_per_axis;
    if (total > Int(std::uint64_t(1) << 62))
      throw std::overflow_error("packing bound too large");
  }
  return total.convert_to<std::uint64_t>();
}

namespace {

// Unwinds the engine to Inconclusive(window-exhausted).
struct Exhausted {};

struct Engine {
  const CandidateMap& map;
  RefuteOptions opts;
  Rat margin;  // eta(k, D)
  std::vector<std::string> trace;

  void log(std::string line) { trace.push_back(std::move(line)); }

  StepFunction img(const DeltaPoint& p) const {
    auto f = map.image(p);
    if (!f) throw Exhausted{};
    return *f;
  }

  DeltaPoint grid_singleton(std::uint64_t r, std::uint64_t i) const {
    return {index_grid(map.k, i, r)};
  }

  // Direct bi-Lipschitz check; a violation becomes a witness.
  std::optional<RefutationWitness> check_pair(const DeltaPoint& a,
                                              const DeltaPoint& b,
                                              const std::string& context) {
    Rat d{Int(sym_diff_distance(a, b))};
    StepFunction fa = img(a);
    StepFunction fb = img(b);
    Rat measured = sup_norm_diff(fa, fb).first;
    std::ostringstream line;
    line << context << ": ||f(" << format_delta_point(a) << ")-f("
         << format_delta_point(b) << ")|| = " << format_rational(measured)
         << ", d = " << format_rational(d);
    if (measured < d) {
      log(line.str() + " -> lower bound violated");
      return RefutationWitness{a,        b,
                               fa,       fb,
                               measured, RefutationWitness::Bound::lower,
                               trace};
    }
    if (measured > map.claimed_D * d) {
      log(line.str() + " -> upper bound violated");
      return RefutationWitness{a,        b,
                               fa,       fb,
                               measured, RefutationWitness::Bound::upper,
                               trace};
    }
    log(line.str() + " -> within bounds");
    return std::nullopt;
  }

  ClopenUnion x_set(std::uint64_t r, std::uint64_t i, std::uint64_t j) {
    auto u = threshold_set(img(grid_singleton(r, i)), img(grid_singleton(r, j)),
                           margin);
    std::ostringstream line;
    line << "X^" << r << "_{" << i << "," << j << "} = " << format_clopen(u);
    log(line.str());
    return u;
  }

  // Among the first count family-r singleton images, find the
  // lexicographically smallest pair whose values are < eta apart at every
  // point of q; guaranteed by the packing bound once the D-bound checks
  // pass.
  std::pair<std::uint64_t, std::uint64_t> pigeonhole(
      std::uint64_t r, std::uint64_t count, const std::vector<Ordinal>& q,
      std::optional<RefutationWitness>& witness) {
    std::vector<StepFunction> imgs;
    for (std::uint64_t i = 1; i <= count; ++i) {
      DeltaPoint s = grid_singleton(r, i);
      witness = check_pair({}, s, "singleton bound at family " +
                                      std::to_string(r));
      if (witness) return {0, 0};
      imgs.push_back(img(s));
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      for (std::uint64_t j = i + 1; j < count; ++j) {
        bool close = true;
        for (const auto& beta : q)
          close = close &&
                  rat_abs(imgs[i].eval(beta) - imgs[j].eval(beta)) < margin;
        if (close) {
          std::ostringstream line;
          line << "pigeonhole at family " << r << ": images of {n_" << i + 1
               << "} and {n_" << j + 1 << "} are < eta apart on all "
               << q.size() << " points";
          log(line.str());
          return {i + 1, j + 1};
        }
      }
    }
    throw std::logic_error("packing bound violated");  // unreachable
  }

  // Invariant on entry: the intersection of the fixed witness sets misses
  // K^(k-m) where m = pairs.size(). Descends the claims chain; the forced
  // contradiction surfaces as a failed direct check.
  RefutationWitness descend(
      std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs) {
    std::uint64_t m = pairs.size();
    std::optional<ClopenUnion> c;
    for (std::uint64_t r = 1; r <= m; ++r) {
      auto x = x_set(r, pairs[r - 1].first, pairs[r - 1].second);
      c = c ? intersect(*c, x) : x;
    }
    if (m == map.k) {
      // CLAIM 1 for this combination forces a point of the (empty)
      // intersection unless a direct check fails.
      DeltaPoint sigma, tau;
      for (std::uint64_t r = 1; r <= map.k; ++r) {
        sigma.push_back(index_grid(map.k, pairs[r - 1].first, r));
        tau.push_back(index_grid(map.k, pairs[r - 1].second, r));
      }
      sigma = make_delta_point(sigma);
      tau = make_delta_point(tau);
      if (auto w = check_pair(sigma, tau, "full-set pair")) return *w;
      for (std::uint64_t r = 1; r <= map.k; ++r) {
        if (auto w = check_pair(grid_singleton(r, pairs[r - 1].first), sigma,
                                "singleton vs full set"))
          return *w;
        if (auto w = check_pair(grid_singleton(r, pairs[r - 1].second), tau,
                                "singleton vs full set"))
          return *w;
      }
      throw std::logic_error("claims chain closed without a violation");
    }
    auto q = finite_points_of_rank(*c, map.k - m - 1);
    if (!q) throw std::logic_error("invariant broken: intersection infinite");
    {
      std::ostringstream line;
      line << "intersection meets K^(" << map.k - m - 1 << ") in " << q->size()
           << " points";
      log(line.str());
    }
    std::uint64_t need = packing_bound(map.claimed_D, margin, q->size()) + 1;
    if (need > opts.max_index) throw Exhausted{};
    std::optional<RefutationWitness> w;
    auto pick = pigeonhole(m + 1, need, *q, w);
    if (w) return *w;
    pairs.push_back(pick);
    return descend(std::move(pairs));
  }
};

}  // namespace

ClopenUnion witness_set(const CandidateMap& map, std::uint64_t r,
                        std::uint64_t i, std::uint64_t j) {
  if (i == j) throw std::invalid_argument("witness set needs i != j");
  Rat margin = eta(map.k, map.claimed_D);
  if (!(margin > 0)) throw std::invalid_argument("eta must be positive");
  auto fi = map.image({index_grid(map.k, i, r)});
  auto fj = map.image({index_grid(map.k, j, r)});
  if (!fi || !fj) throw std::invalid_argument("singleton image not available");
  return threshold_set(*fi, *fj, margin);
}

EngineOutcome refute(const CandidateMap& map, const RefuteOptions& opts) {
  if (map.k < 2) throw std::invalid_argument("refute requires k >= 2");
  Rat margin = eta(map.k, map.claimed_D);
  if (!(margin > 0))
    throw std::invalid_argument("claimed distortion must be below k/(k-1)");

  Engine eng{map, opts, margin, {}};
  EngineOutcome out;

  auto deep = iterated_derivative(map.compact, DeriveOrder::finite(map.k - 1));
  if (deep && !deep->endpoint.is_finite()) {
    out.kind = EngineOutcome::Kind::inconclusive;
    out.reason = EngineOutcome::Reason::derived_set_infinite;
    eng.log("K^(" + std::to_string(map.k - 1) +
            ") is infinite; theorem hypothesis unmet");
    out.trace = eng.trace;
    return out;
  }
  std::vector<Ordinal> top_points;
  if (deep)
    for (std::uint64_t q = 0; q <= deep->endpoint.finite_value(); ++q)
      top_points.push_back(
          from_derived_iter(Ordinal::finite(q), map.k - 1));
  eng.log("K^(" + std::to_string(map.k - 1) + ") has " +
          std::to_string(top_points.size()) + " points; eta = " +
          format_rational(margin));

  auto finish_witness = [&](RefutationWitness w) {
    w.trace = eng.trace;
    out.kind = EngineOutcome::Kind::witness;
    out.witness = std::move(w);
    out.trace = eng.trace;
    return out;
  };

  try {
    // Direct sweep: the two family blocks, then singletons.
    DeltaPoint block1, block2;
    for (std::uint64_t i = 1; i <= map.k; ++i) {
      block1.push_back(index_grid(map.k, i, 1));
      block2.push_back(index_grid(map.k, i, 2));
    }
    block1 = make_delta_point(block1);
    block2 = make_delta_point(block2);
    if (auto w = eng.check_pair(block1, block2, "disjoint full sets"))
      return finish_witness(*w);
    for (std::uint64_t n = 0; n < 2 * map.k; ++n) {
      if (auto w = eng.check_pair({}, {n}, "singleton vs empty set"))
        return finish_witness(*w);
    }
    for (std::uint64_t a = 0; a < 2 * map.k; ++a)
      for (std::uint64_t b = a + 1; b < 2 * map.k; ++b)
        if (auto w = eng.check_pair({a}, {b}, "singleton pair"))
          return finish_witness(*w);

    // Claims machinery: pigeonhole at family 1 over K^(k-1), then descend.
    std::uint64_t need =
        packing_bound(map.claimed_D, margin, top_points.size()) + 1;
    if (need > opts.max_index) throw Exhausted{};
    std::optional<RefutationWitness> w;
    auto pick = eng.pigeonhole(1, need, top_points, w);
    if (w) return finish_witness(*w);
    return finish_witness(eng.descend({pick}));
  } catch (const Exhausted&) {
    out.kind = EngineOutcome::Kind::inconclusive;
    out.reason = EngineOutcome::Reason::window_exhausted;
    eng.log("window exhausted before any violation surfaced");
    out.trace = eng.trace;
    return out;
  } catch (const std::overflow_error&) {
    out.kind = EngineOutcome::Kind::inconclusive;
    out.reason = EngineOutcome::Reason::window_exhausted;
    eng.log("packing bound exceeds any feasible window");
    out.trace = eng.trace;
    return out;
  }
}

bool verify_witness(const CandidateMap& map, const RefutationWitness& w) {
  auto fa = map.image(w.a);
  auto fb = map.image(w.b);
  if (!fa || !fb)
    throw std::invalid_argument("witness points outside the map domain");
  if (w.a == w.b) return false;
  Rat d{Int(sym_diff_distance(w.a, w.b))};
  if (sup_norm_diff(*fa, *fb).first != w.measured) return false;
  if (sup_norm_diff(w.image_a, w.image_b).first != w.measured) return false;
  if (w.violated == RefutationWitness::Bound::lower) return w.measured < d;
  return w.measured > map.claimed_D * d;
}

Rat lower_bound_for_sigma(const SigmaValue& s) {
  if (s.kind != SigmaValue::Kind::finite) return 1;
  if (s.n <= 1) return 2;
  return Rat(Int(s.n + 1), Int(s.n));
}

UniversalityReport universality_obstruction(const CompactInterval& k) {
  SigmaValue s = sigma(k);
  return {s, lower_bound_for_sigma(s),
          s.kind != SigmaValue::Kind::finite};
}

EngineOutcome demo_aharoni(std::uint64_t n, const Rat& claimed_D,
                           const CandidateMap* supplied) {
  if (n < 3) throw std::invalid_argument("demo needs n >= 3");
  CompactInterval compact{Ordinal::omega()};
  CandidateMap map = supplied
                         ? *supplied
                         : basis_indicator_map(2, compact, claimed_D);
  Rat margin = eta(2, claimed_D);
  if (!(margin > 0))
    throw std::invalid_argument("claimed distortion must be below 2");

  Engine eng{map, {}, margin, {}};
  EngineOutcome out;
  eng.log("Aharoni walkthrough: k=2, K=[0,w], D = " +
          format_rational(claimed_D) + ", eta = 4-2D = " +
          format_rational(margin));

  auto finish_witness = [&](RefutationWitness w) {
    w.trace = eng.trace;
    out.kind = EngineOutcome::Kind::witness;
    out.witness = std::move(w);
    out.trace = eng.trace;
    return out;
  };

  try {
    if (auto w = eng.check_pair({1}, {2}, "branch roots"))
      return finish_witness(*w);
    auto x12 = threshold_set(eng.img({1}), eng.img({2}), margin);
    eng.log("X^1_{1,2} = " + format_clopen(x12));
    for (std::uint64_t i = 3; i <= n; ++i)
      for (std::uint64_t j = 3; j <= n; ++j) {
        if (i == j) continue;
        auto xij = threshold_set(eng.img({i}), eng.img({j}), margin);
        eng.log("X^2_{i,j} with (i,j)=(" + std::to_string(i) + "," +
                std::to_string(j) + ") = " + format_clopen(xij));
        DeltaPoint sigma{1, i}, tau{2, j};
        if (auto w = eng.check_pair(sigma, tau, "full-set pair"))
          return finish_witness(*w);
        for (const auto& [s, full] : {std::pair<DeltaPoint, DeltaPoint>{
                                          {1}, sigma},
                                      {{2}, tau},
                                      {{i}, sigma},
                                      {{j}, tau}})
          if (auto w = eng.check_pair(s, full, "singleton vs full set"))
            return finish_witness(*w);
        auto both = intersect(x12, xij);
        eng.log("X^1_{1,2} n X^2_{i,j} = " + format_clopen(both));
      }
    // Projection stage: X^1_{1,2} plays the role of the coordinate set of
    // the canonical projection P. If it reaches K' = {w} the finite window
    // cannot close the argument; otherwise its finitely many points carry
    // the packing contradiction.
    if (x12.contains(Ordinal::omega())) {
      eng.log("X^1_{1,2} meets K'; window cannot close the argument");
      throw Exhausted{};
    }
    auto q = finite_points_of_rank(x12, 0);
    if (!q) throw std::logic_error("X^1_{1,2} finite yet unenumerable");
    std::uint64_t need = packing_bound(claimed_D, margin, q->size()) + 1;
    if (2 + need > n) throw Exhausted{};
    for (std::uint64_t i = 3; i < 3 + need; ++i)
      if (auto w = eng.check_pair({}, {i}, "projection stage bound"))
        return finish_witness(*w);
    for (std::uint64_t i = 3; i < 3 + need; ++i)
      for (std::uint64_t j = i + 1; j < 3 + need; ++j) {
        bool close = true;
        for (const auto& beta : *q)
          close = close && rat_abs(eng.img({i}).eval(beta) -
                                   eng.img({j}).eval(beta)) < margin;
        if (!close) continue;
        eng.log("pigeonhole: f({" + std::to_string(i) + "}) and f({" +
                std::to_string(j) +
                "}) are < eta apart on X^1_{1,2}; claims for this pair "
                "must fail");
        DeltaPoint sigma{1, i}, tau{2, j};
        if (auto w = eng.check_pair(sigma, tau, "full-set pair"))
          return finish_witness(*w);
        for (const auto& [s, full] : {std::pair<DeltaPoint, DeltaPoint>{
                                          {1}, sigma},
                                      {{2}, tau},
                                      {{i}, sigma},
                                      {{j}, tau}})
          if (auto w = eng.check_pair(s, full, "singleton vs full set"))
            return finish_witness(*w);
        throw std::logic_error("claims chain closed without a violation");
      }
    throw std::logic_error("packing bound violated");
  } catch (const Exhausted&) {
    out.kind = EngineOutcome::Kind::inconclusive;
    out.reason = EngineOutcome::Reason::window_exhausted;
    eng.log("query window exhausted before any violation surfaced");
    out.trace = eng.trace;
    return out;
  } catch (const std::overflow_error&) {
    out.kind = EngineOutcome::Kind::inconclusive;
    out.reason = EngineOutcome::Reason::window_exhausted;
    eng.log("packing bound exceeds any feasible window");
    out.trace = eng.trace;
    return out;
  }
}

}  // namespace ckdist
