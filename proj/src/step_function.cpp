#include "ckdist/step_function.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace ckdist {

namespace {

void require_same_compact(const CompactInterval& a, const CompactInterval& b) {
  if (!(a == b)) throw std::invalid_argument("compact mismatch");
}

// Lower bounds compare with "absent" below everything.
bool lo_less(const std::optional<Ordinal>& a, const std::optional<Ordinal>& b) {
  if (!a) return b.has_value();
  if (!b) return false;
  return *a < *b;
}

}  // namespace

ClopenUnion ClopenUnion::whole(const CompactInterval& compact) {
  return from_intervals(compact, {{std::nullopt, compact.endpoint}});
}

ClopenUnion ClopenUnion::from_intervals(CompactInterval compact,
                                        std::vector<Interval> parts) {
  for (auto& p : parts) {
    if (p.hi > compact.endpoint)
      throw std::invalid_argument("clopen interval exceeds the compact");
    if (p.lo && !(*p.lo < p.hi))
      throw std::invalid_argument("empty clopen interval");
  }
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return lo_less(a.lo, b.lo);
    return a.hi < b.hi;
  });
  ClopenUnion u(std::move(compact));
  for (auto& p : parts) {
    if (!u.parts_.empty()) {
      Interval& cur = u.parts_.back();
      // Overlapping or adjacent: (a,b] u (c,d] with c <= b.
      if (!p.lo || *p.lo <= cur.hi) {
        if (p.hi > cur.hi) cur.hi = p.hi;
        continue;
      }
    }
    u.parts_.push_back(std::move(p));
  }
  return u;
}

bool ClopenUnion::contains(const Ordinal& gamma) const {
  for (const auto& p : parts_) {
    if (gamma <= p.hi && (!p.lo || *p.lo < gamma)) return true;
    if (gamma <= p.hi) return false;  // parts are sorted
  }
  return false;
}

bool ClopenUnion::meets_derived(std::uint64_t i) const {
  for (const auto& p : parts_) {
    auto ph = floor_to_derived_iter(p.hi, i);
    if (!ph) continue;
    Ordinal best = from_derived_iter(*ph, i);  // largest rank>=i point <= hi
    if (!p.lo || best > *p.lo) return true;
  }
  return false;
}

ClopenUnion intersect(const ClopenUnion& a, const ClopenUnion& b) {
  require_same_compact(a.compact(), b.compact());
  std::vector<ClopenUnion::Interval> out;
  for (const auto& pa : a.parts()) {
    for (const auto& pb : b.parts()) {
      std::optional<Ordinal> lo =
          lo_less(pa.lo, pb.lo) ? pb.lo : pa.lo;  // max of lower bounds
      const Ordinal& hi = pa.hi < pb.hi ? pa.hi : pb.hi;
      if (!lo || *lo < hi) out.push_back({lo, hi});
    }
  }
  return ClopenUnion::from_intervals(a.compact(), std::move(out));
}

ClopenUnion unite(const ClopenUnion& a, const ClopenUnion& b) {
  require_same_compact(a.compact(), b.compact());
  auto parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return ClopenUnion::from_intervals(a.compact(), std::move(parts));
}

std::optional<std::vector<Ordinal>> finite_points_of_rank(const ClopenUnion& u,
                                                          std::uint64_t i) {
  if (u.meets_derived(i + 1)) return std::nullopt;
  std::vector<Ordinal> points;
  for (const auto& p : u.parts()) {
    auto ph = floor_to_derived_iter(p.hi, i);
    if (!ph) continue;
    std::optional<Ordinal> pl;
    if (p.lo) pl = floor_to_derived_iter(*p.lo, i);
    if (pl && !(*pl < *ph)) continue;
    // No limit lies in the derived-coordinate range (checked above), so
    // successor stepping reaches every point of it.
    Ordinal q = pl ? successor(*pl) : Ordinal::zero();
    while (q <= *ph) {
      points.push_back(from_derived_iter(q, i));
      q = successor(q);
    }
  }
  return points;
}

std::string format_clopen(const ClopenUnion& u) {
  if (u.is_empty()) return "{}";
  std::string out;
  for (const auto& p : u.parts()) {
    if (!out.empty()) out += " u ";
    if (p.lo)
      out += "(" + format_ordinal(*p.lo) + "," + format_ordinal(p.hi) + "]";
    else
      out += "[0," + format_ordinal(p.hi) + "]";
  }
  return out;
}

StepFunction StepFunction::make(CompactInterval compact,
                                std::vector<Ordinal> cuts,
                                std::vector<Rat> values) {
  if (values.size() != cuts.size() + 1)
    throw std::invalid_argument("need exactly one more value than cuts");
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (!(cuts[i] < compact.endpoint))
      throw std::invalid_argument("cut at or beyond the endpoint");
    if (i > 0 && !(cuts[i - 1] < cuts[i]))
      throw std::invalid_argument("cuts must be strictly increasing");
  }
  StepFunction f;
  f.compact_ = std::move(compact);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!f.values_.empty() && f.values_.back() == values[i]) {
      f.cuts_.pop_back();  // merge equal adjacent pieces
    } else {
      f.values_.push_back(std::move(values[i]));
    }
    if (i < cuts.size()) f.cuts_.push_back(std::move(cuts[i]));
  }
  return f;
}

StepFunction StepFunction::constant(const CompactInterval& compact, Rat v) {
  return make(compact, {}, {std::move(v)});
}

Rat StepFunction::eval(const Ordinal& gamma) const {
  if (!compact_.contains(gamma))
    throw std::invalid_argument("point outside the compact");
  auto it = std::lower_bound(cuts_.begin(), cuts_.end(), gamma);
  return values_[static_cast<std::size_t>(it - cuts_.begin())];
}

namespace {

struct MergedPiece {
  std::optional<Ordinal> lo;
  Ordinal hi;
  Rat fv, gv;
};

std::vector<MergedPiece> merged_partition(const StepFunction& f,
                                          const StepFunction& g) {
  require_same_compact(f.compact(), g.compact());
  std::vector<MergedPiece> out;
  std::size_t i = 0, j = 0;
  std::optional<Ordinal> lo;
  while (true) {
    bool fi = i < f.cuts().size();
    bool gj = j < g.cuts().size();
    Ordinal hi;
    if (fi && (!gj || f.cuts()[i] <= g.cuts()[j]))
      hi = f.cuts()[i];
    else if (gj)
      hi = g.cuts()[j];
    else
      hi = f.compact().endpoint;
    out.push_back({lo, hi, f.values()[i], g.values()[j]});
    if (!fi && !gj) break;
    if (fi && f.cuts()[i] == hi) ++i;
    if (gj && g.cuts()[j] == hi) ++j;
    lo = hi;
  }
  return out;
}

StepFunction from_merged(const StepFunction& f, const StepFunction& g,
                         const std::function<Rat(const Rat&, const Rat&)>& op) {
  auto pieces = merged_partition(f, g);
  std::vector<Ordinal> cuts;
  std::vector<Rat> values;
  for (std::size_t t = 0; t < pieces.size(); ++t) {
    if (t + 1 < pieces.size()) cuts.push_back(pieces[t].hi);
    values.push_back(op(pieces[t].fv, pieces[t].gv));
  }
  return StepFunction::make(f.compact(), std::move(cuts), std::move(values));
}

}  // namespace

StepFunction difference(const StepFunction& f, const StepFunction& g) {
  return from_merged(f, g, [](const Rat& a, const Rat& b) { return Rat(a - b); });
}

StepFunction scale(const StepFunction& f, const Rat& c) {
  std::vector<Rat> values;
  for (const auto& v : f.values()) values.push_back(v * c);
  return StepFunction::make(f.compact(), f.cuts(), std::move(values));
}

std::pair<Rat, ClopenUnion> sup_norm_diff(const StepFunction& f,
                                          const StepFunction& g) {
  auto pieces = merged_partition(f, g);
  Rat best = 0;
  for (const auto& p : pieces) {
    Rat d = rat_abs(p.fv - p.gv);
    if (d > best) best = d;
  }
  std::vector<ClopenUnion::Interval> attain;
  for (const auto& p : pieces)
    if (rat_abs(p.fv - p.gv) == best) attain.push_back({p.lo, p.hi});
  return {best,
          ClopenUnion::from_intervals(f.compact(), std::move(attain))};
}

Rat sup_norm(const StepFunction& f) {
  return sup_norm_diff(f, StepFunction::constant(f.compact(), 0)).first;
}

ClopenUnion threshold_set(const StepFunction& f, const StepFunction& g,
                          const Rat& theta) {
  if (!(theta > 0)) throw std::invalid_argument("threshold must be positive");
  auto pieces = merged_partition(f, g);
  std::vector<ClopenUnion::Interval> keep;
  for (const auto& p : pieces)
    if (rat_abs(p.fv - p.gv) >= theta) keep.push_back({p.lo, p.hi});
  return ClopenUnion::from_intervals(f.compact(), std::move(keep));
}

StepFunction restrict_to_derived(const StepFunction& f, std::uint64_t i) {
  auto derived =
      iterated_derivative(f.compact(), DeriveOrder::finite(i));
  if (!derived) throw std::invalid_argument("derived set is empty");
  if (i == 0) return f;
  std::vector<Ordinal> bounds = f.cuts();
  bounds.push_back(f.compact().endpoint);
  std::vector<Ordinal> new_bounds;
  std::vector<Rat> new_values;
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    auto fb = floor_to_derived_iter(bounds[j], i);
    if (!fb) continue;
    if (!new_bounds.empty() && !(new_bounds.back() < *fb)) continue;
    new_bounds.push_back(*fb);
    new_values.push_back(f.values()[j]);
  }
  assert(!new_bounds.empty() && new_bounds.back() == derived->endpoint);
  new_bounds.pop_back();
  return StepFunction::make(*derived, std::move(new_bounds),
                            std::move(new_values));
}

}  // namespace ckdist
