#include <random>

#include "doctest.h"

#include "ckdist/step_function.hpp"
#include "oracles.hpp"

using namespace ckdist;

namespace {

const CompactInterval kOmega{Ordinal::omega()};
const CompactInterval kOmegaSq{Ordinal::single(2, 1)};

StepFunction random_step(std::mt19937& rng, const CompactInterval& compact,
                         std::uint64_t max_cut) {
  std::uniform_int_distribution<std::uint64_t> cut_d(1, max_cut),
      count_d(0, 4);
  std::uniform_int_distribution<int> num_d(-6, 6);
  std::uniform_int_distribution<std::uint64_t> den_d(1, 4);
  std::set<std::uint64_t> cut_set;
  std::uint64_t count = count_d(rng);
  while (cut_set.size() < count) cut_set.insert(cut_d(rng));
  std::vector<Ordinal> cuts;
  for (auto c : cut_set) cuts.push_back(Ordinal::finite(c));
  std::vector<Rat> values;
  for (std::size_t i = 0; i <= cuts.size(); ++i)
    values.push_back(Rat(num_d(rng), Int(den_d(rng))));
  return StepFunction::make(compact, std::move(cuts), std::move(values));
}

// One representative per merged piece: the closed right endpoint.
std::vector<Ordinal> representatives(const StepFunction& f,
                                     const StepFunction& g) {
  std::vector<Ordinal> out;
  for (const auto& c : f.cuts()) out.push_back(c);
  for (const auto& c : g.cuts()) out.push_back(c);
  out.push_back(f.compact().endpoint);
  if (!out.empty()) {
    // also sample the interior of the first piece
    out.push_back(Ordinal::zero());
  }
  return out;
}

}  // namespace

TEST_CASE("clopen unions normalize") {
  auto u = ClopenUnion::from_intervals(
      kOmega, {{Ordinal::finite(3), Ordinal::finite(5)},
               {std::nullopt, Ordinal::finite(2)},
               {Ordinal::finite(2), Ordinal::finite(3)}});
  REQUIRE(u.parts().size() == 1);
  CHECK(!u.parts()[0].lo);
  CHECK(u.parts()[0].hi == Ordinal::finite(5));
  CHECK(format_clopen(u) == "[0,5]");

  auto v = ClopenUnion::from_intervals(
      kOmega, {{Ordinal::finite(6), Ordinal::finite(8)},
               {Ordinal::finite(1), Ordinal::finite(3)}});
  CHECK(v.parts().size() == 2);
  CHECK(format_clopen(v) == "(1,3] u (6,8]");
  CHECK(v.contains(Ordinal::finite(2)));
  CHECK_FALSE(v.contains(Ordinal::finite(1)));
  CHECK_FALSE(v.contains(Ordinal::finite(5)));

  CHECK_THROWS_AS(ClopenUnion::from_intervals(
                      kOmega, {{Ordinal::finite(3), Ordinal::finite(3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ClopenUnion::from_intervals(
                      kOmega, {{std::nullopt, Ordinal::single(2, 1)}}),
                  std::invalid_argument);
}

TEST_CASE("intersection and union against membership") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<std::uint64_t> b_d(0, 12);
  for (int t = 0; t < 300; ++t) {
    auto mk = [&] {
      std::vector<ClopenUnion::Interval> parts;
      for (int p = 0; p < 2; ++p) {
        std::uint64_t a = b_d(rng), b = b_d(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        parts.push_back({Ordinal::finite(a), Ordinal::finite(b)});
      }
      return ClopenUnion::from_intervals(kOmega, std::move(parts));
    };
    ClopenUnion x = mk(), y = mk();
    auto both = intersect(x, y);
    auto either = unite(x, y);
    for (std::uint64_t v = 0; v <= 13; ++v) {
      Ordinal g = Ordinal::finite(v);
      CHECK(both.contains(g) == (x.contains(g) && y.contains(g)));
      CHECK(either.contains(g) == (x.contains(g) || y.contains(g)));
    }
  }
}

TEST_CASE("meets_derived and infinitude") {
  auto tail = ClopenUnion::from_intervals(
      kOmega, {{Ordinal::finite(5), Ordinal::omega()}});
  CHECK(tail.meets_derived(1));
  CHECK(tail.is_infinite());
  auto chunk = ClopenUnion::from_intervals(
      kOmega, {{Ordinal::finite(5), Ordinal::finite(90)}});
  CHECK_FALSE(chunk.meets_derived(1));
  CHECK_FALSE(chunk.is_infinite());
  CHECK(chunk.meets_derived(0));

  auto high = ClopenUnion::from_intervals(
      kOmegaSq, {{Ordinal::single(1, 2), Ordinal::single(1, 3)}});
  CHECK(high.meets_derived(1));      // contains w*3
  CHECK_FALSE(high.meets_derived(2));
  auto top = ClopenUnion::from_intervals(
      kOmegaSq, {{Ordinal::single(1, 2), Ordinal::single(2, 1)}});
  CHECK(top.meets_derived(2));
  CHECK(ClopenUnion(kOmega).is_empty());
  CHECK_FALSE(ClopenUnion(kOmega).meets_derived(0));
}

TEST_CASE("finite_points_of_rank enumerates exactly") {
  auto u = ClopenUnion::from_intervals(
      kOmega, {{Ordinal::finite(2), Ordinal::finite(5)},
               {Ordinal::finite(7), Ordinal::finite(9)}});
  auto pts = finite_points_of_rank(u, 0);
  REQUIRE(pts.has_value());
  std::vector<Ordinal> expect{Ordinal::finite(3), Ordinal::finite(4),
                              Ordinal::finite(5), Ordinal::finite(8),
                              Ordinal::finite(9)};
  CHECK(*pts == expect);

  auto tail = ClopenUnion::from_intervals(
      kOmega, {{Ordinal::finite(5), Ordinal::omega()}});
  CHECK(finite_points_of_rank(tail, 0) == std::nullopt);
  auto t1 = finite_points_of_rank(tail, 1);
  REQUIRE(t1.has_value());
  CHECK(*t1 == std::vector<Ordinal>{Ordinal::omega()});

  // rank-1 points of a block in [0, w^2]: the limits w*3, w*4
  auto block = ClopenUnion::from_intervals(
      kOmegaSq, {{Ordinal::single(1, 2), Ordinal::from_terms({{1, 4}, {0, 2}})}});
  auto r1 = finite_points_of_rank(block, 1);
  REQUIRE(r1.has_value());
  CHECK(*r1 == std::vector<Ordinal>{Ordinal::single(1, 3), Ordinal::single(1, 4)});
  CHECK(finite_points_of_rank(block, 0) == std::nullopt);
}

TEST_CASE("step function construction and eval") {
  auto f = StepFunction::make(kOmega,
                              {Ordinal::finite(2), Ordinal::finite(5)},
                              {Rat(1), Rat(1), Rat(3)});
  // equal adjacent values merge
  CHECK(f.cuts().size() == 1);
  CHECK(f.cuts()[0] == Ordinal::finite(5));
  CHECK(f.eval(Ordinal::finite(0)) == 1);
  CHECK(f.eval(Ordinal::finite(5)) == 1);
  CHECK(f.eval(Ordinal::finite(6)) == 3);
  CHECK(f.eval(Ordinal::omega()) == 3);
  CHECK_THROWS_AS(f.eval(Ordinal::single(2, 1)), std::invalid_argument);

  CHECK_THROWS_AS(StepFunction::make(kOmega, {Ordinal::omega()}, {Rat(0), Rat(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StepFunction::make(kOmega, {Ordinal::finite(2)}, {Rat(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      StepFunction::make(kOmega, {Ordinal::finite(2), Ordinal::finite(2)},
                         {Rat(0), Rat(1), Rat(2)}),
      std::invalid_argument);
}

TEST_CASE("algebra matches pointwise evaluation") {
  std::mt19937 rng(8888);
  for (int t = 0; t < 400; ++t) {
    StepFunction f = random_step(rng, kOmega, 10);
    StepFunction g = random_step(rng, kOmega, 10);
    StepFunction d = difference(f, g);
    StepFunction s = scale(f, Rat(-3, Int(2)));
    auto [norm, attain] = sup_norm_diff(f, g);
    Rat best = 0;
    for (const auto& r : representatives(f, g)) {
      CHECK(d.eval(r) == f.eval(r) - g.eval(r));
      CHECK(s.eval(r) == f.eval(r) * Rat(-3, Int(2)));
      Rat gap = rat_abs(f.eval(r) - g.eval(r));
      if (gap > best) best = gap;
      CHECK(attain.contains(r) == (gap == norm));
    }
    CHECK(best == norm);
  }
}

TEST_CASE("threshold sets match the pointwise definition") {
  std::mt19937 rng(424242);
  for (int t = 0; t < 400; ++t) {
    StepFunction f = random_step(rng, kOmega, 10);
    StepFunction g = random_step(rng, kOmega, 10);
    Rat theta(1, Int(2));
    auto u = threshold_set(f, g, theta);
    for (std::uint64_t v = 0; v <= 11; ++v) {
      Ordinal p = Ordinal::finite(v);
      CHECK(u.contains(p) == (rat_abs(f.eval(p) - g.eval(p)) >= theta));
    }
    Ordinal w = Ordinal::omega();
    CHECK(u.contains(w) == (rat_abs(f.eval(w) - g.eval(w)) >= theta));
  }
  CHECK_THROWS_AS(threshold_set(StepFunction::constant(kOmega, Rat(1)),
                                StepFunction::constant(kOmega, Rat(0)), Rat(0)),
                  std::invalid_argument);
}

TEST_CASE("restriction to the derived interval") {
  // constant functions restrict to the same constant
  auto c = StepFunction::constant(kOmegaSq, Rat(7, Int(3)));
  auto rc = restrict_to_derived(c, 1);
  CHECK(rc.compact() == CompactInterval{Ordinal::omega()});
  CHECK(rc.values() == std::vector<Rat>{Rat(7, Int(3))});

  // pieces cut at successor ordinals only collapse onto K'
  auto f = StepFunction::make(
      kOmegaSq,
      {Ordinal::finite(4), successor(Ordinal::single(1, 2))},
      {Rat(1), Rat(2), Rat(5)});
  auto rf = restrict_to_derived(f, 1);
  // K' points w, w*2 take value 2; later limits take 5. In derived
  // coordinates: [0,1] -> 2, (1, w] -> 5.
  CHECK(rf.compact() == CompactInterval{Ordinal::omega()});
  CHECK(rf.eval(Ordinal::zero()) == 2);
  CHECK(rf.eval(Ordinal::finite(1)) == 2);
  CHECK(rf.eval(Ordinal::finite(2)) == 5);
  CHECK(rf.eval(Ordinal::omega()) == 5);

  CHECK_THROWS_AS(
      restrict_to_derived(StepFunction::constant(
                              CompactInterval{Ordinal::finite(5)}, Rat(1)),
                          1),
      std::invalid_argument);

  // restriction commutes with pointwise evaluation through from_derived
  std::mt19937 rng(1001);
  for (int t = 0; t < 200; ++t) {
    StepFunction g = random_step(rng, kOmegaSq, 12);
    auto rg = restrict_to_derived(g, 1);
    for (std::uint64_t p = 0; p <= 3; ++p) {
      Ordinal coord = Ordinal::finite(p);
      CHECK(rg.eval(coord) == g.eval(from_derived(coord)));
    }
    CHECK(rg.eval(Ordinal::omega()) == g.eval(Ordinal::single(2, 1)));
  }
}
