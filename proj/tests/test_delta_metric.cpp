#include <random>
#include <set>

#include "doctest.h"

#include "ckdist/delta_metric.hpp"

using namespace ckdist;

namespace {

DeltaPoint random_point(std::mt19937& rng, std::uint64_t k,
                        std::uint64_t universe) {
  std::uniform_int_distribution<std::uint64_t> size_d(0, k),
      elem_d(0, universe - 1);
  std::set<std::uint64_t> s;
  std::uint64_t size = size_d(rng);
  while (s.size() < size) s.insert(elem_d(rng));
  return DeltaPoint(s.begin(), s.end());
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("symmetric difference metric axioms") {
  std::mt19937 rng(60901);
  for (int t = 0; t < 10000; ++t) {
    auto a = random_point(rng, 6, 30);
    auto b = random_point(rng, 6, 30);
    auto c = random_point(rng, 6, 30);
    CHECK(sym_diff_distance(a, b) == sym_diff_distance(b, a));
    CHECK((sym_diff_distance(a, b) == 0) == (a == b));
    CHECK(sym_diff_distance(a, c) <=
          sym_diff_distance(a, b) + sym_diff_distance(b, c));
  }
}

TEST_CASE("the worked distance value") {
  DeltaPoint a = make_delta_point({1, 4, 6, 100});
  DeltaPoint b = make_delta_point({4, 6, 33});
  CHECK(sym_diff_distance(a, b) == 3);
  CHECK(sym_diff_distance(a, {}) == 4);
  CHECK(sym_diff_distance({}, {}) == 0);
}

TEST_CASE("make_delta_point sorts and dedups") {
  CHECK(make_delta_point({5, 1, 5, 3}) == DeltaPoint{1, 3, 5});
  CHECK(make_delta_point({}) == DeltaPoint{});
}

TEST_CASE("enumerate_delta counts and bounds") {
  for (std::uint64_t k = 1; k <= 4; ++k) {
    auto pts = enumerate_delta(k, 12);
    std::uint64_t expect = 0;
    for (std::uint64_t s = 0; s <= k; ++s) expect += binom(12, s);
    CHECK(pts.size() == expect);
    std::set<DeltaPoint> distinct(pts.begin(), pts.end());
    CHECK(distinct.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        auto d = sym_diff_distance(pts[i], pts[j]);
        CHECK(d >= 1);
        CHECK(d <= 2 * k);
      }
  }
  // ordering: by size, then lexicographically
  auto small = enumerate_delta(2, 3);
  std::vector<DeltaPoint> expect{{},     {0},    {1},    {2},
                                 {0, 1}, {0, 2}, {1, 2}};
  CHECK(small == expect);
}

TEST_CASE("t122 query set") {
  auto pts = t122_points(5);
  CHECK(pts.size() == 1 + 5 + 2 * 3);
  CHECK(pts.front() == DeltaPoint{});
  std::set<DeltaPoint> s(pts.begin(), pts.end());
  CHECK(s.count({1, 4}) == 1);
  CHECK(s.count({2, 5}) == 1);
  CHECK(s.count({3}) == 1);
  CHECK(s.count({3, 4}) == 0);
  CHECK_THROWS_AS(t122_points(2), std::invalid_argument);
}

TEST_CASE("index grid is the k-column layout") {
  CHECK(index_grid(2, 1, 1) == 0);
  CHECK(index_grid(2, 1, 2) == 1);
  CHECK(index_grid(2, 2, 1) == 2);
  CHECK(index_grid(3, 4, 2) == 10);
  CHECK_THROWS_AS(index_grid(2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(index_grid(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(index_grid(2, 1, 3), std::invalid_argument);
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 1; i <= 10; ++i)
    for (std::uint64_t r = 1; r <= 3; ++r)
      CHECK(seen.insert(index_grid(3, i, r)).second);
}

TEST_CASE("ell1 embedding is an isometry") {
  auto pts = enumerate_delta(3, 8);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j)
      CHECK(ell1_distance(ell1_embed(pts[i]), ell1_embed(pts[j])) ==
            Rat(Int(sym_diff_distance(pts[i], pts[j]))));
}

TEST_CASE("sparse vectors") {
  auto v = make_sparse_vector({{3, Rat(0)}, {5, Rat(2)}, {9, Rat(-1, Int(2))}});
  CHECK(v.size() == 2);
  CHECK(v.count(3) == 0);
  CHECK(ell1_norm(v) == Rat(5, Int(2)));
  auto w = make_sparse_vector({{5, Rat(1)}});
  CHECK(ell1_distance(v, w) == Rat(3, Int(2)));
  CHECK(format_delta_point({1, 2, 9}) == "{1,2,9}");
  CHECK(format_delta_point({}) == "{}");
}
