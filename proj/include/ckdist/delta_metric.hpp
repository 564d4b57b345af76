#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ckdist/rational.hpp"

namespace ckdist {

// A point of Delta<=k(N): a finite subset of the naturals, kept sorted.
using DeltaPoint = std::vector<std::uint64_t>;

DeltaPoint make_delta_point(std::vector<std::uint64_t> elems);

// |sigma symmetric-difference tau|.
std::uint64_t sym_diff_distance(const DeltaPoint& sigma, const DeltaPoint& tau);

// All subsets of {0,...,n-1} of size <= k, ordered by size then
// lexicographically.
std::vector<DeltaPoint> enumerate_delta(std::uint64_t k, std::uint64_t n);

// The query set of Aharoni's proof over 1-based labels:
// {empty} u {{i} : 1<=i<=n} u {{1,i},{2,i} : 3<=i<=n}. Requires n >= 3.
std::vector<DeltaPoint> t122_points(std::uint64_t n);

// n_i^r = k(i-1) + r - 1 for 1 <= r <= k, i >= 1; injective across (i, r).
std::uint64_t index_grid(std::uint64_t k, std::uint64_t i, std::uint64_t r);

// A finitely supported rational vector (no explicit zeros).
using SparseVector = std::map<std::uint64_t, Rat>;

SparseVector make_sparse_vector(std::map<std::uint64_t, Rat> entries);
SparseVector ell1_embed(const DeltaPoint& sigma);
Rat ell1_distance(const SparseVector& u, const SparseVector& v);
Rat ell1_norm(const SparseVector& u);

std::string format_delta_point(const DeltaPoint& p);

}  // namespace ckdist
