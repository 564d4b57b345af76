#include "ckdist/delta_metric.hpp"

#include <algorithm>
#include <stdexcept>

namespace ckdist {

DeltaPoint make_delta_point(std::vector<std::uint64_t> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

std::uint64_t sym_diff_distance(const DeltaPoint& sigma, const DeltaPoint& tau) {
  std::uint64_t common = 0;
  std::size_t i = 0, j = 0;
  while (i < sigma.size() && j < tau.size()) {
    if (sigma[i] == tau[j]) {
      ++common;
      ++i;
      ++j;
    } else if (sigma[i] < tau[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return sigma.size() + tau.size() - 2 * common;
}

namespace {

void enumerate_size(std::uint64_t n, std::uint64_t size, std::uint64_t start,
                    DeltaPoint& cur, std::vector<DeltaPoint>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t v = start; v < n; ++v) {
    cur.push_back(v);
    enumerate_size(n, size, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DeltaPoint> enumerate_delta(std::uint64_t k, std::uint64_t n) {
  std::vector<DeltaPoint> out;
  DeltaPoint cur;
  for (std::uint64_t size = 0; size <= std::min(k, n); ++size)
    enumerate_size(n, size, 0, cur, out);
  return out;
}

std::vector<DeltaPoint> t122_points(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("t122_points requires n >= 3");
  std::vector<DeltaPoint> out;
  out.push_back({});
  for (std::uint64_t i = 1; i <= n; ++i) out.push_back({i});
  for (std::uint64_t i = 3; i <= n; ++i) {
    out.push_back({1, i});
    out.push_back({2, i});
  }
  return out;
}

std::uint64_t index_grid(std::uint64_t k, std::uint64_t i, std::uint64_t r) {
  if (r < 1 || r > k) throw std::invalid_argument("family index out of range");
  if (i < 1) throw std::invalid_argument("sequence index must be >= 1");
  return k * (i - 1) + r - 1;
}

SparseVector make_sparse_vector(std::map<std::uint64_t, Rat> entries) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (it->second == 0)
      it = entries.erase(it);
    else
      ++it;
  }
  return entries;
}

SparseVector ell1_embed(const DeltaPoint& sigma) {
  SparseVector v;
  for (auto n : sigma) v[n] = 1;
  return v;
}

Rat ell1_distance(const SparseVector& u, const SparseVector& v) {
  Rat total = 0;
  auto iu = u.begin();
  auto iv = v.begin();
  while (iu != u.end() || iv != v.end()) {
    if (iv == v.end() || (iu != u.end() && iu->first < iv->first)) {
      total += rat_abs(iu->second);
      ++iu;
    } else if (iu == u.end() || iv->first < iu->first) {
      total += rat_abs(iv->second);
      ++iv;
    } else {
      total += rat_abs(iu->second - iv->second);
      ++iu;
      ++iv;
    }
  }
  return total;
}

Rat ell1_norm(const SparseVector& u) { return ell1_distance(u, {}); }

std::string format_delta_point(const DeltaPoint& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "}";
}

}  // namespace ckdist
