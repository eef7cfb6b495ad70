// Copyright 2026 The hamlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Canonical labeling by individualization-refinement.
//
// The canonical form is the lexicographically smallest adjacency encoding
// over the leaves of the search tree. Leaves with equal encodings yield
// automorphisms, which prune later siblings whose subtree is an image of an
// already explored one (orbits of the automorphisms fixing the current path
// pointwise).

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

inline constexpr int kDefaultCanonicalBound = 32;

struct CanonicalLabeling {
  std::vector<int> order;  // order[position] = dense vertex index
  std::string form;
};

namespace detail {

class Canonizer {
 public:
  /// `mult` is an n*n symmetric multiplicity matrix (loops on the diagonal).
  Canonizer(int n, std::vector<std::uint8_t> mult, std::vector<int> colors)
      : n_(n), mult_(std::move(mult)), colors_(std::move(colors)) {
    if (colors_.empty()) colors_.assign(n_, 0);
  }

  CanonicalLabeling run() {
    Partition root;
    std::vector<int> color_values = colors_;
    std::sort(color_values.begin(), color_values.end());
    color_values.erase(std::unique(color_values.begin(), color_values.end()), color_values.end());
    for (int c : color_values) {
      std::vector<int> cell;
      for (int v = 0; v < n_; ++v)
        if (colors_[v] == c) cell.push_back(v);
      root.push_back(std::move(cell));
    }
    refine(root);
    std::vector<int> path;
    search(root, path);
    return {best_order_, best_form_};
  }

 private:
  using Partition = std::vector<std::vector<int>>;

  int m(int a, int b) const { return mult_[a * n_ + b]; }

  void refine(Partition& p) const {
    std::vector<int> count(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.size() && !changed; ++s) {
        for (int v = 0; v < n_; ++v) {
          int c = 0;
          for (int u : p[s]) c += m(v, u);
          count[v] = c;
        }
        Partition next;
        next.reserve(p.size() + 4);
        for (auto& cell : p) {
          if (cell.size() == 1) {
            next.push_back(cell);
            continue;
          }
          std::vector<int> sorted = cell;
          std::stable_sort(sorted.begin(), sorted.end(),
                           [&](int a, int b) { return count[a] < count[b]; });
          std::size_t start = 0;
          for (std::size_t i = 1; i <= sorted.size(); ++i) {
            if (i == sorted.size() || count[sorted[i]] != count[sorted[start]]) {
              std::vector<int> part(sorted.begin() + start, sorted.begin() + i);
              std::sort(part.begin(), part.end());
              next.push_back(std::move(part));
              start = i;
            }
          }
        }
        if (next.size() != p.size()) changed = true;
        p = std::move(next);
      }
    }
  }

  std::string encode(const std::vector<int>& order) const {
    std::string s;
    s.reserve(1 + n_ + n_ * (n_ + 1) / 2);
    s.push_back(static_cast<char>(n_));
    for (int v : order) s.push_back(static_cast<char>(colors_[v] & 0xff));
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) s.push_back(static_cast<char>(m(order[i], order[j])));
    return s;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> perm(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      perm[from[i]] = to[i];
      if (from[i] != to[i]) identity = false;
    }
    if (!identity && automorphisms_.size() < kMaxStored) automorphisms_.push_back(std::move(perm));
  }

  void leaf(const Partition& p) {
    std::vector<int> order;
    order.reserve(n_);
    for (const auto& cell : p) order.push_back(cell[0]);
    std::string form = encode(order);
    if (first_order_.empty()) {
      first_order_ = order;
      first_form_ = form;
      best_order_ = order;
      best_form_ = std::move(form);
      return;
    }
    if (form == first_form_) record_automorphism(first_order_, order);
    if (form < best_form_) {
      best_form_ = std::move(form);
      best_order_ = std::move(order);
    } else if (form == best_form_) {
      record_automorphism(best_order_, order);
    }
  }

  bool same_orbit(const std::vector<int>& path, const std::vector<int>& explored, int v) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& g : automorphisms_) {
      bool fixes = true;
      for (int x : path)
        if (g[x] != x) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(g[x]);
    }
    if (!any) return false;
    const int rv = find(v);
    for (int w : explored)
      if (find(w) == rv) return true;
    return false;
  }

  void search(const Partition& p, std::vector<int>& path) {
    std::size_t target = p.size();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i].size() > 1) {
        target = i;
        break;
      }
    if (target == p.size()) {
      leaf(p);
      return;
    }
    std::vector<int> explored;
    for (int v : p[target]) {
      if (!explored.empty() && same_orbit(path, explored, v)) continue;
      explored.push_back(v);
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != target) {
          child.push_back(p[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : p[i])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      refine(child);
      path.push_back(v);
      search(child, path);
      path.pop_back();
    }
  }

  static constexpr std::size_t kMaxStored = 256;

  int n_;
  std::vector<std::uint8_t> mult_;
  std::vector<int> colors_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<int> first_order_, best_order_;
  std::string first_form_, best_form_;
};

inline std::vector<std::uint8_t> multiplicity_matrix(const DenseMultigraph& d) {
  std::vector<std::uint8_t> mult(d.n() * d.n(), 0);
  for (auto [a, b] : d.ends) {
    if (mult[a * d.n() + b] == 255) throw BoundExceeded("edge multiplicity above 255");
    ++mult[a * d.n() + b];
    if (a != b) ++mult[b * d.n() + a];
  }
  return mult;
}

inline std::vector<std::uint8_t> multiplicity_matrix(const SimpleGraph& g) {
  std::vector<std::uint8_t> mult(g.n() * g.n(), 0);
  for (int u = 0; u < g.n(); ++u)
    for_each_bit(g.neighbors(u), [&](int v) { mult[u * g.n() + v] = 1; });
  return mult;
}

inline void check_bound(int n, int bound) {
  if (n > bound)
    throw BoundExceeded("canonical labeling bound is " + std::to_string(bound) + " vertices, got " +
                        std::to_string(n));
}

}  // namespace detail

/// Canonical labeling; `colors` (per dense vertex index, may be empty) are
/// preserved by isomorphisms and are part of the form.
inline CanonicalLabeling canonical_labeling(const SimpleGraph& g, const std::vector<int>& colors = {},
                                            int bound = kDefaultCanonicalBound) {
  detail::check_bound(g.n(), bound);
  return detail::Canonizer(g.n(), detail::multiplicity_matrix(g), colors).run();
}

inline CanonicalLabeling canonical_labeling(const MultiGraph& h, const std::vector<int>& colors = {},
                                            int bound = kDefaultCanonicalBound) {
  const DenseMultigraph d(h);
  detail::check_bound(d.n(), bound);
  return detail::Canonizer(d.n(), detail::multiplicity_matrix(d), colors).run();
}

/// Byte string equal for two graphs iff they are isomorphic (multiplicity aware).
inline std::string canonical_form(const MultiGraph& h, const std::vector<int>& colors = {},
                                  int bound = kDefaultCanonicalBound) {
  return canonical_labeling(h, colors, bound).form;
}

inline std::string canonical_form(const SimpleGraph& g, const std::vector<int>& colors = {},
                                  int bound = kDefaultCanonicalBound) {
  return canonical_labeling(g, colors, bound).form;
}

inline bool is_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

inline bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n() != b.n() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hamlab
