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

// Shared vocabulary of the exhaustive searches: outcome, budget, walks.

#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

/// Absent is only ever reported after a complete search; a search cut short
/// by its budget says Indeterminate.
enum class SearchStatus { Found, Absent, Indeterminate };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

/// Limits for one search call; negative values mean unlimited.
struct Budget {
  long nodes = -1;
  long milliseconds = -1;
};

class BudgetMeter {
 public:
  explicit BudgetMeter(Budget b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  /// Counts one search node; false once the budget is spent.
  bool tick() {
    ++nodes_;
    if (exhausted_) return false;
    if (budget_.nodes >= 0 && nodes_ > budget_.nodes) exhausted_ = true;
    if (budget_.milliseconds >= 0 && (nodes_ & 1023) == 0) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      if (std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() > budget_.milliseconds)
        exhausted_ = true;
    }
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  long nodes() const { return nodes_; }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  long nodes_ = 0;
  bool exhausted_ = false;
};

/// A walk v0, e0, v1, ..., e(k-1), vk. Walks in simple graphs leave `edges`
/// empty.
struct WalkCert {
  enum class Kind { Cycle, Path, ClosedTrail, OpenTrail, Quasitrail };
  Kind kind = Kind::ClosedTrail;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

inline std::string to_string(WalkCert::Kind k) {
  switch (k) {
    case WalkCert::Kind::Cycle: return "cycle";
    case WalkCert::Kind::Path: return "path";
    case WalkCert::Kind::ClosedTrail: return "closed_trail";
    case WalkCert::Kind::OpenTrail: return "open_trail";
    case WalkCert::Kind::Quasitrail: return "quasitrail";
  }
  return "?";
}

/// "closed_trail: 0 -[3]- 1 -[7]- 0"; edge ids are omitted for simple walks.
inline std::string to_string(const WalkCert& w) {
  std::string out = to_string(w.kind) + ":";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (i > 0) out += i - 1 < w.edges.size() ? " -[" + std::to_string(w.edges[i - 1]) + "]-" : " -";
    out += " " + std::to_string(w.vertices[i]);
  }
  return out;
}

template <class Cert>
struct SearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<Cert> cert;
  long nodes = 0;

  bool found() const { return status == SearchStatus::Found; }
  bool absent() const { return status == SearchStatus::Absent; }
};

using WalkResult = SearchResult<WalkCert>;

}  // namespace hamlab
