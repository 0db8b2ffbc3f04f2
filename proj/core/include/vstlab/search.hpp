/*
 * Copyright 2026 The vstlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Bounded bidirectional breadth-first search for rewriting certificates.

#include <cstddef>
#include <optional>
#include <vector>

#include "vstlab/presentations.hpp"

namespace vstlab {

struct SearchBounds {
  /// Longest intermediate word; unset means max(|u|, |w|) + 6.
  std::optional<std::size_t> max_len;
  /// Total number of stored words over both directions.
  std::size_t max_nodes = 1'000'000;

  /// Defaults, with max_nodes taken from VSTLAB_SEARCH_NODES when set to a
  /// positive integer.
  static SearchBounds from_env();
};

enum class SearchStatus { Proved, Unknown, Distinct };

struct SearchResult {
  /// Distinct only when pi separates the words; Unknown otherwise when no
  /// certificate was found within bounds.
  SearchStatus status = SearchStatus::Unknown;
  std::optional<RewriteTrace> trace;
  std::size_t nodes = 0;
};

std::string_view to_string(SearchStatus s);

/// Proved results carry a trace that verify_trace accepts; its steps cite
/// instance labels.
SearchResult search_equiv(const Word& u, const Word& w, const Presentation& pres,
                          const SearchBounds& bounds = SearchBounds::from_env());

/// Searches each consecutive pair of waypoints (first to last) and joins the
/// segment traces. Proved only when every segment is proved; the node count
/// is summed over segments.
SearchResult search_via(const std::vector<Word>& waypoints, const Presentation& pres,
                        const SearchBounds& bounds = SearchBounds::from_env());

}  // namespace vstlab
