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

#include "vstlab/search.hpp"

#include <array>
#include <cstdlib>
#include <deque>
#include <string>
#include <string_view>
#include <unordered_map>

#include "vstlab/error.hpp"

namespace vstlab {

namespace {

// One byte per letter: kind in the low three bits, index above.
std::string encode(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (const auto& g : w.letters()) {
    out.push_back(static_cast<char>(static_cast<int>(g.kind) + 8 * g.index));
  }
  return out;
}

struct Rule {
  std::string src;
  std::string dst;
  const Relation* rel;
  Direction dir;
};

struct Node {
  std::string word;
  int parent;
  int rule;
  std::size_t pos;
};

struct Side {
  std::deque<Node> nodes;
  std::unordered_map<std::string_view, int> index;
  std::size_t layer_begin = 0;
  std::size_t layer_end = 0;

  void add(std::string word, int parent, int rule, std::size_t pos) {
    nodes.push_back({std::move(word), parent, rule, pos});
    index.emplace(nodes.back().word, static_cast<int>(nodes.size() - 1));
  }
};

Direction flip(Direction d) {
  return d == Direction::LeftToRight ? Direction::RightToLeft : Direction::LeftToRight;
}

}  // namespace

SearchBounds SearchBounds::from_env() {
  SearchBounds b;
  if (const char* env = std::getenv("VSTLAB_SEARCH_NODES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_nodes = static_cast<std::size_t>(v);
  }
  return b;
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Proved: return "proved";
    case SearchStatus::Unknown: return "unknown";
    case SearchStatus::Distinct: return "distinct";
  }
  return "?";
}

SearchResult search_equiv(const Word& u, const Word& w, const Presentation& pres,
                          const SearchBounds& bounds) {
  if (u.strands() != pres.strands() || w.strands() != pres.strands() ||
      u.alphabet() != pres.alphabet() || w.alphabet() != pres.alphabet()) {
    throw MismatchError("search_equiv: words and presentation disagree on strands or alphabet");
  }
  for (const auto& g : u.letters()) {
    if (g.index >= 32) throw ConstraintError("search_equiv supports n <= 32");
  }
  SearchResult result;
  if (pi_image(u) != pi_image(w)) {
    result.status = SearchStatus::Distinct;
    return result;
  }
  const std::size_t max_len = bounds.max_len.value_or(std::max(u.size(), w.size()) + 6);

  std::vector<Rule> rules;
  for (const auto& rel : pres.relations()) {
    rules.push_back({encode(rel.lhs), encode(rel.rhs), &rel, Direction::LeftToRight});
    rules.push_back({encode(rel.rhs), encode(rel.lhs), &rel, Direction::RightToLeft});
  }
  std::array<std::vector<int>, 256> by_first;
  std::vector<int> insertions;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    if (rules[r].src.empty()) {
      insertions.push_back(static_cast<int>(r));
    } else {
      by_first[static_cast<unsigned char>(rules[r].src[0])].push_back(static_cast<int>(r));
    }
  }

  Side sides[2];
  sides[0].add(encode(u), -1, -1, 0);
  sides[1].add(encode(w), -1, -1, 0);
  for (auto& s : sides) s.layer_end = 1;

  auto total = [&] { return sides[0].nodes.size() + sides[1].nodes.size(); };

  auto build_trace = [&](int fwd_node, int bwd_node) {
    RewriteTrace trace{pres.name(), pres.strands(), u, w, {}};
    std::vector<TraceStep> forward;
    for (int k = fwd_node; sides[0].nodes[static_cast<std::size_t>(k)].parent >= 0;
         k = sides[0].nodes[static_cast<std::size_t>(k)].parent) {
      const auto& nd = sides[0].nodes[static_cast<std::size_t>(k)];
      const Rule& r = rules[static_cast<std::size_t>(nd.rule)];
      forward.push_back({r.rel->instance, r.dir, nd.pos});
    }
    trace.steps.assign(forward.rbegin(), forward.rend());
    for (int k = bwd_node; sides[1].nodes[static_cast<std::size_t>(k)].parent >= 0;
         k = sides[1].nodes[static_cast<std::size_t>(k)].parent) {
      const auto& nd = sides[1].nodes[static_cast<std::size_t>(k)];
      const Rule& r = rules[static_cast<std::size_t>(nd.rule)];
      trace.steps.push_back({r.rel->instance, flip(r.dir), nd.pos});
    }
    return trace;
  };

  if (auto it = sides[1].index.find(sides[0].nodes[0].word); it != sides[1].index.end()) {
    result.status = SearchStatus::Proved;
    result.trace = build_trace(0, it->second);
    result.nodes = total();
    return result;
  }

  while (total() < bounds.max_nodes) {
    const std::size_t size0 = sides[0].layer_end - sides[0].layer_begin;
    const std::size_t size1 = sides[1].layer_end - sides[1].layer_begin;
    if (size0 == 0 && size1 == 0) break;
    const int a = (size1 == 0 || (size0 != 0 && size0 <= size1)) ? 0 : 1;
    Side& side = sides[a];
    Side& other = sides[1 - a];
    const std::size_t begin = side.layer_begin;
    const std::size_t end = side.layer_end;
    for (std::size_t k = begin; k < end; ++k) {
      // Copy: side.nodes grows while this word is being expanded.
      const std::string word = side.nodes[k].word;
      auto try_rule = [&](int ri, std::size_t pos) -> bool {
        const Rule& r = rules[static_cast<std::size_t>(ri)];
        if (word.size() - r.src.size() + r.dst.size() > max_len) return false;
        if (word.compare(pos, r.src.size(), r.src) != 0) return false;
        std::string next;
        next.reserve(word.size() - r.src.size() + r.dst.size());
        next.append(word, 0, pos).append(r.dst).append(word, pos + r.src.size());
        if (side.index.count(next) != 0) return false;
        side.add(std::move(next), static_cast<int>(k), ri, pos);
        auto hit = other.index.find(side.nodes.back().word);
        if (hit == other.index.end()) return false;
        const int mine = static_cast<int>(side.nodes.size() - 1);
        result.trace = a == 0 ? build_trace(mine, hit->second) : build_trace(hit->second, mine);
        return true;
      };
      for (std::size_t pos = 0; pos <= word.size(); ++pos) {
        for (int ri : insertions) {
          if (try_rule(ri, pos)) {
            result.status = SearchStatus::Proved;
            result.nodes = total();
            return result;
          }
        }
        if (pos == word.size()) break;
        for (int ri : by_first[static_cast<unsigned char>(word[pos])]) {
          if (rules[static_cast<std::size_t>(ri)].src.size() > word.size() - pos) continue;
          if (try_rule(ri, pos)) {
            result.status = SearchStatus::Proved;
            result.nodes = total();
            return result;
          }
        }
        if (total() >= bounds.max_nodes) break;
      }
      if (total() >= bounds.max_nodes) break;
    }
    side.layer_begin = end;
    side.layer_end = side.nodes.size();
  }
  result.nodes = total();
  return result;
}

SearchResult search_via(const std::vector<Word>& waypoints, const Presentation& pres,
                        const SearchBounds& bounds) {
  if (waypoints.size() < 2) throw ConstraintError("search_via needs at least two waypoints");
  SearchResult result;
  RewriteTrace joined{pres.name(), pres.strands(), waypoints.front(), waypoints.back(), {}};
  for (std::size_t k = 0; k + 1 < waypoints.size(); ++k) {
    const auto& a = waypoints[k].letters();
    const auto& b = waypoints[k + 1].letters();
    std::size_t pre = 0;
    while (pre < a.size() && pre < b.size() && a[pre] == b[pre]) ++pre;
    std::size_t suf = 0;
    while (suf < a.size() - pre && suf < b.size() - pre &&
           a[a.size() - 1 - suf] == b[b.size() - 1 - suf]) {
      ++suf;
    }
    const Word mid_a = waypoints[k].with_letters({a.begin() + static_cast<std::ptrdiff_t>(pre),
                                                  a.end() - static_cast<std::ptrdiff_t>(suf)});
    const Word mid_b = waypoints[k + 1].with_letters(
        {b.begin() + static_cast<std::ptrdiff_t>(pre), b.end() - static_cast<std::ptrdiff_t>(suf)});
    SearchResult seg = search_equiv(mid_a, mid_b, pres, bounds);
    result.nodes += seg.nodes;
    if (seg.status != SearchStatus::Proved) {
      result.status = seg.status;
      return result;
    }
    for (TraceStep step : seg.trace->steps) {
      step.pos += pre;
      joined.steps.push_back(std::move(step));
    }
  }
  result.status = SearchStatus::Proved;
  result.trace = std::move(joined);
  return result;
}

}  // namespace vstlab
