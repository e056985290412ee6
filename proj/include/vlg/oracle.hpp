#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "vlg/pattern.hpp"

// Brute-force reference implementations. These follow the definitions
// directly (gap lengths, pairwise compatibility, exhaustive backtracking) and
// share nothing with the streaming engine except the pattern type.
namespace vlg::oracle {

inline constexpr std::size_t kMaxTextLength = 10'000;
inline constexpr std::uint64_t kMaxCombinations = 10'000'000;

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every tau with text[tau - |s| + 1 .. tau] == s (1-based, ascending).
inline std::vector<Position> naive_occurrences(std::string_view s, std::string_view text) {
  std::vector<Position> out;
  if (s.empty() || s.size() > text.size()) return out;
  for (std::size_t i = 0; i + s.size() <= text.size(); ++i) {
    bool equal = true;
    for (std::size_t j = 0; j < s.size() && equal; ++j) equal = text[i + j] == s[j];
    if (equal) out.push_back(static_cast<Position>(i + s.size()));
  }
  return out;
}

namespace detail {

inline void check_text(std::string_view text) {
  if (text.size() > kMaxTextLength) {
    throw OracleLimitError("oracle refuses texts longer than " + std::to_string(kMaxTextLength));
  }
}

/// Length of the filler between an occurrence of layer i ending at `prev_end`
/// and an occurrence of layer i + 1 ending at `next_end`.
inline bool gap_fits(const VlgPattern& p, std::size_t i, Position prev_end, Position next_end) {
  const Position next_start = next_end - static_cast<Position>(p.sublen(i + 1)) + 1;
  const Position filler = next_start - prev_end - 1;
  if (filler < 0) return false;
  const GapBounds& g = p.gap(i);
  if (filler < static_cast<Position>(g.lower)) return false;
  return !g.upper || filler <= static_cast<Position>(*g.upper);
}

inline std::vector<std::vector<Position>> layer_occurrences(const VlgPattern& p, std::string_view text) {
  std::vector<std::vector<Position>> occ;
  for (const auto& s : p.subpatterns()) occ.push_back(naive_occurrences(s, text));
  return occ;
}

}  // namespace detail

/// Per-layer occurrence lists found by sliding-window scan.
inline std::vector<std::vector<Position>> occurrences(const VlgPattern& p, std::string_view text) {
  detail::check_text(text);
  return detail::layer_occurrences(p, text);
}

/// Relevant occurrences per layer: all of layer 0, then forward closure under
/// pairwise compatibility.
inline std::vector<std::vector<Position>> brute_force_relevant(const VlgPattern& p, std::string_view text) {
  detail::check_text(text);
  const auto occ = detail::layer_occurrences(p, text);
  std::vector<std::vector<Position>> relevant(p.subpattern_count());
  relevant[0] = occ[0];
  for (std::size_t i = 1; i < p.subpattern_count(); ++i) {
    for (Position y : occ[i]) {
      for (Position x : relevant[i - 1]) {
        if (detail::gap_fits(p, i - 1, x, y)) {
          relevant[i].push_back(y);
          break;
        }
      }
    }
  }
  return relevant;
}

/// End positions e such that some substring ending at e matches `p`, found by
/// peeling subpatterns and gap lengths off the right end.
inline std::vector<Position> brute_force_endpoints(const VlgPattern& p, std::string_view text) {
  detail::check_text(text);
  const std::size_t n = text.size();
  const std::size_t k = p.subpattern_count();
  // ok[i][e]: some substring ending at e matches P_1 gap ... P_i (0-based i).
  std::vector<std::vector<char>> ok(k, std::vector<char>(n + 1, 0));
  auto literal_ends_at = [&](std::size_t i, std::size_t e) {
    const std::string& s = p.subpattern(i);
    if (e < s.size()) return false;
    return text.substr(e - s.size(), s.size()) == s;
  };
  for (std::size_t e = 1; e <= n; ++e) ok[0][e] = literal_ends_at(0, e);
  for (std::size_t i = 1; i < k; ++i) {
    const GapBounds& g = p.gap(i - 1);
    for (std::size_t e = 1; e <= n; ++e) {
      if (!literal_ends_at(i, e)) continue;
      const std::size_t before = e - p.sublen(i);  // position just before P_i starts
      for (std::size_t len = g.lower; len <= before; ++len) {
        if (g.upper && len > *g.upper) break;
        if (ok[i - 1][before - len]) {
          ok[i][e] = 1;
          break;
        }
      }
    }
  }
  std::vector<Position> out;
  for (std::size_t e = 1; e <= n; ++e) {
    if (ok[k - 1][e]) out.push_back(static_cast<Position>(e));
  }
  return out;
}

/// All match combinations, sorted lexicographically. Throws OracleLimitError
/// when there would be more than kMaxCombinations of them.
inline std::vector<std::vector<Position>> brute_force_combinations(const VlgPattern& p, std::string_view text) {
  detail::check_text(text);
  const auto occ = detail::layer_occurrences(p, text);
  const std::size_t k = p.subpattern_count();

  // Count first so oversized instances are refused before allocating.
  std::vector<std::vector<std::uint64_t>> ways(k);
  ways[k - 1].assign(occ[k - 1].size(), 1);
  for (std::size_t i = k - 1; i-- > 0;) {
    ways[i].assign(occ[i].size(), 0);
    for (std::size_t a = 0; a < occ[i].size(); ++a) {
      for (std::size_t b = 0; b < occ[i + 1].size(); ++b) {
        if (detail::gap_fits(p, i, occ[i][a], occ[i + 1][b])) {
          ways[i][a] = std::min<std::uint64_t>(ways[i][a] + ways[i + 1][b], kMaxCombinations + 1);
        }
      }
    }
  }
  std::uint64_t total = 0;
  for (std::uint64_t w : ways[0]) total = std::min<std::uint64_t>(total + w, kMaxCombinations + 1);
  if (total > kMaxCombinations) throw OracleLimitError("oracle refuses more than 10^7 combinations");

  std::vector<std::vector<Position>> out;
  out.reserve(total);
  std::vector<Position> cur(k);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      out.push_back(cur);
      return;
    }
    for (Position y : occ[i]) {
      if (i > 0 && !detail::gap_fits(p, i - 1, cur[i - 1], y)) continue;
      cur[i] = y;
      self(self, i + 1);
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// For each relevant occurrence (layer, end) with layer > 0: end positions of
/// the first and last compatible relevant occurrences one layer down.
inline std::map<std::pair<std::size_t, Position>, std::pair<Position, Position>> brute_force_implicit_edges(
    const VlgPattern& p, std::string_view text) {
  const auto relevant = brute_force_relevant(p, text);
  std::map<std::pair<std::size_t, Position>, std::pair<Position, Position>> edges;
  for (std::size_t i = 1; i < relevant.size(); ++i) {
    for (Position y : relevant[i]) {
      Position first = 0;
      Position last = 0;
      for (Position x : relevant[i - 1]) {
        if (!detail::gap_fits(p, i - 1, x, y)) continue;
        if (first == 0) first = x;
        last = x;
      }
      edges[{i, y}] = {first, last};
    }
  }
  return edges;
}

}  // namespace vlg::oracle
