#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "vlg/aho_corasick.hpp"
#include "vlg/gap_graph.hpp"
#include "vlg/pattern.hpp"

namespace vlg {

/// End positions (e_1, ..., e_k) of one way the pattern matches.
using MatchCombination = std::vector<Position>;

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

namespace detail {

template <class Layers, class Sink>
void expand_down(const Layers& layers, const GraphNode& node, std::vector<Position>& ends,
                 Position offset, Sink& sink, std::uint64_t& emitted) {
  ends[node.layer] = node.end + offset;
  if (node.layer == 0) {
    ++emitted;
    sink(std::span<const Position>(ends));
    return;
  }
  const auto& below = layers[node.layer - 1];
  auto lo = std::lower_bound(below.begin(), below.end(), node.first_pred,
                             [](const GraphNode& n, Position e) { return n.end < e; });
  for (auto it = lo; it != below.end() && it->end <= node.last_pred; ++it) {
    expand_down(layers, *it, ends, offset, sink, emitted);
  }
}

}  // namespace detail

/// Emits every match combination ending in `top`, walking at each layer the
/// contiguous run of nodes between the two edge targets. `layers[i]` is a
/// random-access sequence of the layer-i nodes in ascending end position.
/// Returns the number of combinations emitted.
template <class Layers, class Sink>
std::uint64_t expand_node(const Layers& layers, const GraphNode& top, Sink&& sink, Position offset = 0) {
  std::vector<Position> ends(top.layer + 1);
  std::uint64_t emitted = 0;
  detail::expand_down(layers, top, ends, offset, sink, emitted);
  return emitted;
}

/// Emits all match combinations encoded by `g`, grouped by ascending e_k.
template <class Sink>
std::uint64_t expand_combinations(const ImplicitGapGraph& g, Sink&& sink, Position offset = 0) {
  if (g.layer_count() == 0) return 0;
  std::uint64_t emitted = 0;
  for (const GraphNode& top : g.layer(g.layer_count() - 1)) {
    emitted += expand_node(g.layers(), top, sink, offset);
  }
  return emitted;
}

/// beta, the number of match combinations encoded by `g`; saturates at the
/// largest uint64 value instead of wrapping.
inline std::uint64_t count_combinations(const ImplicitGapGraph& g) {
  if (g.layer_count() == 0) return 0;
  std::vector<std::uint64_t> below(g.layer(0).size(), 1);
  for (std::size_t i = 1; i < g.layer_count(); ++i) {
    const auto& prev = g.layer(i - 1);
    std::vector<std::uint64_t> cur;
    cur.reserve(g.layer(i).size());
    for (const GraphNode& n : g.layer(i)) {
      auto lo = std::lower_bound(prev.begin(), prev.end(), n.first_pred,
                                 [](const GraphNode& x, Position e) { return x.end < e; });
      std::uint64_t total = 0;
      for (auto it = lo; it != prev.end() && it->end <= n.last_pred; ++it) {
        total = saturating_add(total, below[static_cast<std::size_t>(it - prev.begin())]);
      }
      cur.push_back(total);
    }
    below = std::move(cur);
  }
  std::uint64_t beta = 0;
  for (std::uint64_t c : below) beta = saturating_add(beta, c);
  return beta;
}

/// Split of a text into overlapping chunks such that every match (at most
/// m + B long) lies wholly inside the chunk that claims its start position.
struct ChunkPlan {
  struct Chunk {
    Position first = 0;       // first global position covered
    Position last = 0;        // last global position covered
    Position claim_last = 0;  // matches starting in [first, claim_last] belong here
  };

  std::size_t text_length = 0;
  std::size_t span = 0;  // m + B
  std::size_t chunk_length = 0;
  std::size_t stride = 0;

  std::size_t count() const {
    if (text_length == 0) return 0;
    if (text_length <= chunk_length) return 1;
    return 1 + (text_length - chunk_length + stride - 1) / stride;
  }

  Chunk chunk(std::size_t i) const {
    const auto n = static_cast<Position>(text_length);
    Chunk c;
    c.first = static_cast<Position>(i * stride) + 1;
    c.last = std::min(n, c.first + static_cast<Position>(chunk_length) - 1);
    c.claim_last = i + 1 == count() ? n : c.first + static_cast<Position>(stride) - 1;
    return c;
  }
};

/// Default chunks are 2(m + B) long with stride m + B. An explicit
/// `chunk_length` must be at least m + B; the stride shrinks to keep the
/// overlap at least m + B - 1.
inline ChunkPlan make_chunk_plan(const VlgPattern& p, std::size_t text_length,
                                 std::optional<std::size_t> chunk_length = std::nullopt) {
  const auto span = p.max_span();
  if (!span) throw std::invalid_argument("chunked reporting requires bounded gaps");
  ChunkPlan plan;
  plan.text_length = text_length;
  plan.span = *span;
  plan.chunk_length = chunk_length.value_or(2 * *span);
  if (plan.chunk_length < plan.span) {
    throw std::invalid_argument("chunk length " + std::to_string(plan.chunk_length) +
                                " is shorter than the longest match (" + std::to_string(plan.span) + ")");
  }
  plan.stride = std::max<std::size_t>(1, plan.chunk_length - plan.span);
  return plan;
}

struct ChunkedStats {
  std::size_t chunks = 0;
  std::size_t peak_retained_graphs = 0;
  std::uint64_t combinations = 0;
};

/// Reports all match combinations by building the implicit gap graph of one
/// chunk at a time. A combination is emitted only by the chunk that claims
/// the start of its first subpattern, so each is emitted exactly once.
template <class Sink>
ChunkedStats report_chunked(const VlgPattern& p, std::string_view text, Sink&& sink,
                            std::optional<std::size_t> chunk_length = std::nullopt) {
  const ChunkPlan plan = make_chunk_plan(p, text.size(), chunk_length);
  ChunkedStats stats;
  const Position first_len = static_cast<Position>(p.sublen(0));
  for (std::size_t i = 0; i < plan.count(); ++i) {
    const ChunkPlan::Chunk c = plan.chunk(i);
    const std::string_view piece =
        text.substr(static_cast<std::size_t>(c.first - 1), static_cast<std::size_t>(c.last - c.first + 1));
    const ImplicitGapGraph graph = build_implicit_gap_graph(p, piece);
    stats.peak_retained_graphs = std::max<std::size_t>(stats.peak_retained_graphs, 1);
    ++stats.chunks;
    expand_combinations(
        graph,
        [&](std::span<const Position> ends) {
          const Position start = ends.front() - first_len + 1;
          if (start < c.first || start > c.claim_last) return;
          ++stats.combinations;
          sink(ends);
        },
        c.first - 1);
  }
  return stats;
}

struct OnTheFlyStats {
  std::size_t peak_live_nodes = 0;
  std::size_t live_node_bound = 0;
  std::size_t purged_nodes = 0;
  std::uint64_t combinations = 0;
};

/// Reports all match combinations in one streaming pass. Combinations ending
/// at tau are emitted as soon as the last subpattern's occurrence at tau is
/// found relevant; nodes that can no longer take part in a match are dropped.
template <class Sink>
OnTheFlyStats report_on_the_fly(const VlgPattern& p, std::string_view text, Sink&& sink) {
  GapGraphBuilder builder(p);
  LiveNodeStore store(p);
  OnTheFlyStats stats;
  stats.live_node_bound = store.capacity_bound();
  if (p.total_length() > text.size()) return stats;
  const std::size_t last_layer = p.subpattern_count() - 1;
  const Automaton automaton(p);
  automaton.stream(text, [&](const OccEvent& ev) {
    builder.process_event(ev, [&](const GraphNode& node) {
      if (node.layer == last_layer) {
        stats.combinations += expand_node(store.layers(), node, sink);
        return;
      }
      stats.purged_nodes += store.purge_dead_nodes(node.end, node.layer);
      store.add(node);
    });
  });
  stats.peak_live_nodes = store.peak_live_count();
  return stats;
}

}  // namespace vlg
