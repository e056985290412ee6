#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vlg/aho_corasick.hpp"
#include "vlg/matcher.hpp"
#include "vlg/pattern.hpp"
#include "vlg/range_list.hpp"

namespace vlg {

/// Sentinel for "no node"; real end positions are >= 1.
inline constexpr Position kNoNode = 0;

/// Range of permitted start positions tagged with the end position of the
/// occurrence (one layer down) that defined it.
struct TaggedRange {
  Position start = 0;
  Position end = 0;
  Position origin = kNoNode;

  bool contains(Position p) const noexcept { return start <= p && p <= end; }
  bool operator==(const TaggedRange&) const = default;
};

/// The two range lists kept per layer when building the implicit gap graph.
/// Both cover the same positions with pairwise disjoint ranges. A position is
/// attributed in `first_list` to the earliest range ever to cover it and in
/// `last_list` to the most recent one.
class DualLists {
 public:
  DualLists() = default;
  DualLists(std::size_t layer, std::size_t sublen) : layer_(layer), sublen_(sublen) {}

  std::size_t layer() const noexcept { return layer_; }
  std::size_t sublen() const noexcept { return sublen_; }
  const std::deque<TaggedRange>& first_list() const noexcept { return first_; }
  const std::deque<TaggedRange>& last_list() const noexcept { return last_; }

  std::size_t purge_dead(Position tau) {
    const Position live = earliest_live_start(tau, sublen_);
    std::size_t removed = 0;
    for (auto* list : {&first_, &last_}) {
      while (!list->empty() && list->front().end < live) {
        list->pop_front();
        ++removed;
      }
    }
    return removed;
  }

  /// Ranges must arrive with nondecreasing start and end.
  void append(const TaggedRange& r) {
    const Position first_start = first_.empty() ? r.start : std::max(first_.back().end + 1, r.start);
    if (first_start <= r.end) first_.push_back({first_start, r.end, r.origin});

    if (!last_.empty()) {
      TaggedRange& tail = last_.back();
      tail.end = std::min(tail.end, r.start - 1);
      if (tail.end < tail.start) last_.pop_back();
    }
    last_.push_back(r);
  }

 private:
  std::deque<TaggedRange> first_;
  std::deque<TaggedRange> last_;
  std::size_t layer_ = 0;
  std::size_t sublen_ = 0;
};

/// Relevant occurrence of subpattern `layer` ending at `end`. For layer > 0,
/// `first_pred` and `last_pred` are the end positions of the first and last
/// compatible relevant occurrences one layer down; every relevant occurrence
/// between them is compatible too.
struct GraphNode {
  std::size_t layer = 0;
  Position end = 0;
  Position first_pred = kNoNode;
  Position last_pred = kNoNode;

  bool has_edges() const noexcept { return first_pred != kNoNode; }
  std::size_t out_degree() const noexcept {
    if (!has_edges()) return 0;
    return first_pred == last_pred ? 1 : 2;
  }
  bool operator==(const GraphNode&) const = default;
};

struct GapGraphCounters {
  std::size_t occurrences = 0;
  std::size_t nodes = 0;
  std::size_t purged_ranges = 0;
  std::vector<std::size_t> peak_first_sizes;
  std::vector<std::size_t> peak_last_sizes;
};

/// |P_i| + b_{i-1} + 1, the most ranges either dual list of `layer` holds.
inline std::size_t dual_list_bound(const VlgPattern& p, std::size_t layer) {
  return p.sublen(layer) + *p.gap(layer - 1).upper + 1;
}

/// Streaming construction of the implicit gap graph. Feeds each relevant
/// occurrence, with its two outgoing edges, to a node callback.
class GapGraphBuilder {
 public:
  using Observer = std::function<void(Position tau, std::size_t layer, std::span<const DualLists> lists)>;

  explicit GapGraphBuilder(const VlgPattern& p) : pattern_(&p) {
    if (!p.bounded()) throw std::invalid_argument("gap graph requires bounded gaps");
    lists_.reserve(p.subpattern_count());
    for (std::size_t i = 0; i < p.subpattern_count(); ++i) lists_.emplace_back(i, p.sublen(i));
    counters_.peak_first_sizes.assign(p.subpattern_count(), 0);
    counters_.peak_last_sizes.assign(p.subpattern_count(), 0);
  }

  void set_observer(Observer observer) { observer_ = std::move(observer); }
  std::span<const DualLists> lists() const noexcept { return lists_; }
  const GapGraphCounters& counters() const noexcept { return counters_; }

  template <class OnNode>
  void process_event(const OccEvent& ev, OnNode&& on_node) {
    for (std::size_t layer : ev.layers) process_occurrence(ev.position, layer, on_node);
  }

  template <class OnNode>
  void process_occurrence(Position tau, std::size_t layer, OnNode&& on_node) {
    const VlgPattern& p = *pattern_;
    const std::size_t k = p.subpattern_count();
    ++counters_.occurrences;
    if (layer > 0) counters_.purged_ranges += lists_[layer].purge_dead(tau);
    if (layer + 1 < k) counters_.purged_ranges += lists_[layer + 1].purge_dead(tau);

    GraphNode node{layer, tau};
    bool relevant = layer == 0;
    if (layer > 0) {
      const Position start = start_pos(tau, p.sublen(layer));
      const DualLists& in = lists_[layer];
      if (!in.first_list().empty() && in.first_list().front().contains(start)) {
        relevant = true;
        node.first_pred = in.first_list().front().origin;
        // After the purge no range of the last list ends before `start`, so
        // the range containing it, if any, is the front one.
        const TaggedRange& latest = in.last_list().front();
        if (!latest.contains(start)) throw std::logic_error("dual lists disagree on coverage");
        node.last_pred = latest.origin;
      }
    }

    if (relevant) {
      ++counters_.nodes;
      on_node(static_cast<const GraphNode&>(node));
      if (layer + 1 < k) {
        const Range r = next_range(p, layer, tau);
        DualLists& out = lists_[layer + 1];
        out.append({r.start, r.end, tau});
        auto& pf = counters_.peak_first_sizes[layer + 1];
        auto& pl = counters_.peak_last_sizes[layer + 1];
        pf = std::max(pf, out.first_list().size());
        pl = std::max(pl, out.last_list().size());
      }
    }
    if (observer_) observer_(tau, layer, lists_);
  }

 private:
  const VlgPattern* pattern_;
  std::vector<DualLists> lists_;
  GapGraphCounters counters_;
  Observer observer_;
};

/// Implicit gap graph: relevant occurrences per layer in ascending end
/// position, each with at most two outgoing edges.
class ImplicitGapGraph {
 public:
  struct Edge {
    std::size_t layer = 0;  // layer of the source node; target is layer - 1
    Position end = 0;
    Position pred_end = 0;
    auto operator<=>(const Edge&) const = default;
  };

  explicit ImplicitGapGraph(std::size_t layer_count = 0) : layers_(layer_count) {}

  /// Nodes must be added in ascending end position within each layer.
  void add(const GraphNode& node) {
    auto& layer = layers_.at(node.layer);
    if (!layer.empty() && layer.back().end >= node.end) {
      throw std::invalid_argument("gap graph nodes must be added in ascending end position");
    }
    layer.push_back(node);
  }

  std::size_t layer_count() const noexcept { return layers_.size(); }
  const std::vector<GraphNode>& layer(std::size_t i) const { return layers_.at(i); }
  std::span<const std::vector<GraphNode>> layers() const noexcept { return layers_; }

  const GraphNode* find(std::size_t layer, Position end) const {
    const auto& nodes = layers_.at(layer);
    auto it = std::lower_bound(nodes.begin(), nodes.end(), end,
                               [](const GraphNode& n, Position e) { return n.end < e; });
    return it != nodes.end() && it->end == end ? &*it : nullptr;
  }

  std::size_t node_count() const {
    std::size_t n = 0;
    for (const auto& l : layers_) n += l.size();
    return n;
  }

  /// Edges sorted by (layer, end, pred_end); a node whose two edges share a
  /// target contributes one edge.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& l : layers_) {
      for (const GraphNode& n : l) {
        if (!n.has_edges()) continue;
        out.push_back({n.layer, n.end, n.first_pred});
        if (n.last_pred != n.first_pred) out.push_back({n.layer, n.end, n.last_pred});
      }
    }
    return out;
  }

  std::size_t edge_count() const { return edges().size(); }

 private:
  std::vector<std::vector<GraphNode>> layers_;
};

/// Builds the implicit gap graph of all relevant occurrences in `text`.
/// Throws std::invalid_argument when a gap is unbounded.
inline ImplicitGapGraph build_implicit_gap_graph(const VlgPattern& p, std::string_view text,
                                                 GapGraphCounters* counters = nullptr) {
  GapGraphBuilder builder(p);
  ImplicitGapGraph graph(p.subpattern_count());
  // No shortcut for texts shorter than m: lower layers still get their nodes.
  const Automaton automaton(p);
  automaton.stream(text, [&](const OccEvent& ev) {
    builder.process_event(ev, [&](const GraphNode& n) { graph.add(n); });
  });
  if (counters) *counters = builder.counters();
  return graph;
}

/// Text dump: `N <layer> <end>` per node then `E <layer> <end> <layer-1> <pred>`
/// per edge, layers 1-based, each section sorted. Every line gets `prefix`.
inline void write_graph_text(const ImplicitGapGraph& g, std::ostream& os, std::string_view prefix = {},
                             Position offset = 0) {
  for (const auto& l : g.layers()) {
    for (const GraphNode& n : l) os << prefix << "N " << n.layer + 1 << ' ' << n.end + offset << '\n';
  }
  for (const auto& e : g.edges()) {
    os << prefix << "E " << e.layer + 1 << ' ' << e.end + offset << ' ' << e.layer << ' '
       << e.pred_end + offset << '\n';
  }
}

/// S_i: a node of `layer` is dead once tau > end + S_i, where
/// S_i = sum over j > i of (b_{j-1} + |P_j|).
inline std::vector<Position> dead_node_horizons(const VlgPattern& p) {
  if (!p.bounded()) throw std::invalid_argument("dead-node horizons require bounded gaps");
  const std::size_t k = p.subpattern_count();
  std::vector<Position> s(k, 0);
  for (std::size_t i = k - 1; i-- > 0;) {
    s[i] = s[i + 1] + static_cast<Position>(*p.gap(i).upper + p.sublen(i + 1));
  }
  return s;
}

/// Node store for on-the-fly reporting: keeps only nodes that can still be
/// part of a future match combination.
class LiveNodeStore {
 public:
  explicit LiveNodeStore(const VlgPattern& p)
      : horizons_(dead_node_horizons(p)), layers_(p.subpattern_count()) {}

  std::span<const Position> horizons() const noexcept { return horizons_; }
  const std::deque<GraphNode>& layer(std::size_t i) const { return layers_.at(i); }
  std::span<const std::deque<GraphNode>> layers() const noexcept { return layers_; }
  std::size_t live_count() const noexcept { return live_; }
  std::size_t peak_live_count() const noexcept { return peak_; }

  /// Sum over layers of (1 + S_i), the most nodes the store can hold.
  std::size_t capacity_bound() const {
    std::size_t total = 0;
    for (Position s : horizons_) total += 1 + static_cast<std::size_t>(s);
    return total;
  }

  std::size_t purge_dead_nodes(Position tau, std::size_t layer) {
    auto& nodes = layers_.at(layer);
    std::size_t removed = 0;
    while (!nodes.empty() && tau > nodes.front().end + horizons_[layer]) {
      nodes.pop_front();
      ++removed;
    }
    live_ -= removed;
    return removed;
  }

  std::size_t purge_dead_nodes(Position tau) {
    std::size_t removed = 0;
    for (std::size_t i = 0; i < layers_.size(); ++i) removed += purge_dead_nodes(tau, i);
    return removed;
  }

  void add(const GraphNode& node) {
    layers_.at(node.layer).push_back(node);
    ++live_;
    peak_ = std::max(peak_, live_);
  }

 private:
  std::vector<Position> horizons_;
  std::vector<std::deque<GraphNode>> layers_;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

}  // namespace vlg
