#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vlg/pattern.hpp"

namespace vlg {

/// All pattern layers whose subpattern ends at `position`, ascending.
struct OccEvent {
  Position position = 0;
  std::span<const std::size_t> layers;
};

struct StreamCounters {
  std::size_t characters = 0;
  std::size_t trie_steps = 0;
  std::size_t failure_steps = 0;
  std::size_t events = 0;
  std::size_t occurrences = 0;  // alpha: total layer entries over all events
};

/// Comparison-based Aho-Corasick automaton. Transitions out of a state are a
/// sorted array searched by binary search, so lookup costs O(log k) without
/// any assumption on the alphabet.
///
/// Each distinct string is stored once. Strings are given per layer; a string
/// shared by several layers reports all of them.
class Automaton {
 public:
  using StateId = std::int32_t;
  static constexpr StateId kRoot = 0;
  static constexpr StateId kNone = -1;

  explicit Automaton(std::span<const std::string> layer_strings) {
    states_.emplace_back();
    for (std::size_t layer = 0; layer < layer_strings.size(); ++layer) {
      const std::string& s = layer_strings[layer];
      if (s.empty()) throw std::invalid_argument("automaton strings must be non-empty");
      StateId cur = kRoot;
      for (char ch : s) {
        const auto c = static_cast<unsigned char>(ch);
        StateId nxt = child(cur, c);
        if (nxt == kNone) {
          nxt = static_cast<StateId>(states_.size());
          State st;
          st.depth = states_[cur].depth + 1;
          states_.push_back(std::move(st));
          auto& edges = states_[cur].edges;
          edges.insert(std::lower_bound(edges.begin(), edges.end(), Edge{c, 0}), Edge{c, nxt});
        }
        cur = nxt;
      }
      if (states_[cur].terminal == kNone) {
        states_[cur].terminal = static_cast<StateId>(strings_.size());
        strings_.push_back(s);
        string_states_.push_back(cur);
        layers_.emplace_back();
      }
      layers_[states_[cur].terminal].push_back(layer);
    }
    build_links();
  }

  explicit Automaton(const VlgPattern& p) : Automaton(std::span<const std::string>(p.subpatterns())) {}

  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t string_count() const noexcept { return strings_.size(); }
  const std::string& string(std::size_t id) const { return strings_.at(id); }
  const std::vector<std::size_t>& layers_of(std::size_t id) const { return layers_.at(id); }

  /// State reached by following trie edges along `path`, if it exists.
  std::optional<StateId> find_state(std::string_view path) const {
    StateId cur = kRoot;
    for (char ch : path) {
      cur = child(cur, static_cast<unsigned char>(ch));
      if (cur == kNone) return std::nullopt;
    }
    return cur;
  }

  StateId failure(StateId s) const { return states_.at(s).fail; }
  std::size_t depth(StateId s) const { return states_.at(s).depth; }

  /// String ids of occ(s), longest first, read off the compact occ chain.
  std::vector<std::size_t> occurrences(StateId s) const {
    std::vector<std::size_t> out;
    for_each_output(s, [&](std::size_t id) { out.push_back(id); });
    return out;
  }

  /// Single left-to-right pass. `sink(const OccEvent&)` is called once per
  /// position at which at least one string ends, in increasing position.
  template <class Sink>
  StreamCounters stream(std::string_view text, Sink&& sink) const {
    StreamCounters counters;
    std::vector<std::size_t> layers;
    StateId cur = kRoot;
    for (std::size_t j = 0; j < text.size(); ++j) {
      const auto c = static_cast<unsigned char>(text[j]);
      ++counters.characters;
      StateId nxt = child(cur, c);
      while (nxt == kNone && cur != kRoot) {
        cur = states_[cur].fail;
        ++counters.failure_steps;
        nxt = child(cur, c);
      }
      if (nxt != kNone) {
        cur = nxt;
        ++counters.trie_steps;
      }
      if (states_[cur].out_id == kNone) continue;
      layers.clear();
      for_each_output(cur, [&](std::size_t id) {
        layers.insert(layers.end(), layers_[id].begin(), layers_[id].end());
      });
      std::sort(layers.begin(), layers.end());
      ++counters.events;
      counters.occurrences += layers.size();
      sink(OccEvent{static_cast<Position>(j + 1), std::span<const std::size_t>(layers)});
    }
    return counters;
  }

 private:
  struct Edge {
    unsigned char label;
    StateId target;
    bool operator<(const Edge& o) const { return label < o.label; }
  };

  struct State {
    std::vector<Edge> edges;
    StateId fail = kRoot;
    std::size_t depth = 0;
    StateId terminal = kNone;  // id of the string equal to path(s)
    StateId out_id = kNone;    // longest string in occ(s)
    StateId out_next = kNone;  // state spelling the second longest string in occ(s)
  };

  StateId child(StateId s, unsigned char c) const {
    const auto& edges = states_[s].edges;
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{c, 0});
    if (it == edges.end() || it->label != c) return kNone;
    return it->target;
  }

  void build_links() {
    std::queue<StateId> bfs;
    for (const Edge& e : states_[kRoot].edges) {
      states_[e.target].fail = kRoot;
      bfs.push(e.target);
    }
    set_outputs(kRoot);
    while (!bfs.empty()) {
      const StateId s = bfs.front();
      bfs.pop();
      set_outputs(s);
      for (const Edge& e : states_[s].edges) {
        StateId f = states_[s].fail;
        StateId target = child(f, e.label);
        while (target == kNone && f != kRoot) {
          f = states_[f].fail;
          target = child(f, e.label);
        }
        states_[e.target].fail = target == kNone ? kRoot : target;
        bfs.push(e.target);
      }
    }
  }

  // Requires the failure target's outputs to be final (BFS order).
  void set_outputs(StateId s) {
    State& st = states_[s];
    if (s == kRoot) {
      st.out_id = st.terminal;
      return;
    }
    const State& f = states_[st.fail];
    if (st.terminal != kNone) {
      st.out_id = st.terminal;
      st.out_next = f.out_id == kNone ? kNone : string_states_[f.out_id];
    } else {
      st.out_id = f.out_id;
      st.out_next = f.out_next;
    }
  }

  template <class F>
  void for_each_output(StateId s, F&& f) const {
    const State& st = states_[s];
    if (st.out_id == kNone) return;
    f(static_cast<std::size_t>(st.out_id));
    for (StateId t = st.out_next; t != kNone; t = states_[t].out_next) {
      f(static_cast<std::size_t>(states_[t].out_id));
    }
  }

  std::vector<State> states_;
  std::vector<std::string> strings_;
  std::vector<StateId> string_states_;
  std::vector<std::vector<std::size_t>> layers_;
};

}  // namespace vlg
