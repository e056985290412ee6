#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vlg/aho_corasick.hpp"
#include "vlg/pattern.hpp"
#include "vlg/range_list.hpp"

namespace vlg {

/// An occurrence of subpattern `layer` (0-based) ending at `end`.
struct Occurrence {
  std::size_t layer = 0;
  Position end = 0;

  bool operator==(const Occurrence&) const = default;
};

inline Position start_pos(Position end, std::size_t sublen) {
  return end - static_cast<Position>(sublen) + 1;
}

inline Position start_pos(const Occurrence& occ, const VlgPattern& p) {
  return start_pos(occ.end, p.sublen(occ.layer));
}

/// Permitted start positions for layer+1 after an occurrence of `layer`
/// ending at `end`: [end + a + 1, end + b + 1].
inline Range next_range(const VlgPattern& p, std::size_t layer, Position end) {
  const GapBounds& g = p.gap(layer);
  const Position start = end + static_cast<Position>(g.lower) + 1;
  const Position stop = g.upper ? end + static_cast<Position>(*g.upper) + 1 : kUnbounded;
  return {start, stop};
}

/// Upper bound on the size of the range list of `layer` (>= 1):
/// floor((2c + |P| + a) / (c + 1)) with a, c taken from the preceding gap.
/// Empty when that gap is unbounded.
inline std::optional<std::size_t> list_size_bound(const VlgPattern& p, std::size_t layer) {
  const auto c = p.gap_width(layer - 1);
  if (!c) return std::nullopt;
  const std::size_t a = p.gap(layer - 1).lower;
  return (2 * *c + p.sublen(layer) + a) / (*c + 1);
}

struct MatcherOptions {
  /// Disable to keep dead ranges around; output must not change.
  bool purge = true;
  /// Throw std::logic_error when a list invariant breaks after an event.
  bool check_invariants = false;
};

struct MatcherCounters {
  std::size_t occurrences = 0;
  std::size_t relevant = 0;
  std::size_t appended = 0;
  std::size_t purged = 0;
  std::size_t reported = 0;
  std::vector<std::size_t> peak_list_sizes;  // indexed by layer; entry 0 unused
};

/// Observation points inside one occurrence's processing. `lists` is indexed
/// by layer; lists[0] is always empty.
struct MatcherHooks {
  using Hook = std::function<void(Position tau, std::size_t layer, std::span<const RangeList> lists)>;
  Hook before_purge;
  Hook after_purge;
  Hook after_occurrence;
};

/// Streaming relevance filter over subpattern occurrences. Keeps one sorted
/// range list per layer >= 1 and reports the end positions of relevant
/// occurrences of the last subpattern.
class Matcher {
 public:
  explicit Matcher(const VlgPattern& p, MatcherOptions options = {})
      : pattern_(&p), options_(options) {
    lists_.reserve(p.subpattern_count());
    for (std::size_t i = 0; i < p.subpattern_count(); ++i) lists_.emplace_back(i, p.sublen(i));
    counters_.peak_list_sizes.assign(p.subpattern_count(), 0);
  }

  void set_hooks(MatcherHooks hooks) { hooks_ = std::move(hooks); }

  const VlgPattern& pattern() const noexcept { return *pattern_; }
  const RangeList& list(std::size_t layer) const { return lists_.at(layer); }
  std::span<const RangeList> lists() const noexcept { return lists_; }
  const MatcherCounters& counters() const noexcept { return counters_; }

  template <class Emit>
  void process_event(const OccEvent& ev, Emit&& emit) {
    for (std::size_t layer : ev.layers) process_occurrence(ev.position, layer, emit);
  }

  template <class Emit>
  void process_occurrence(Position tau, std::size_t layer, Emit&& emit) {
    const VlgPattern& p = *pattern_;
    const std::size_t k = p.subpattern_count();
    ++counters_.occurrences;
    notify(hooks_.before_purge, tau, layer);
    if (options_.purge) {
      if (layer > 0) counters_.purged += lists_[layer].purge_dead(tau);
      if (layer + 1 < k) counters_.purged += lists_[layer + 1].purge_dead(tau);
    }
    notify(hooks_.after_purge, tau, layer);

    if (is_relevant(tau, layer)) {
      ++counters_.relevant;
      if (layer + 1 < k) {
        lists_[layer + 1].append_merge(next_range(p, layer, tau));
        ++counters_.appended;
        auto& peak = counters_.peak_list_sizes[layer + 1];
        peak = std::max(peak, lists_[layer + 1].size());
      } else if (!last_reported_ || *last_reported_ < tau) {
        last_reported_ = tau;
        ++counters_.reported;
        emit(tau);
      }
    }
    if (options_.check_invariants) check_invariants(tau, layer);
    notify(hooks_.after_occurrence, tau, layer);
  }

 private:
  bool is_relevant(Position tau, std::size_t layer) const {
    if (layer == 0) return true;
    const Position start = start_pos(tau, pattern_->sublen(layer));
    const RangeList& list = lists_[layer];
    if (options_.purge) {
      if (list.empty()) return false;
      if (options_.check_invariants) {
        for (std::size_t i = 1; i < list.size(); ++i) {
          if (list.ranges()[i].contains(start)) {
            throw std::logic_error("start position found in a non-first range");
          }
        }
      }
      return list.front().contains(start);
    }
    // Without purging dead ranges linger at the front; scan instead.
    for (const Range& r : list) {
      if (r.contains(start)) return true;
    }
    return false;
  }

  void check_invariants(Position tau, std::size_t layer) const {
    for (std::size_t i = 1; i < lists_.size(); ++i) {
      const RangeList& list = lists_[i];
      if (!list.well_formed()) {
        throw std::logic_error("range list " + std::to_string(i + 1) + " is not normalized");
      }
      if (const auto bound = list_size_bound(*pattern_, i); bound && list.size() > *bound) {
        throw std::logic_error("range list " + std::to_string(i + 1) + " exceeds its size bound");
      }
    }
    if (options_.purge) {
      for (std::size_t i : {layer, layer + 1}) {
        if (i == 0 || i >= lists_.size() || lists_[i].empty()) continue;
        if (lists_[i].front().end < earliest_live_start(tau, lists_[i].sublen())) {
          throw std::logic_error("dead range survived a purge");
        }
      }
    }
  }

  void notify(const MatcherHooks::Hook& hook, Position tau, std::size_t layer) const {
    if (hook) hook(tau, layer, lists_);
  }

  const VlgPattern* pattern_;
  MatcherOptions options_;
  MatcherHooks hooks_;
  std::vector<RangeList> lists_;
  MatcherCounters counters_;
  std::optional<Position> last_reported_;
};

struct MatchRun {
  StreamCounters stream;
  MatcherCounters matcher;
};

/// Runs the automaton and the matcher together, calling `emit(Position)` for
/// each matching end position in ascending order.
template <class Emit>
MatchRun run_matcher(const VlgPattern& p, const Automaton& automaton, std::string_view text,
                     Emit&& emit, MatcherOptions options = {}, MatcherHooks hooks = {}) {
  Matcher matcher(p, options);
  matcher.set_hooks(std::move(hooks));
  MatchRun run;
  run.stream = automaton.stream(text, [&](const OccEvent& ev) { matcher.process_event(ev, emit); });
  run.matcher = matcher.counters();
  return run;
}

/// End positions of all substrings of `text` matching `p`, ascending.
inline std::vector<Position> find_endpoints(const VlgPattern& p, std::string_view text,
                                            MatcherOptions options = {}) {
  std::vector<Position> out;
  if (p.total_length() > text.size()) return out;
  const Automaton automaton(p);
  run_matcher(p, automaton, text, [&](Position e) { out.push_back(e); }, options);
  return out;
}

}  // namespace vlg
