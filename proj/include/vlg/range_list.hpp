#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>

#include "vlg/pattern.hpp"

namespace vlg {

/// Closed interval [start, end] of text positions; end may be kUnbounded.
struct Range {
  Position start = 0;
  Position end = 0;

  bool unbounded() const noexcept { return end == kUnbounded; }
  bool contains(Position p) const noexcept { return start <= p && p <= end; }

  bool operator==(const Range&) const = default;
};

/// First position a later occurrence of a string of length `sublen` ending at
/// or after `tau` can start at.
inline Position earliest_live_start(Position tau, std::size_t sublen) {
  return tau - static_cast<Position>(sublen) + 1;
}

/// Sorted list of disjoint, non-adjacent ranges of permitted start positions
/// for one layer. Appends arrive in nondecreasing start order and dead ranges
/// only ever sit at the front, so a deque serves both ends.
class RangeList {
 public:
  RangeList() = default;
  RangeList(std::size_t layer, std::size_t sublen) : layer_(layer), sublen_(sublen) {}

  std::size_t layer() const noexcept { return layer_; }
  std::size_t sublen() const noexcept { return sublen_; }

  /// Drops the leading ranges that end before any occurrence of this layer
  /// ending at or after `tau` could start.
  std::size_t purge_dead(Position tau) {
    const Position live = earliest_live_start(tau, sublen_);
    std::size_t removed = 0;
    while (!ranges_.empty() && ranges_.front().end < live) {
      ranges_.pop_front();
      ++removed;
    }
    return removed;
  }

  /// Appends `r`, merging it into the last range when they overlap or adjoin.
  /// Returns true if the list grew.
  bool append_merge(Range r) {
    if (!ranges_.empty()) {
      Range& last = ranges_.back();
      if (last.end == kUnbounded || r.start <= last.end + 1) {
        last.end = std::max(last.end, r.end);
        return false;
      }
    }
    ranges_.push_back(r);
    return true;
  }

  bool empty() const noexcept { return ranges_.empty(); }
  std::size_t size() const noexcept { return ranges_.size(); }
  const Range& front() const { return ranges_.front(); }
  const Range& back() const { return ranges_.back(); }
  const std::deque<Range>& ranges() const noexcept { return ranges_; }
  auto begin() const { return ranges_.begin(); }
  auto end() const { return ranges_.end(); }

  /// True when the list is sorted with at least one uncovered position
  /// between consecutive ranges and every range is non-empty.
  bool well_formed() const {
    for (std::size_t i = 0; i < ranges_.size(); ++i) {
      if (ranges_[i].start > ranges_[i].end) return false;
      if (i > 0 && (ranges_[i - 1].end == kUnbounded || ranges_[i].start <= ranges_[i - 1].end + 1)) {
        return false;
      }
    }
    return true;
  }

 private:
  std::deque<Range> ranges_;
  std::size_t layer_ = 0;
  std::size_t sublen_ = 0;
};

}  // namespace vlg
