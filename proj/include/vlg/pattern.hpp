#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vlg {

/// 1-based text position. Position 0 never names a character.
using Position = std::int64_t;

/// End marker for ranges whose upper end is unbounded.
inline constexpr Position kUnbounded = std::numeric_limits<Position>::max();

/// Largest gap bound accepted by the parser. Keeps position arithmetic
/// (tau + b + 1) well inside Position.
inline constexpr std::size_t kMaxGapBound = std::size_t{1} << 40;

class PatternError : public std::invalid_argument {
 public:
  explicit PatternError(const std::string& what,
                        std::optional<std::size_t> offset = std::nullopt,
                        std::optional<std::size_t> gap_index = std::nullopt)
      : std::invalid_argument(what), offset_(offset), gap_index_(gap_index) {}

  /// Byte offset into the expression where parsing failed, if known.
  std::optional<std::size_t> offset() const noexcept { return offset_; }
  /// 1-based index of the offending gap, if the error concerns one.
  std::optional<std::size_t> gap_index() const noexcept { return gap_index_; }

 private:
  std::optional<std::size_t> offset_;
  std::optional<std::size_t> gap_index_;
};

/// Length range [lower, upper] of a gap; an empty upper means unbounded.
struct GapBounds {
  std::size_t lower = 0;
  std::optional<std::size_t> upper = 0;

  bool bounded() const noexcept { return upper.has_value(); }

  bool operator==(const GapBounds&) const = default;
};

/// Derived sizes of a pattern: m, k, A and B (B empty when unbounded).
struct PatternStats {
  std::size_t total_length = 0;
  std::size_t subpattern_count = 0;
  std::size_t lower_sum = 0;
  std::optional<std::size_t> upper_sum;

  bool operator==(const PatternStats&) const = default;
};

/// A validated pattern P1 .{a1,b1} P2 ... Pk. Immutable once built.
class VlgPattern {
 public:
  VlgPattern(std::vector<std::string> subpatterns, std::vector<GapBounds> gaps)
      : subpatterns_(std::move(subpatterns)), gaps_(std::move(gaps)) {
    if (subpatterns_.empty()) throw PatternError("pattern has no subpatterns");
    if (gaps_.size() + 1 != subpatterns_.size()) {
      throw PatternError("pattern needs exactly one gap between consecutive subpatterns");
    }
    for (std::size_t i = 0; i < subpatterns_.size(); ++i) {
      if (subpatterns_[i].empty()) {
        throw PatternError("subpattern " + std::to_string(i + 1) + " is empty");
      }
      total_length_ += subpatterns_[i].size();
    }
    upper_sum_ = 0;
    for (std::size_t i = 0; i < gaps_.size(); ++i) {
      const GapBounds& g = gaps_[i];
      if (g.lower > kMaxGapBound || (g.upper && *g.upper > kMaxGapBound)) {
        throw PatternError("gap " + std::to_string(i + 1) + ": bound too large", std::nullopt,
                           i + 1);
      }
      if (g.upper && g.lower > *g.upper) {
        throw PatternError("gap " + std::to_string(i + 1) + ": lower bound " +
                               std::to_string(g.lower) + " exceeds upper bound " +
                               std::to_string(*g.upper),
                           std::nullopt, i + 1);
      }
      lower_sum_ += g.lower;
      if (g.upper && upper_sum_) {
        *upper_sum_ += *g.upper;
      } else {
        upper_sum_.reset();
      }
    }
  }

  const std::vector<std::string>& subpatterns() const noexcept { return subpatterns_; }
  const std::string& subpattern(std::size_t layer) const { return subpatterns_.at(layer); }
  std::size_t sublen(std::size_t layer) const { return subpatterns_.at(layer).size(); }

  /// Gap between layer `i` and layer `i + 1` (0-based).
  const std::vector<GapBounds>& gaps() const noexcept { return gaps_; }
  const GapBounds& gap(std::size_t i) const { return gaps_.at(i); }

  std::size_t subpattern_count() const noexcept { return subpatterns_.size(); }
  std::size_t total_length() const noexcept { return total_length_; }
  std::size_t lower_sum() const noexcept { return lower_sum_; }
  std::optional<std::size_t> upper_sum() const noexcept { return upper_sum_; }
  bool bounded() const noexcept { return upper_sum_.has_value(); }

  /// c_i = b_i - a_i + 1; empty for an unbounded gap.
  std::optional<std::size_t> gap_width(std::size_t i) const {
    const GapBounds& g = gaps_.at(i);
    if (!g.upper) return std::nullopt;
    return *g.upper - g.lower + 1;
  }

  /// Longest possible match, m + B. Empty if any gap is unbounded.
  std::optional<std::size_t> max_span() const {
    if (!upper_sum_) return std::nullopt;
    return total_length_ + *upper_sum_;
  }

  bool operator==(const VlgPattern& other) const {
    return subpatterns_ == other.subpatterns_ && gaps_ == other.gaps_;
  }

 private:
  std::vector<std::string> subpatterns_;
  std::vector<GapBounds> gaps_;
  std::size_t total_length_ = 0;
  std::size_t lower_sum_ = 0;
  std::optional<std::size_t> upper_sum_;
};

inline PatternStats pattern_stats(const VlgPattern& p) {
  return {p.total_length(), p.subpattern_count(), p.lower_sum(), p.upper_sum()};
}

namespace detail {

inline bool is_escapable(char c) { return c == '.' || c == '\\' || c == '{'; }

class PatternParser {
 public:
  explicit PatternParser(std::string_view expr) : expr_(expr) {}

  VlgPattern parse() {
    if (expr_.empty()) throw PatternError("empty pattern", 0);
    std::vector<std::string> subs;
    std::vector<GapBounds> gaps;
    bool expect_subpattern = true;
    while (pos_ < expr_.size()) {
      if (expr_[pos_] == '.') {
        if (expect_subpattern) {
          if (subs.empty()) throw PatternError("pattern must start with a subpattern", pos_);
          throw PatternError("adjacent gaps with no subpattern between them", pos_);
        }
        gaps.push_back(parse_gap(gaps.size() + 1));
        expect_subpattern = true;
      } else {
        subs.push_back(parse_subpattern());
        expect_subpattern = false;
      }
    }
    if (expect_subpattern) {
      throw PatternError("pattern must end with a subpattern", expr_.size());
    }
    return VlgPattern(std::move(subs), std::move(gaps));
  }

 private:
  std::string parse_subpattern() {
    std::string out;
    while (pos_ < expr_.size() && expr_[pos_] != '.') {
      const char c = expr_[pos_];
      if (c == '{') throw PatternError("unescaped '{' in subpattern", pos_);
      if (c == '\\') {
        if (pos_ + 1 >= expr_.size()) throw PatternError("dangling escape", pos_);
        const char e = expr_[pos_ + 1];
        if (!is_escapable(e)) {
          throw PatternError(std::string("invalid escape '\\") + e + "'", pos_);
        }
        out.push_back(e);
        pos_ += 2;
      } else {
        out.push_back(c);
        ++pos_;
      }
    }
    return out;
  }

  // Parses ".{a,b}" or ".{a,*}" starting at the '.'.
  GapBounds parse_gap(std::size_t index) {
    const std::size_t gap_start = pos_;
    ++pos_;
    expect('{', "expected '{' after '.'");
    GapBounds g;
    g.lower = parse_int(index);
    expect(',', "expected ',' in gap");
    if (pos_ < expr_.size() && expr_[pos_] == '*') {
      ++pos_;
      g.upper.reset();
    } else {
      g.upper = parse_int(index);
    }
    expect('}', "expected '}' to close gap");
    if (g.upper && g.lower > *g.upper) {
      throw PatternError("gap " + std::to_string(index) + ": lower bound " +
                             std::to_string(g.lower) + " exceeds upper bound " +
                             std::to_string(*g.upper),
                         gap_start, index);
    }
    return g;
  }

  std::size_t parse_int(std::size_t index) {
    const std::size_t begin = pos_;
    while (pos_ < expr_.size() && expr_[pos_] >= '0' && expr_[pos_] <= '9') ++pos_;
    if (begin == pos_) throw PatternError("expected a decimal integer", begin, index);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(expr_.data() + begin, expr_.data() + pos_, value);
    if (ec != std::errc{} || value > kMaxGapBound) {
      throw PatternError("gap bound out of range", begin, index);
    }
    return value;
  }

  void expect(char c, const char* message) {
    if (pos_ >= expr_.size() || expr_[pos_] != c) throw PatternError(message, pos_);
    ++pos_;
  }

  std::string_view expr_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `P1.{a1,b1}P2...Pk`. Backslash escapes '.', '\' and '{' inside
/// subpatterns; `.{a,*}` is an unbounded gap. Throws PatternError.
inline VlgPattern parse_pattern(std::string_view expr) {
  return detail::PatternParser(expr).parse();
}

/// Inverse of parse_pattern: parse_pattern(render_pattern(p)) == p.
inline std::string render_pattern(const VlgPattern& p) {
  std::string out;
  for (std::size_t i = 0; i < p.subpattern_count(); ++i) {
    if (i > 0) {
      const GapBounds& g = p.gap(i - 1);
      out += ".{" + std::to_string(g.lower) + ",";
      out += g.upper ? std::to_string(*g.upper) : std::string("*");
      out += "}";
    }
    for (char c : p.subpattern(i)) {
      if (detail::is_escapable(c)) out.push_back('\\');
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace vlg
