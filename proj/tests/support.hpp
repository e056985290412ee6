#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vlg/pattern.hpp"

namespace vlg::test {

// Running example text and patterns.
inline const std::string kExampleText = "ATCGGCTCCAGACCAGTACCCGTTCCGTGGT";
inline const std::string kExamplePattern = "A.{6,7}CC.{2,6}GT";
inline const std::string kCombinationPattern = "G.{0,3}C.{1,6}A.{2,7}T";
inline const std::string kGraphText = "CTGGCCCCGCTCCACGTTGAGCGGCGCTGAG";
inline const std::string kGraphPattern = "C.{0,3}G.{3,10}A";

struct InstanceLimits {
  std::size_t max_alphabet = 4;
  std::size_t max_text = 300;
  std::size_t max_k = 4;
  std::size_t max_sublen = 4;
  std::size_t max_lower = 6;
  std::size_t max_width = 6;  // b - a
  bool allow_unbounded = false;
};

struct Instance {
  VlgPattern pattern;
  std::string text;

  std::string describe() const {
    std::ostringstream os;
    os << "pattern=" << render_pattern(pattern) << " text=" << text;
    return os.str();
  }
};

/// Random pattern and text over a small alphabet. Gaps include a == b and
/// a == 0 cases; roughly half the texts get a planted match.
inline Instance random_instance(std::mt19937_64& rng, const InstanceLimits& lim = {}) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::string alphabet = std::string("ACGT").substr(0, uniform(1, lim.max_alphabet));
  auto random_string = [&](std::size_t len) {
    std::string s(len, 'A');
    for (char& c : s) c = alphabet[uniform(0, alphabet.size() - 1)];
    return s;
  };

  const std::size_t k = uniform(1, lim.max_k);
  std::vector<std::string> subs;
  std::vector<GapBounds> gaps;
  for (std::size_t i = 0; i < k; ++i) subs.push_back(random_string(uniform(1, lim.max_sublen)));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    GapBounds g;
    switch (uniform(0, 3)) {
      case 0: g.lower = 0; break;
      default: g.lower = uniform(0, lim.max_lower); break;
    }
    if (lim.allow_unbounded && uniform(0, 4) == 0) {
      g.upper.reset();
    } else if (uniform(0, 3) == 0) {
      g.upper = g.lower;
    } else {
      g.upper = g.lower + uniform(0, lim.max_width);
    }
    gaps.push_back(g);
  }
  VlgPattern p(subs, gaps);

  std::string text = random_string(uniform(0, lim.max_text));
  if (uniform(0, 1) == 0) {
    std::string planted = subs[0];
    for (std::size_t i = 1; i < k; ++i) {
      const std::size_t hi = gaps[i - 1].upper ? *gaps[i - 1].upper : gaps[i - 1].lower + 5;
      planted += random_string(uniform(gaps[i - 1].lower, hi)) + subs[i];
    }
    if (planted.size() <= lim.max_text) {
      const std::size_t at = uniform(0, text.size());
      text.insert(at, planted);
      if (text.size() > lim.max_text) text.resize(lim.max_text);
    }
  }
  return {std::move(p), std::move(text)};
}

template <class C>
std::set<typename C::value_type> as_set(const C& c) {
  return {c.begin(), c.end()};
}

}  // namespace vlg::test
