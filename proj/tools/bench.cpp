// Smoke benchmark: end-position matching over a random DNA text.
//   vlg_bench [megabytes] [pattern]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "vlg/matcher.hpp"

int main(int argc, char** argv) {
  const double megabytes = argc > 1 ? std::atof(argv[1]) : 10.0;
  const std::string expr = argc > 2 ? argv[2] : "ACG.{2,8}GGA.{0,5}TTC.{10,20}CAG.{1,4}AT";
  const auto n = static_cast<std::size_t>(megabytes * 1024 * 1024);

  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> pick(0, 3);
  std::string text(n, 'A');
  for (char& c : text) c = "ACGT"[pick(rng)];

  const vlg::VlgPattern p = vlg::parse_pattern(expr);
  const vlg::Automaton automaton(p);
  std::size_t matches = 0;
  const auto t0 = std::chrono::steady_clock::now();
  const vlg::MatchRun run = vlg::run_matcher(p, automaton, text, [&](vlg::Position) { ++matches; });
  const auto t1 = std::chrono::steady_clock::now();

  std::cout << "n=" << n << " k=" << p.subpattern_count() << " alpha=" << run.stream.occurrences
            << " matches=" << matches << " seconds="
            << std::chrono::duration<double>(t1 - t0).count() << '\n';
  return 0;
}
