#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vlg/aho_corasick.hpp"
#include "vlg/gap_graph.hpp"
#include "vlg/input.hpp"
#include "vlg/matcher.hpp"
#include "vlg/oracle.hpp"
#include "vlg/pattern.hpp"
#include "vlg/reporter.hpp"

namespace vlg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;

struct Options {
  std::string pattern;
  std::string text_path = "-";
  bool fasta = false;
  std::string engine = "onthefly";
  std::string format = "text";
  std::optional<std::size_t> chunk_len;
  bool combos = false;  // oracle only
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::json;

class Printer {
 public:
  Printer(std::ostream& out, const Options& opts, bool fasta) : out_(out), json_(opts.format == "json"), fasta_(fasta) {}

  void set_record(const std::string& id) { record_ = id; }

  void end(Position e) {
    if (json_) {
      json j = record_json();
      j["end"] = e;
      out_ << j.dump() << '\n';
    } else {
      out_ << prefix() << e << '\n';
    }
  }

  void ends(std::span<const Position> ends) {
    if (json_) {
      json j = record_json();
      j["ends"] = std::vector<Position>(ends.begin(), ends.end());
      out_ << j.dump() << '\n';
      return;
    }
    out_ << prefix();
    for (std::size_t i = 0; i < ends.size(); ++i) out_ << (i ? "," : "") << ends[i];
    out_ << '\n';
  }

  void graph(const ImplicitGapGraph& g) {
    if (!json_) {
      write_graph_text(g, out_, prefix());
      return;
    }
    for (const auto& l : g.layers()) {
      for (const GraphNode& n : l) {
        json j = record_json();
        j["layer"] = n.layer + 1;
        j["end"] = n.end;
        out_ << j.dump() << '\n';
      }
    }
    for (const auto& e : g.edges()) {
      json j = record_json();
      j["layer"] = e.layer + 1;
      j["end"] = e.end;
      j["pred_layer"] = e.layer;
      j["pred_end"] = e.pred_end;
      out_ << j.dump() << '\n';
    }
  }

  void stats(const std::vector<std::pair<std::string, json>>& fields) {
    if (json_) {
      json j = record_json();
      for (const auto& [key, value] : fields) j[key] = value;
      out_ << j.dump() << '\n';
      return;
    }
    for (const auto& [key, value] : fields) {
      out_ << prefix() << key << '=';
      if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) out_ << (i ? "," : "") << value[i].dump();
      } else if (value.is_string()) {
        out_ << value.get<std::string>();
      } else {
        out_ << value.dump();
      }
      out_ << '\n';
    }
  }

 private:
  std::string prefix() const { return fasta_ ? record_ + ":" : std::string(); }
  json record_json() const {
    json j = json::object();
    if (fasta_) j["record"] = record_;
    return j;
  }

  std::ostream& out_;
  bool json_;
  bool fasta_;
  std::string record_;
};

inline void require_bounded(const VlgPattern& p, const std::string& command) {
  if (!p.bounded()) throw UsageError("'" + command + "' requires bounded gaps");
}

inline void run_stats(const VlgPattern& p, const InputDocument& doc, Printer& printer) {
  const std::size_t k = p.subpattern_count();
  std::vector<std::size_t> per_layer(k, 0);
  std::size_t matches = 0;
  MatchRun run;
  if (p.total_length() <= doc.sequence.size()) {
    const Automaton automaton(p);
    Matcher matcher(p);
    run.stream = automaton.stream(doc.sequence, [&](const OccEvent& ev) {
      for (std::size_t layer : ev.layers) ++per_layer[layer];
      matcher.process_event(ev, [&](Position) { ++matches; });
    });
    run.matcher = matcher.counters();
  } else {
    run.matcher.peak_list_sizes.assign(k, 0);
  }

  std::vector<std::pair<std::string, json>> fields;
  fields.emplace_back("n", doc.sequence.size());
  fields.emplace_back("m", p.total_length());
  fields.emplace_back("k", k);
  fields.emplace_back("A", p.lower_sum());
  fields.emplace_back("B", p.upper_sum() ? json(*p.upper_sum()) : json("unbounded"));
  fields.emplace_back("alpha", run.stream.occurrences);
  fields.emplace_back("alpha_per_subpattern", per_layer);
  fields.emplace_back("matches", matches);
  if (p.bounded()) {
    fields.emplace_back("beta", count_combinations(build_implicit_gap_graph(p, doc.sequence)));
  } else {
    fields.emplace_back("beta", "unbounded");
  }
  std::vector<std::size_t> peaks(run.matcher.peak_list_sizes.begin() + 1, run.matcher.peak_list_sizes.end());
  fields.emplace_back("peak_list_sizes", peaks);
  printer.stats(fields);
}

inline void run_command(const std::string& command, const Options& opts, std::ostream& out, std::ostream& err,
                        std::istream& in) {
  const VlgPattern p = parse_pattern(opts.pattern);
  if (command == "combos" || command == "graph") require_bounded(p, command);
  if (command == "oracle" && opts.combos) require_bounded(p, "oracle --combos");
  if (command == "combos" && opts.engine == "chunked") {
    make_chunk_plan(p, 0, opts.chunk_len);  // validates --chunk-len up front
  }

  std::string data;
  try {
    data = read_source(opts.text_path, in);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const bool fasta = opts.fasta || (!data.empty() && data.front() == '>');
  const std::vector<InputDocument> docs = load_documents(std::move(data), opts.text_path, opts.fasta, err);
  Printer printer(out, opts, fasta);

  for (const InputDocument& doc : docs) {
    printer.set_record(doc.id);
    const std::string_view text = doc.sequence;
    if (command == "match") {
      for (Position e : find_endpoints(p, text)) printer.end(e);
    } else if (command == "combos") {
      auto sink = [&](std::span<const Position> ends) { printer.ends(ends); };
      if (opts.engine == "chunked") {
        report_chunked(p, text, sink, opts.chunk_len);
      } else {
        report_on_the_fly(p, text, sink);
      }
    } else if (command == "graph") {
      printer.graph(build_implicit_gap_graph(p, text));
    } else if (command == "oracle") {
      if (opts.combos) {
        for (const auto& c : oracle::brute_force_combinations(p, text)) printer.ends(c);
      } else {
        for (Position e : oracle::brute_force_endpoints(p, text)) printer.end(e);
      }
    } else if (command == "stats") {
      run_stats(p, doc, printer);
    }
  }
}

}  // namespace detail

/// Entry point of the `vlg` tool. Returns 0 on success (including no matches)
/// and 2 on usage, pattern or input errors.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr,
               std::istream& in = std::cin) {
  CLI::App app{"Variable-length-gap pattern matching", "vlg"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-p,--pattern", opts.pattern, "Pattern, e.g. A.{6,7}CC.{2,6}GT")->required();
    sub->add_option("-t,--text", opts.text_path, "Text file, or - for standard input");
    sub->add_flag("--fasta", opts.fasta, "Treat the input as FASTA");
    sub->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* match = app.add_subcommand("match", "Report end positions of matches");
  add_common(match);
  CLI::App* combos = app.add_subcommand("combos", "Report every match combination");
  add_common(combos);
  combos->add_option("--engine", opts.engine, "onthefly or chunked")->check(CLI::IsMember({"onthefly", "chunked"}));
  combos->add_option("--chunk-len", opts.chunk_len, "Chunk length for the chunked engine (default 2(m+B))");
  CLI::App* graph = app.add_subcommand("graph", "Dump the implicit gap graph");
  add_common(graph);
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference output");
  add_common(oracle_cmd);
  oracle_cmd->add_flag("--combos", opts.combos, "Report combinations instead of end positions");
  CLI::App* stats = app.add_subcommand("stats", "Instance and run statistics");
  add_common(stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  try {
    detail::run_command(chosen->get_name(), opts, out, err, in);
  } catch (const PatternError& e) {
    err << "error: invalid pattern: " << e.what();
    if (e.offset()) err << " (at offset " << *e.offset() << ")";
    err << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace vlg::cli
