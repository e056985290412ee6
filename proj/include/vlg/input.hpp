#pragma once

#include <fstream>
#include <iostream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vlg {

/// One searchable sequence. Positions are 1-based within `sequence`.
struct InputDocument {
  std::string id;
  std::string sequence;
};

/// Whole contents of `path`, or of `in` when path is "-".
inline std::string read_source(const std::string& path, std::istream& in = std::cin) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  if (file.bad()) throw std::runtime_error("error while reading '" + path + "'");
  return buf.str();
}

/// Drops one trailing "\n" (or "\r\n").
inline std::string strip_trailing_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') {
    s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
  }
  return s;
}

/// Parses FASTA records. The id is the first whitespace-delimited token of the
/// header line; sequence lines are concatenated with all whitespace removed.
/// Records with an empty sequence are skipped with a warning on `diag`.
inline std::vector<InputDocument> ingest_fasta(std::istream& in, std::ostream& diag) {
  std::vector<InputDocument> docs;
  bool in_record = false;
  bool warned_orphan = false;
  auto finish = [&] {
    if (!in_record) return;
    if (docs.back().sequence.empty()) {
      diag << "warning: skipping FASTA record '" << docs.back().id << "' with empty sequence\n";
      docs.pop_back();
    }
  };
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '>') {
      finish();
      std::istringstream header(line.substr(1));
      std::string id;
      header >> id;
      docs.push_back({id, {}});
      in_record = true;
      continue;
    }
    if (!line.empty() && line.front() == ';') continue;
    if (!in_record) {
      if (line.find_first_not_of(" \t\r") != std::string::npos && !warned_orphan) {
        diag << "warning: ignoring sequence data before the first FASTA header\n";
        warned_orphan = true;
      }
      continue;
    }
    for (char c : line) {
      if (c != ' ' && c != '\t' && c != '\r' && c != '\v' && c != '\f') docs.back().sequence.push_back(c);
    }
  }
  finish();
  return docs;
}

/// Splits raw input into documents: FASTA when forced or when the data starts
/// with '>', otherwise a single document holding the data minus one trailing
/// newline.
inline std::vector<InputDocument> load_documents(std::string data, const std::string& name, bool fasta,
                                                 std::ostream& diag) {
  if (fasta || (!data.empty() && data.front() == '>')) {
    std::istringstream in(std::move(data));
    return ingest_fasta(in, diag);
  }
  return {InputDocument{name, strip_trailing_newline(std::move(data))}};
}

}  // namespace vlg
