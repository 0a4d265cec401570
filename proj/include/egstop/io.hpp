// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "egstop/errors.hpp"

// Deterministic numeric text I/O. Numbers are written in scientific
// notation with the shortest digit string that round-trips the double
// exactly, so emit -> parse -> emit is a fixed point and parsed tables
// reproduce the in-memory values bit for bit.

namespace egstop {

inline std::string format_number(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::scientific);
  return std::string(buf, res.ptr);
}

inline double parse_number(std::string_view text) {
  double out = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw domain_error("parse_number: not a number: '" + std::string(text) + "'");
  return out;
}

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      break;
    }
    out.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

/// A parsed CSV table: '#' comment lines, one header row, string cells.
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(std::string_view name) const {
    for (size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return int(i);
    return -1;
  }
};

inline CsvTable parse_csv(std::string_view text) {
  CsvTable t;
  size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      t.comments.emplace_back(line);
      continue;
    }
    if (!header_seen) {
      t.header = split_csv_line(line);
      header_seen = true;
    } else {
      t.rows.push_back(split_csv_line(line));
    }
  }
  return t;
}

}  // namespace egstop
