// Copyright 2026 The HPDA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hpda/io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

#include "hpda/errors.hpp"

namespace hpda {

namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

// Non-blank lines split into whitespace-separated tokens with 1-based
// positions.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      const std::size_t begin = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > begin) {
        tokens.push_back({line.substr(begin, i - begin), line_no, static_cast<int>(begin) + 1});
      }
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

int parse_count(const Token& t, int minimum) {
  int value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < minimum) {
    throw ParseError(t.line, t.column,
                     "expected an integer >= " + std::to_string(minimum) + ", got '" +
                         std::string(t.text) + "'");
  }
  return value;
}

Entry parse_entry(const Token& t) {
  if (t.text == "*") return Entry::star();
  for (char c : t.text) {
    if (c < '0' || c > '9') {
      throw ParseError(t.line, t.column,
                       "expected '*' or a positive integer, got '" + std::string(t.text) + "'");
    }
  }
  return Entry::integer(parse_count(t, 1));
}

const std::vector<Token>& header(const std::vector<std::vector<Token>>& lines,
                                 std::string_view keyword, std::size_t fields) {
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  const auto& h = lines.front();
  if (h.front().text != keyword) {
    throw ParseError(h.front().line, h.front().column,
                     "expected header keyword '" + std::string(keyword) + "'");
  }
  if (h.size() != fields + 1) {
    throw ParseError(h.front().line, h.front().column,
                     "header needs " + std::to_string(fields) + " numbers");
  }
  return h;
}

void require_rows(const std::vector<std::vector<Token>>& lines, int rows) {
  const int got = static_cast<int>(lines.size()) - 1;
  if (got != rows) {
    throw DimensionError("header declares " + std::to_string(rows) + " rows, found " +
                         std::to_string(got));
  }
}

void require_width(const std::vector<Token>& line, int width) {
  if (static_cast<int>(line.size()) != width) {
    throw DimensionError("line " + std::to_string(line.front().line) + " has " +
                         std::to_string(line.size()) + " tokens, expected " +
                         std::to_string(width));
  }
}

std::string entry_token(Entry e) { return e.is_star() ? "*" : std::to_string(e.value()); }

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

void save_pda(const Pda& p, std::ostream& out) {
  const PdaParams& d = p.params();
  out << "PDA " << d.k << ' ' << d.f << ' ' << d.z << ' ' << d.s << '\n';
  for (int r = 0; r < p.rows(); ++r) {
    for (int c = 0; c < p.cols(); ++c) {
      if (c > 0) out << ' ';
      out << entry_token(p.at(r, c));
    }
    out << '\n';
  }
}

std::string format_pda(const Pda& p) {
  std::ostringstream out;
  save_pda(p, out);
  return out.str();
}

Pda parse_pda(std::string_view text) {
  const auto lines = tokenize(text);
  const auto& h = header(lines, "PDA", 4);
  const PdaParams d{parse_count(h[1], 1), parse_count(h[2], 1), parse_count(h[3], 0),
                    parse_count(h[4], 0)};
  require_rows(lines, d.f);
  std::vector<Entry> cells;
  cells.reserve(static_cast<std::size_t>(d.f) * d.k);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    require_width(lines[r], d.k);
    for (const Token& t : lines[r]) cells.push_back(parse_entry(t));
  }
  return Pda(d.f, d.k, std::move(cells), d);
}

Pda load_pda(std::istream& in) { return parse_pda(read_all(in)); }

void save_hpda(const Hpda& h, std::ostream& out) {
  const HpdaParams& p = h.params();
  out << "HPDA " << p.k1 << ' ' << p.k2 << ' ' << p.f << ' ' << p.z1 << ' ' << p.z2 << '\n';
  for (int r = 0; r < p.f; ++r) {
    for (int k1 = 0; k1 < p.k1; ++k1) {
      out << (k1 > 0 ? " " : "") << (h.mirror().is_star(r, k1) ? "*" : "-");
    }
    for (int k1 = 0; k1 < p.k1; ++k1) {
      for (int k2 = 0; k2 < p.k2; ++k2) out << ' ' << entry_token(h.at(k1, r, k2));
    }
    out << '\n';
  }
}

std::string format_hpda(const Hpda& h) {
  std::ostringstream out;
  save_hpda(h, out);
  return out.str();
}

Hpda parse_hpda(std::string_view text) {
  const auto lines = tokenize(text);
  const auto& h = header(lines, "HPDA", 5);
  const int k1 = parse_count(h[1], 1);
  const int k2 = parse_count(h[2], 1);
  const int f = parse_count(h[3], 1);
  const int z1 = parse_count(h[4], 0);
  const int z2 = parse_count(h[5], 0);
  require_rows(lines, f);

  std::vector<bool> mirror;
  mirror.reserve(static_cast<std::size_t>(f) * k1);
  std::vector<std::vector<Entry>> blocks(static_cast<std::size_t>(k1));
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& line = lines[r];
    require_width(line, k1 + k1 * k2);
    for (int c = 0; c < k1; ++c) {
      const Token& t = line[static_cast<std::size_t>(c)];
      if (t.text != "*" && t.text != "-") {
        throw ParseError(t.line, t.column,
                         "mirror token must be '*' or '-', got '" + std::string(t.text) + "'");
      }
      mirror.push_back(t.text == "*");
    }
    for (int c = 0; c < k1 * k2; ++c) {
      blocks[static_cast<std::size_t>(c / k2)].push_back(
          parse_entry(line[static_cast<std::size_t>(k1 + c)]));
    }
  }
  std::vector<Pda> grids;
  grids.reserve(blocks.size());
  for (auto& cells : blocks) grids.push_back(Pda::from_grid(f, k2, std::move(cells)));
  return Hpda::with_derived_sets(MirrorPlacement(f, k1, std::move(mirror)), std::move(grids), z1,
                                 z2);
}

Hpda load_hpda(std::istream& in) { return parse_hpda(read_all(in)); }

std::variant<Pda, Hpda> parse_array(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  const Token& first = lines.front().front();
  if (first.text == "PDA") return parse_pda(text);
  if (first.text == "HPDA") return parse_hpda(text);
  throw ParseError(first.line, first.column,
                   "unknown header '" + std::string(first.text) + "', expected PDA or HPDA");
}

}  // namespace hpda
