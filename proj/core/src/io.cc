// Copyright 2026 The stsp Authors.
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

#include "stsp/io.h"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <sstream>

#include "stsp/errors.h"

namespace stsp {
namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines split into tokens.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::int64_t ParseInt(std::string_view token, int line, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

Goal ParseGoalAt(std::string_view token, int line) {
  try {
    return ParseGoal(token);
  } catch (const ParseError& e) {
    throw ParseError(line, e.what());
  }
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : lines_(Tokenize(text)) {
    int last = 0;
    for (auto& l : lines_) last = l.number;
    eof_line_ = last + 1;
  }
  bool done() const { return next_ >= lines_.size(); }
  const Line& Next(const char* expected) {
    if (done()) {
      throw ParseError(eof_line_, std::string("missing ") + expected +
                                      ": unexpected end of input");
    }
    return lines_[next_++];
  }
  void ExpectEnd() const {
    if (!done()) {
      throw ParseError(lines_[next_].number, "unexpected trailing content");
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  int eof_line_ = 1;
};

DistanceMatrix ReadMatrix(LineReader& reader, int size, const char* name) {
  DistanceMatrix d(size);
  for (int row = 0; row < size; ++row) {
    const std::string expected =
        std::string(name) + " row " + std::to_string(row);
    const Line& line = reader.Next(expected.c_str());
    if (static_cast<int>(line.tokens.size()) != size) {
      throw ParseError(line.number, expected + " has " +
                                        std::to_string(line.tokens.size()) +
                                        " entries, expected " +
                                        std::to_string(size));
    }
    for (int col = 0; col < size; ++col) {
      const Weight w = ParseInt(line.tokens[col], line.number, "an integer");
      if (w < 0) {
        throw ParseError(line.number, "negative entry " + std::to_string(w));
      }
      if (row == col && w != 0) {
        throw ParseError(line.number, "nonzero diagonal entry");
      }
      d.Set(row, col, w);
    }
  }
  return d;
}

void AppendMatrix(std::ostringstream& out, const DistanceMatrix& d) {
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) {
      if (j) out << ' ';
      out << d(i, j);
    }
    out << '\n';
  }
}

std::vector<int> ParseItems(const Line& line, std::size_t from) {
  std::vector<int> items;
  for (std::size_t i = from; i < line.tokens.size(); ++i) {
    const auto v = ParseInt(line.tokens[i], line.number, "an item");
    if (v < 0 || v > std::numeric_limits<int>::max()) {
      throw ParseError(line.number, "item out of range");
    }
    items.push_back(static_cast<int>(v));
  }
  return items;
}

std::vector<int> ParseTourLine(const Line& line, std::string_view keyword) {
  if (line.tokens.front() != keyword) {
    throw ParseError(line.number, "expected " + std::string(keyword));
  }
  std::vector<int> items = ParseItems(line, 1);
  if (items.size() < 2 || items.front() != 0 || items.back() != 0) {
    throw ParseError(line.number,
                     std::string(keyword) + " must start and end at depot 0");
  }
  return {items.begin() + 1, items.end() - 1};
}

}  // namespace

std::string WriteInstance(const Instance& instance) {
  std::ostringstream out;
  out << "STSP " << instance.k() << ' ' << instance.n() << ' '
      << GoalName(instance.goal()) << '\n';
  AppendMatrix(out, instance.pickup());
  AppendMatrix(out, instance.delivery());
  return out.str();
}

Instance ReadInstance(std::string_view text) {
  LineReader reader(text);
  const Line& header = reader.Next("header");
  if (header.tokens.size() != 4 || header.tokens[0] != "STSP") {
    throw ParseError(header.number, "header must be 'STSP <k> <n> <MIN|MAX>'");
  }
  const auto k = ParseInt(header.tokens[1], header.number, "stack count");
  const auto n = ParseInt(header.tokens[2], header.number, "item count");
  if (k < 1 || k > 1'000'000) throw ParseError(header.number, "stack count out of range");
  if (n < 1 || n > 100'000) throw ParseError(header.number, "item count out of range");
  const Goal goal = ParseGoalAt(header.tokens[3], header.number);
  DistanceMatrix pickup = ReadMatrix(reader, static_cast<int>(n) + 1, "pickup");
  DistanceMatrix delivery =
      ReadMatrix(reader, static_cast<int>(n) + 1, "delivery");
  reader.ExpectEnd();
  return Instance(static_cast<int>(k), std::move(pickup), std::move(delivery),
                  goal);
}

std::string WriteTspMatrix(const DistanceMatrix& d, Goal goal) {
  std::ostringstream out;
  out << "TSP " << d.size() - 1 << ' ' << GoalName(goal) << '\n';
  AppendMatrix(out, d);
  return out.str();
}

TspMatrix ReadTspMatrix(std::string_view text) {
  LineReader reader(text);
  const Line& header = reader.Next("header");
  if (header.tokens.size() != 3 || header.tokens[0] != "TSP") {
    throw ParseError(header.number, "header must be 'TSP <n> <MIN|MAX>'");
  }
  const auto n = ParseInt(header.tokens[1], header.number, "item count");
  if (n < 1 || n > 100'000) throw ParseError(header.number, "item count out of range");
  const Goal goal = ParseGoalAt(header.tokens[2], header.number);
  DistanceMatrix d = ReadMatrix(reader, static_cast<int>(n) + 1, "matrix");
  reader.ExpectEnd();
  return {std::move(d), goal};
}

std::string WriteSolution(const Solution& solution) {
  std::ostringstream out;
  out << "VALUE " << solution.value << '\n';
  auto tour = [&](const char* key, const Tour& t) {
    out << key << " 0";
    for (int i : t.items()) out << ' ' << i;
    out << " 0\n";
  };
  tour("TOURA", solution.tour_a);
  tour("TOURB", solution.tour_b);
  for (int s = 0; s < solution.packing.num_stacks(); ++s) {
    out << "STACK" << s + 1;
    for (int i : solution.packing.stack(s)) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

SolutionRecord ReadSolution(std::string_view text) {
  LineReader reader(text);
  SolutionRecord record;
  const Line& value = reader.Next("VALUE line");
  if (value.tokens.size() != 2 || value.tokens[0] != "VALUE") {
    throw ParseError(value.number, "expected 'VALUE <v>'");
  }
  record.value = ParseInt(value.tokens[1], value.number, "a value");
  record.tour_a = ParseTourLine(reader.Next("TOURA line"), "TOURA");
  record.tour_b = ParseTourLine(reader.Next("TOURB line"), "TOURB");
  while (!reader.done()) {
    const Line& line = reader.Next("STACK line");
    const std::string expected =
        "STACK" + std::to_string(record.stacks.size() + 1);
    if (line.tokens.front() != expected) {
      throw ParseError(line.number, "expected " + expected);
    }
    record.stacks.push_back(ParseItems(line, 1));
  }
  if (record.stacks.empty()) throw ParseError(0, "no STACK lines");
  return record;
}

}  // namespace stsp
