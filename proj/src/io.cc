// Copyright 2026 The cascade-knapsack Authors
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

#include "cascade_knapsack/io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cascade_knapsack/error.h"

namespace cascade_knapsack {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

KnapsackError ParseFailure(int line, const std::string& what) {
  return KnapsackError(ErrorCode::kParseError,
                       "line " + std::to_string(line) + ": " + what);
}

int64_t ParseInt(std::string_view text, int line, const char* field) {
  int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseFailure(line, std::string("bad ") + field + " '" +
                                 std::string(text) + "'");
  }
  return value;
}

// Splits "key rest" at the first run of blanks.
std::pair<std::string_view, std::string_view> SplitKey(std::string_view s) {
  const auto space = s.find_first_of(" \t");
  if (space == std::string_view::npos) return {s, {}};
  return {s.substr(0, space), Trim(s.substr(space))};
}

std::string Escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    if (c == '"' || c == '\\' || c == '{' || c == '}' || c == '|' ||
        c == '<' || c == '>') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

std::string Cardinality(int free_count) {
  if (free_count <= 62) return std::to_string(int64_t{1} << free_count);
  return "2^" + std::to_string(free_count);
}

std::string_view NodeStyle(NodeFate fate) {
  switch (fate) {
    case NodeFate::kPrunedAtCreation:
      return "dashed";
    case NodeFate::kInfeasible:
      return "dotted";
    case NodeFate::kBoundClosed:
    case NodeFate::kOpen:
      return "solid";
    case NodeFate::kIntegral:
    case NodeFate::kBranched:
    case NodeFate::kNoChildren:
      return "bold";
  }
  return "solid";
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view trimmed = Trim(raw);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    lines.emplace_back(number, raw);
  }
  if (lines.empty()) throw ParseFailure(number, "empty document");

  size_t pos = 0;
  {
    const auto [line, raw] = lines[pos++];
    const auto [key, rest] = SplitKey(Trim(raw));
    if (key != "format_version") {
      throw ParseFailure(line, "expected 'format_version' first");
    }
    const int64_t version = ParseInt(rest, line, "format_version");
    if (version != kInstanceFormatVersion) {
      throw KnapsackError(ErrorCode::kVersionUnsupported,
                          "format_version " + std::to_string(version));
    }
  }

  std::optional<std::string> name;
  std::optional<int64_t> capacity;
  std::optional<int64_t> count;
  int count_line = 0;
  while (pos < lines.size() && !count) {
    const auto [line, raw] = lines[pos++];
    const std::string_view body = Trim(raw);
    const auto [key, rest] = SplitKey(body);
    if (key == "name") {
      if (name) throw ParseFailure(line, "duplicate 'name'");
      // Keep the name verbatim after the single separating blank.
      const std::string_view after =
          Trim(raw).size() > 4 ? Trim(raw).substr(5) : std::string_view{};
      name = std::string(after);
    } else if (key == "capacity") {
      if (capacity) throw ParseFailure(line, "duplicate 'capacity'");
      capacity = ParseInt(rest, line, "capacity");
    } else if (key == "items") {
      count = ParseInt(rest, line, "item count");
      count_line = line;
      if (*count < 0) throw ParseFailure(line, "negative item count");
    } else {
      throw ParseFailure(line, "unknown field '" + std::string(key) + "'");
    }
  }
  if (!capacity) throw ParseFailure(number, "missing 'capacity'");
  if (!count) throw ParseFailure(number, "missing 'items'");

  std::vector<Item> items;
  for (int64_t k = 0; k < *count; ++k) {
    if (pos >= lines.size()) {
      throw ParseFailure(count_line, "expected " + std::to_string(*count) +
                                         " item lines, found " +
                                         std::to_string(k));
    }
    const auto [line, raw] = lines[pos++];
    const auto [weight_text, value_text] = SplitKey(Trim(raw));
    if (value_text.empty() ||
        value_text.find_first_of(" \t") != std::string_view::npos) {
      throw ParseFailure(line, "item needs '<weight> <value>'");
    }
    Item item;
    item.weight = ParseInt(weight_text, line, "weight");
    try {
      item.value = Rational::Parse(value_text);
    } catch (const KnapsackError& e) {
      throw ParseFailure(line, e.what());
    }
    items.push_back(item);
  }
  if (pos != lines.size()) {
    throw ParseFailure(lines[pos].first, "unexpected content after items");
  }
  try {
    return Canonicalize(std::move(items), *capacity, name.value_or(""));
  } catch (const KnapsackError& e) {
    if (e.code() == ErrorCode::kNonPositiveInput) {
      throw KnapsackError(ErrorCode::kParseError, e.what());
    }
    throw;
  }
}

std::string WriteInstance(const Instance& instance) {
  if (instance.name.find_first_of("\r\n") != std::string::npos) {
    throw KnapsackError(ErrorCode::kInvalidConfig,
                        "instance name contains a line break");
  }
  std::ostringstream out;
  out << "format_version " << kInstanceFormatVersion << "\n";
  out << "name " << instance.name << "\n";
  out << "capacity " << instance.capacity << "\n";
  out << "items " << instance.size() << "\n";
  for (const Item& item : InputOrderItems(instance)) {
    out << item.weight << " " << item.value.ToString() << "\n";
  }
  return out.str();
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw KnapsackError(ErrorCode::kParseError, "cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  if (!out) {
    throw KnapsackError(ErrorCode::kInvalidConfig, "cannot write " + path);
  }
}

std::string FormatBound(const Rational& value) {
  const std::string exact = value.ToExactDecimal();
  if (!exact.empty()) {
    const auto dot = exact.find('.');
    if (dot == std::string::npos) return exact + ".0";
    if (exact.size() - dot - 1 <= 2) return exact;
  }
  return value.ToDecimal(2);
}

std::string ExportTrace(const SearchTrace& trace) {
  std::ostringstream out;
  out << "digraph search_tree {\n";
  out << "  graph [label=\"" << Escape(StrategyTitle(trace.strategy))
      << "\", labelloc=t];\n";
  out << "  node [shape=record, fontname=\"Helvetica\"];\n";
  for (const Node& node : trace.nodes) {
    const std::string ub =
        node.relaxed ? FormatBound(node.relaxed->upper_bound) : "infeasible";
    const std::string lb =
        node.heuristic ? FormatBound(node.heuristic->value) : "-";
    out << "  n" << node.id << " [label=\"{{" << node.id << "|" << ub
        << "}|{" << Cardinality(node.fixings.FreeCount()) << "|" << lb
        << "}}\", tooltip=\"UB="
        << (node.relaxed ? node.relaxed->upper_bound.ToString() : "none")
        << " LB=" << (node.heuristic ? node.heuristic->value.ToString() : "none")
        << " fate=" << NodeFateName(node.fate) << "\", style="
        << NodeStyle(node.fate) << "];\n";
  }
  for (const Node& node : trace.nodes) {
    if (!node.parent_id) continue;
    out << "  n" << *node.parent_id << " -> n" << node.id << " [label=\""
        << Escape(node.branch_label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string ExportTrace(const SolveReport& report) {
  if (!report.trace) {
    throw KnapsackError(ErrorCode::kNoTrace,
                        "solve was run without trace recording");
  }
  return ExportTrace(*report.trace);
}

}  // namespace cascade_knapsack
