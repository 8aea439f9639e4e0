// Copyright 2026 The spantree Authors
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

#include "spantree/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace spantree {

namespace {

constexpr int kBias = 63;
constexpr int kMaxPrintable = 126;

int sextet(char c) {
  const int b = static_cast<unsigned char>(c);
  if (b < kBias || b > kMaxPrintable) {
    throw Error("graph6 byte " + std::to_string(b) + " outside 63..126");
  }
  return b - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw Error("empty graph6 record");
  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(line[0]) == kMaxPrintable) {
    if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == kMaxPrintable) {
      throw Error("graph6 order header for n > 258047 is not supported");
    }
    if (line.size() < 4) throw Error("truncated graph6 order header");
    n = (sextet(line[1]) << 12) | (sextet(line[2]) << 6) | sextet(line[3]);
    pos = 4;
  } else {
    n = sextet(line[0]);
    pos = 1;
  }
  if (n > kMaxOrder) throw Error("graph6 order " + std::to_string(n) + " exceeds 64");
  if (n == 0) throw Error("graph6 order 0 is not supported");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos < bytes) throw Error("truncated graph6 bit stream");
  if (line.size() - pos > bytes) throw Error("trailing bytes after graph6 bit stream");

  std::vector<Mask> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = sextet(line[pos + k / 6]);
      if ((value >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  // Padding bits must be zero and every byte must be in range.
  for (std::size_t b = 0; b < bytes; ++b) sextet(line[pos + b]);
  if (bits % 6 != 0) {
    const int last = sextet(line[pos + bytes - 1]);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Error("nonzero graph6 padding bits");
  }
  return Graph(n, rows);
}

std::string serialize_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw Error("graph6 single-byte header supports order <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

std::vector<long> integers(std::string_view line, std::size_t lineno) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    const std::size_t used = static_cast<std::size_t>(ptr - (line.data() + i));
    if (ec != std::errc{} || used == 0 ||
        (i + used < line.size() && line[i + used] != ' ' && line[i + used] != '\t')) {
      throw Error("malformed edge-list line " + std::to_string(lineno));
    }
    out.push_back(value);
    i += used;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t idx = 0;
  while (idx < lines.size() && blank(lines[idx])) ++idx;
  if (idx == lines.size()) throw Error("empty edge list");
  auto header = integers(lines[idx], idx + 1);
  if (header.size() != 2) throw Error("edge-list header must be \"n m\"");
  const long n = header[0];
  const long m = header[1];
  if (n < 1 || n > kMaxOrder) throw Error("edge-list order outside 1..64");
  if (m < 0) throw Error("negative edge count");
  std::vector<Edge> edges;
  ++idx;
  for (; idx < lines.size(); ++idx) {
    if (blank(lines[idx])) continue;
    auto uv = integers(lines[idx], idx + 1);
    if (uv.size() != 2) throw Error("malformed edge-list line " + std::to_string(idx + 1));
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n) {
      throw Error("edge endpoint out of range on line " + std::to_string(idx + 1));
    }
    if (uv[0] == uv[1]) throw Error("loop on line " + std::to_string(idx + 1));
    edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  Graph g = Graph::from_edges(static_cast<int>(n), edges);
  // m may count either the listed lines or the distinct edges.
  if (static_cast<long>(edges.size()) != m && g.edge_count() != m) {
    throw Error("edge-list header announces " + std::to_string(m) + " edges, found " +
                std::to_string(edges.size()));
  }
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream os;
  auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

std::optional<Graph> Graph6Stream::next() {
  if (done_) return std::nullopt;
  std::string text;
  while (std::getline(*in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::string_view view = text;
    if (line_ == 1 && view.starts_with(">>graph6<<")) view.remove_prefix(10);
    if (view.empty()) continue;
    try {
      return parse_graph6(view);
    } catch (const Error& e) {
      done_ = true;
      throw StreamError(line_, e.what());
    }
  }
  done_ = true;
  return std::nullopt;
}

}  // namespace spantree
