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

#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "spantree/graph.hpp"

namespace spantree {

/// Decodes one graph6 line (no trailing newline). Accepts the one-byte order
/// header and the 126-prefixed three-byte header up to order 64.
Graph parse_graph6(std::string_view line);

/// Encodes the stored labelling; order must be <= 62.
std::string serialize_graph6(const Graph& g);

/// Parses "n m" followed by m lines "u v". Duplicate edges collapse.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// Error from a graph6 stream, carrying the 1-based offending line.
class StreamError : public Error {
 public:
  StreamError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Lazily decodes one graph6 record per line. Blank lines and a leading
/// ">>graph6<<" marker are skipped. A malformed line throws StreamError and
/// leaves the stream finished.
class Graph6Stream {
 public:
  explicit Graph6Stream(std::istream& in) : in_(&in) {}

  std::optional<Graph> next();
  std::size_t line() const { return line_; }

 private:
  std::istream* in_;
  std::size_t line_ = 0;
  bool done_ = false;
};

}  // namespace spantree
