// Copyright 2026 The critset Authors
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

// Plain-text graph documents.
//
//   # comment (anywhere; runs to end of line)
//   graph <name> <n> <m>
//   vertices: <v> ...      optional, fixes the id order of named vertices
//   side A: <v> ...        optional declared bipartition
//   <u> <v>                exactly m edge lines
//
// When every vertex token in the file is a non-negative integer the file is
// numeric and tokens are ids below n. Otherwise tokens are names, numbered
// in order of first appearance; vertices never mentioned are called _<id>.

#ifndef CRITSET_FORMAT_HPP_
#define CRITSET_FORMAT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "critset/graph.hpp"
#include "critset/random.hpp"

namespace critset {

struct GraphDocument {
  std::string name;
  std::size_t n = 0;
  /// Edges in file order.
  std::vector<Edge> edges;
  /// Declared side A, ascending ids.
  std::optional<std::vector<VertexId>> side_a;
  /// Empty for numeric documents, otherwise one name per id.
  std::vector<std::string> names;

  Graph graph() const;
  /// Throws GraphError if the declared side does not 2-colour the edges.
  std::optional<Bipartition> declared_bipartition() const;
  /// Name of v, or its decimal id for numeric documents.
  std::string vertex_name(VertexId v) const;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

class ParseError : public std::runtime_error {
 public:
  /// what() is "line N: message", or "source:N: message" with a source.
  ParseError(std::size_t line, const std::string& message, const std::string& source = {});
  /// 1-based; 0 when the problem is not tied to a line.
  std::size_t line() const { return line_; }
  /// The message without the line prefix.
  const std::string& message() const { return message_; }
  /// File path for load_graph() errors, otherwise empty.
  const std::string& source() const { return source_; }

 private:
  std::size_t line_;
  std::string message_;
  std::string source_;
};

GraphDocument parse_graph(std::string_view text);

/// Inverse of parse_graph: parse_graph(render_graph(d)) == d for any valid d.
std::string render_graph(const GraphDocument& doc);

/// Throws std::runtime_error when the file cannot be read.
GraphDocument load_graph(const std::string& path);

/// Numeric document for a graph; edges in Graph::edges() order.
GraphDocument document_from_graph(std::string name, const Graph& g,
                                  const std::optional<VertexSet>& side_a = std::nullopt);

/// random_graph() as a numeric document named after its parameters.
GraphDocument generate(const GeneratorParams& params, std::uint64_t seed, std::uint64_t index = 0);

}  // namespace critset

#endif  // CRITSET_FORMAT_HPP_
