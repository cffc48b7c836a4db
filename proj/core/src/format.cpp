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

#include "critset/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace critset {

namespace {

std::string parse_error_text(const std::string& source, std::size_t line, const std::string& message) {
  if (source.empty()) return line ? "line " + std::to_string(line) + ": " + message : message;
  return line ? source + ":" + std::to_string(line) + ": " + message : source + ": " + message;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message, const std::string& source)
    : std::runtime_error(parse_error_text(source, line, message)),
      line_(line),
      message_(message),
      source_(source) {}

Graph GraphDocument::graph() const { return build_graph(n, edges); }

std::optional<Bipartition> GraphDocument::declared_bipartition() const {
  if (!side_a) return std::nullopt;
  return Bipartition::from_side_a(graph(), VertexSet::from_ids(n, *side_a));
}

std::string GraphDocument::vertex_name(VertexId v) const {
  return names.empty() ? std::to_string(v) : names.at(v);
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) l.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (eol == std::string_view::npos) break;
  }
  return out;
}

std::optional<std::size_t> to_count(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool valid_name(std::string_view s) {
  return !s.empty() && s.find_first_of(":#") == std::string_view::npos &&
         std::none_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

/// Assigns ids to vertex tokens in one of the two modes.
class Namer {
 public:
  Namer(bool numeric, std::size_t n) : numeric_(numeric), n_(n) {}

  VertexId id(std::string_view token, std::size_t line) {
    if (numeric_) {
      const auto v = to_count(token);
      if (!v || *v >= n_) {
        throw ParseError(line, "vertex " + std::string(token) + " is out of range for n=" + std::to_string(n_));
      }
      return static_cast<VertexId>(*v);
    }
    if (!valid_name(token)) throw ParseError(line, "invalid vertex name '" + std::string(token) + "'");
    const auto it = ids_.find(std::string(token));
    if (it != ids_.end()) return it->second;
    if (names_.size() >= n_) {
      throw ParseError(line, "more than n=" + std::to_string(n_) + " distinct vertices");
    }
    const auto v = static_cast<VertexId>(names_.size());
    ids_.emplace(std::string(token), v);
    names_.emplace_back(token);
    return v;
  }

  bool known(std::string_view token) const { return ids_.count(std::string(token)) != 0; }

  std::vector<std::string> finish() {
    if (numeric_) return {};
    for (std::size_t v = names_.size(); v < n_; ++v) {
      std::string name = "_" + std::to_string(v);
      if (ids_.count(name)) throw ParseError(0, "vertex name " + name + " clashes with an unnamed vertex");
      names_.push_back(std::move(name));
    }
    return std::move(names_);
  }

 private:
  bool numeric_;
  std::size_t n_;
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> names_;
};

bool is_side_line(const Line& l) { return l.tokens.size() >= 2 && l.tokens[0] == "side" && l.tokens[1] == "A:"; }
bool is_vertices_line(const Line& l) { return l.tokens[0] == "vertices:"; }

}  // namespace

GraphDocument parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty document: expected 'graph <name> <n> <m>'");
  const Line& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[0] != "graph") {
    throw ParseError(header.number, "expected 'graph <name> <n> <m>'");
  }
  GraphDocument doc;
  doc.name = std::string(header.tokens[1]);
  if (!valid_name(doc.name)) throw ParseError(header.number, "invalid graph name '" + doc.name + "'");
  const auto n = to_count(header.tokens[2]);
  const auto m = to_count(header.tokens[3]);
  if (!n) throw ParseError(header.number, "vertex count is not a non-negative integer");
  if (!m) throw ParseError(header.number, "edge count is not a non-negative integer");
  if (*n > std::numeric_limits<VertexId>::max()) throw ParseError(header.number, "vertex count too large");
  doc.n = *n;

  const Line* vertices = nullptr;
  const Line* side = nullptr;
  std::vector<const Line*> edge_lines;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (is_vertices_line(l)) {
      if (vertices) throw ParseError(l.number, "second 'vertices:' line");
      if (side || !edge_lines.empty()) throw ParseError(l.number, "'vertices:' must precede the side line and edges");
      vertices = &l;
    } else if (is_side_line(l)) {
      if (side) throw ParseError(l.number, "second 'side A:' line");
      if (!edge_lines.empty()) throw ParseError(l.number, "'side A:' must precede the edges");
      side = &l;
    } else if (l.tokens.size() != 2) {
      throw ParseError(l.number, "expected an edge 'u v'");
    } else {
      edge_lines.push_back(&l);
    }
  }

  bool numeric = vertices == nullptr;
  if (numeric && side) {
    for (std::size_t t = 2; t < side->tokens.size(); ++t) numeric = numeric && to_count(side->tokens[t]).has_value();
  }
  for (const Line* l : edge_lines) {
    numeric = numeric && to_count(l->tokens[0]).has_value() && to_count(l->tokens[1]).has_value();
  }

  Namer namer(numeric, doc.n);
  if (vertices) {
    for (std::size_t t = 1; t < vertices->tokens.size(); ++t) {
      if (namer.known(vertices->tokens[t])) {
        throw ParseError(vertices->number, "vertex " + std::string(vertices->tokens[t]) + " listed twice");
      }
      namer.id(vertices->tokens[t], vertices->number);
    }
  }
  std::set<VertexId> side_ids;
  if (side) {
    for (std::size_t t = 2; t < side->tokens.size(); ++t) {
      const VertexId v = namer.id(side->tokens[t], side->number);
      if (!side_ids.insert(v).second) {
        throw ParseError(side->number, "vertex " + std::string(side->tokens[t]) + " listed twice on side A");
      }
    }
  }

  std::map<std::pair<VertexId, VertexId>, std::size_t> seen;
  for (const Line* l : edge_lines) {
    const VertexId u = namer.id(l->tokens[0], l->number);
    const VertexId v = namer.id(l->tokens[1], l->number);
    if (u == v) throw ParseError(l->number, "self-loop on " + std::string(l->tokens[0]));
    const auto key = std::minmax(u, v);
    const auto [it, fresh] = seen.emplace(key, l->number);
    if (!fresh) {
      throw ParseError(l->number, "duplicate edge " + std::string(l->tokens[0]) + " " + std::string(l->tokens[1]) +
                                      " (first on line " + std::to_string(it->second) + ")");
    }
    if (side && side_ids.count(u) == side_ids.count(v)) {
      throw ParseError(l->number, "edge " + std::string(l->tokens[0]) + " " + std::string(l->tokens[1]) +
                                      " has both endpoints on side " + (side_ids.count(u) ? "A" : "B"));
    }
    doc.edges.push_back({u, v});
  }
  if (doc.edges.size() != *m) {
    throw ParseError(header.number, "header declares " + std::to_string(*m) + " edges but " +
                                        std::to_string(doc.edges.size()) + " follow");
  }
  doc.names = namer.finish();
  if (side) doc.side_a = std::vector<VertexId>(side_ids.begin(), side_ids.end());
  return doc;
}

namespace {

/// True if reading the rendered side line and edges reproduces the ids of
/// a named document without a 'vertices:' line.
bool first_appearance_matches(const GraphDocument& doc) {
  std::vector<std::string_view> tokens;
  if (doc.side_a) {
    for (VertexId v : *doc.side_a) tokens.push_back(doc.names[v]);
  }
  for (const Edge& e : doc.edges) {
    tokens.push_back(doc.names[e.u]);
    tokens.push_back(doc.names[e.v]);
  }
  if (!tokens.empty() && std::all_of(tokens.begin(), tokens.end(), [](auto t) { return to_count(t).has_value(); })) {
    return false;  // would be read as numeric
  }
  std::vector<bool> seen(doc.n, false);
  VertexId next = 0;
  auto visit = [&](VertexId v) {
    if (seen[v]) return true;
    seen[v] = true;
    return v == next++;
  };
  if (doc.side_a) {
    for (VertexId v : *doc.side_a) {
      if (!visit(v)) return false;
    }
  }
  for (const Edge& e : doc.edges) {
    if (!visit(e.u) || !visit(e.v)) return false;
  }
  for (VertexId v = next; v < doc.n; ++v) {
    if (doc.names[v] != "_" + std::to_string(v)) return false;
  }
  return true;
}

}  // namespace

std::string render_graph(const GraphDocument& doc) {
  if (!valid_name(doc.name)) throw std::invalid_argument("invalid graph name '" + doc.name + "'");
  if (!doc.names.empty()) {
    if (doc.names.size() != doc.n) throw std::invalid_argument("name table size differs from n");
    for (const auto& nm : doc.names) {
      if (!valid_name(nm)) throw std::invalid_argument("invalid vertex name '" + nm + "'");
    }
  }
  std::ostringstream os;
  os << "graph " << doc.name << ' ' << doc.n << ' ' << doc.edges.size() << '\n';
  if (!doc.names.empty() && !first_appearance_matches(doc)) {
    os << "vertices:";
    for (const auto& nm : doc.names) os << ' ' << nm;
    os << '\n';
  }
  if (doc.side_a) {
    os << "side A:";
    for (VertexId v : *doc.side_a) os << ' ' << doc.vertex_name(v);
    os << '\n';
  }
  for (const Edge& e : doc.edges) os << doc.vertex_name(e.u) << ' ' << doc.vertex_name(e.v) << '\n';
  return os.str();
}

GraphDocument load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path);
  }
}

GraphDocument document_from_graph(std::string name, const Graph& g, const std::optional<VertexSet>& side_a) {
  GraphDocument doc;
  doc.name = std::move(name);
  doc.n = g.order();
  doc.edges = g.edges();
  if (side_a) doc.side_a = side_a->ids();
  return doc;
}

GraphDocument generate(const GeneratorParams& params, std::uint64_t seed, std::uint64_t index) {
  const RandomGraph rg = random_graph(params, seed, index);
  char p[32];
  const auto res = std::to_chars(p, p + sizeof p, params.p);
  std::string name = params.kind == GraphKind::kBipartite
                         ? "bipartite-" + std::to_string(params.n_a) + "x" + std::to_string(params.n_b)
                         : "general-" + std::to_string(params.n);
  name += "-p" + std::string(p, res.ptr) + "-seed" + std::to_string(seed);
  if (index != 0) name += "-i" + std::to_string(index);
  return document_from_graph(std::move(name), rg.graph, rg.side_a);
}

}  // namespace critset
