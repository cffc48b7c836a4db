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


#ifndef CRITSET_TESTS_TEST_UTIL_HPP_
#define CRITSET_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "critset/format.hpp"
#include "critset/vertex_set.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(CRITSET_FIXTURE_DIR) + "/" + name + ".graph";
}

inline critset::GraphDocument fixture(const std::string& name) {
  return critset::load_graph(fixture_path(name));
}

inline critset::VertexId id_of(const critset::GraphDocument& doc, const std::string& name) {
  const auto it = std::find(doc.names.begin(), doc.names.end(), name);
  if (it == doc.names.end()) throw std::invalid_argument("no vertex " + name + " in " + doc.name);
  return static_cast<critset::VertexId>(it - doc.names.begin());
}

inline critset::VertexSet named(const critset::GraphDocument& doc, std::initializer_list<const char*> names) {
  critset::VertexSet s(doc.n);
  for (const char* nm : names) s.insert(id_of(doc, nm));
  return s;
}

/// Every vertex except the listed ones.
inline critset::VertexSet all_but(const critset::GraphDocument& doc, std::initializer_list<const char*> names) {
  return named(doc, names).complement();
}

}  // namespace testutil

#endif  // CRITSET_TESTS_TEST_UTIL_HPP_
