// Copyright 2026 The kpell Authors
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

#ifndef KPELL_EXPORT_HPP_
#define KPELL_EXPORT_HPP_

#include <string>

#include "kpell/graph.hpp"

namespace kpell {

// Nodes are named by vertex index and labeled by their word. Edges are
// written once each, ordered by (smaller endpoint, larger endpoint).
std::string to_dot(const LabeledGraph& g);
std::string to_graphml(const LabeledGraph& g);
// {"family":"kpell","n":..,"k":..,"vertices":[..],"edges":[[i,j],..]}, or
// {"family":"fibonacci","m":..,...} for Fibonacci cubes.
std::string to_adjacency_json(const LabeledGraph& g);

}  // namespace kpell

#endif  // KPELL_EXPORT_HPP_
