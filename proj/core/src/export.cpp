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

#include "kpell/export.hpp"

#include <sstream>

#include "json.hpp"

namespace kpell {
namespace {

std::string graph_name(const LabeledGraph& g) {
  if (g.family() == Family::kPell) return "Pi_" + std::to_string(g.length()) + "_" + std::to_string(g.k());
  return "Gamma_" + std::to_string(g.length());
}

}  // namespace

std::string to_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph " << graph_name(g) << " {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (v < u) out << "  " << v << " -- " << u << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_graphml(const LabeledGraph& g) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <graph id=\"" << graph_name(g) << "\" edgedefault=\"undirected\">\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "    <node id=\"n" << v << "\"><data key=\"label\">" << g.label(v) << "</data></node>\n";
  }
  std::uint64_t e = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (v < u) out << "    <edge id=\"e" << e++ << "\" source=\"n" << v << "\" target=\"n" << u << "\"/>\n";
    }
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string to_adjacency_json(const LabeledGraph& g) {
  nlohmann::ordered_json j;
  if (g.family() == Family::kPell) {
    j["family"] = "kpell";
    j["n"] = g.length();
    j["k"] = g.k();
  } else {
    j["family"] = "fibonacci";
    j["m"] = g.length();
  }
  auto& vertices = j["vertices"] = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < g.num_vertices(); ++v) vertices.push_back(g.label(v));
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (v < u) edges.push_back({v, u});
    }
  }
  return j.dump() + "\n";
}

}  // namespace kpell
