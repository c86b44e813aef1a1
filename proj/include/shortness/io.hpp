#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "shortness/graph.hpp"

namespace shortness::io {

using Json = nlohmann::ordered_json;

/// {"n", "rotation", "outer_face", "labels", "colors"} in that order.
Json to_json(const Triangulation& g, const std::vector<std::string>& colors = {});
/// Plain graphs use sorted neighbor lists as "rotation" and an empty outer face.
Json to_json(const Graph& g, const std::vector<std::string>& colors = {});

/// Either an embedded triangulation or a plain graph, as read from JSON.
struct GraphDocument {
  Graph graph;
  std::optional<Triangulation> embedding;
  std::vector<std::string> colors;
};

GraphDocument from_json(const Json& j);
Triangulation triangulation_from_json(const Json& j, std::vector<std::string>* colors = nullptr);

std::string to_dot(const Graph& g, const std::vector<std::string>& colors = {});
/// One "u v" per line, u < v, lexicographic order.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
GraphDocument load_graph(const std::string& path);

}  // namespace shortness::io
