#include "shortness/io.hpp"

#include <fstream>
#include <sstream>

#include "shortness/errors.hpp"

namespace shortness::io {

namespace {

Json rotation_json(const std::vector<std::vector<Vertex>>& rot) {
  Json arr = Json::array();
  for (const auto& r : rot) arr.push_back(r);
  return arr;
}

void check_colors(const std::vector<std::string>& colors, int n) {
  if (!colors.empty() && static_cast<int>(colors.size()) != n)
    throw Error(ErrorKind::InvalidInput, "color count does not match vertex count");
}

}  // namespace

Json to_json(const Triangulation& g, const std::vector<std::string>& colors) {
  check_colors(colors, g.order());
  Json j;
  j["n"] = g.order();
  j["rotation"] = rotation_json(g.rotations());
  const Face& o = g.outer_face();
  j["outer_face"] = Json::array({o[0], o[1], o[2]});
  j["labels"] = g.graph().labels();
  j["colors"] = colors;
  return j;
}

Json to_json(const Graph& g, const std::vector<std::string>& colors) {
  check_colors(colors, g.order());
  std::vector<std::vector<Vertex>> adj;
  adj.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) adj.emplace_back(g.neighbors(v).begin(), g.neighbors(v).end());
  Json j;
  j["n"] = g.order();
  j["rotation"] = rotation_json(adj);
  j["outer_face"] = Json::array();
  j["labels"] = g.labels();
  j["colors"] = colors;
  return j;
}

GraphDocument from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto rotation = j.at("rotation").get<std::vector<std::vector<Vertex>>>();
    if (static_cast<int>(rotation.size()) != n) throw Error(ErrorKind::InvalidInput, "rotation length differs from n");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    GraphDocument doc;
    if (j.contains("colors")) doc.colors = j.at("colors").get<std::vector<std::string>>();
    check_colors(doc.colors, n);
    const auto outer = j.contains("outer_face") ? j.at("outer_face").get<std::vector<Vertex>>() : std::vector<Vertex>{};
    if (outer.empty()) {
      doc.graph = Graph::from_adjacency(std::move(rotation), std::move(labels));
    } else {
      if (outer.size() != 3) throw Error(ErrorKind::InvalidInput, "outer_face must have 3 vertices");
      doc.embedding = Triangulation::from_rotation(std::move(rotation), {outer[0], outer[1], outer[2]}, std::move(labels));
      doc.graph = doc.embedding->graph();
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed graph JSON: ") + e.what());
  }
}

Triangulation triangulation_from_json(const Json& j, std::vector<std::string>* colors) {
  auto doc = from_json(j);
  if (!doc.embedding) throw Error(ErrorKind::InvalidInput, "graph JSON carries no embedding (empty outer_face)");
  if (colors) *colors = std::move(doc.colors);
  return std::move(*doc.embedding);
}

std::string to_dot(const Graph& g, const std::vector<std::string>& colors) {
  check_colors(colors, g.order());
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v) << "\"";
    if (!colors.empty()) out << ", role=\"" << colors[static_cast<std::size_t>(v)] << "\"";
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<Edge> edges;
  int n = 0;
  Vertex u, v;
  while (in >> u >> v) {
    edges.emplace_back(u, v);
    n = std::max({n, u + 1, v + 1});
  }
  if (!in.eof()) throw Error(ErrorKind::InvalidInput, "malformed edge list");
  return Graph::from_edges(n, edges);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  out << content;
}

GraphDocument load_graph(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("'") + path + "' is not JSON: " + e.what());
  }
  return from_json(j);
}

}  // namespace shortness::io
