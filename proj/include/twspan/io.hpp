#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twspan/abstract_graph.hpp"
#include "twspan/geo_graph.hpp"
#include "twspan/geometry.hpp"
#include "twspan/treewidth.hpp"

namespace twspan::io {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest representation that round-trips the double exactly.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// ── point-set file: "d n" header, then n whitespace-separated rows ──

inline void write_point_set(std::ostream& out, const PointSet& ps) {
  out << ps.dim() << ' ' << ps.size() << '\n';
  for (const Point& p : ps.points()) {
    for (std::size_t i = 0; i < ps.dim(); ++i) {
      if (i > 0) out << ' ';
      out << format_double(p[i]);
    }
    out << '\n';
  }
}

inline PointSet read_point_set(std::istream& in) {
  std::size_t d = 0, n = 0;
  if (!(in >> d >> n)) throw IoError("point-set file: bad header");
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> coords(d);
    for (double& c : coords) {
      if (!(in >> c)) throw IoError("point-set file: truncated row");
    }
    pts.push_back(Point{std::move(coords)});
  }
  return PointSet(d, std::move(pts));
}

inline void save_point_set(const std::string& path, const PointSet& ps) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  write_point_set(out, ps);
  if (!out) throw IoError("write failed: " + path);
}

inline PointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  return read_point_set(in);
}

// ── graph file: {"dim", "points", "edges"} with 0-based sorted edges ──

inline nlohmann::json geo_graph_to_json(const GeoGraph& g) {
  nlohmann::json j;
  j["dim"] = g.points().dim();
  auto& pts = j["points"] = nlohmann::json::array();
  for (const Point& p : g.points().points()) pts.push_back(p.coords);
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  return j;
}

inline GeoGraph geo_graph_from_json(const nlohmann::json& j) {
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<Point> pts;
  for (const auto& row : j.at("points")) {
    pts.push_back(Point{row.get<std::vector<double>>()});
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>()});
  }
  return GeoGraph(share(PointSet(dim, std::move(pts))), std::move(edges));
}

inline void save_geo_graph(const std::string& path, const GeoGraph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << geo_graph_to_json(g).dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

inline GeoGraph load_geo_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  nlohmann::json j;
  try {
    in >> j;
    return geo_graph_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("graph file " + path + ": " + e.what());
  }
}

// ── abstract graph file: {"n", "edges"} ──

inline nlohmann::json abstract_graph_to_json(const AbstractGraph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  return j;
}

inline AbstractGraph abstract_graph_from_json(const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>()});
  }
  return AbstractGraph::from_edges(j.at("n").get<std::uint32_t>(), edges);
}

// ── tree decomposition file: {"bags", "tree_edges"} ──

inline nlohmann::json tree_decomposition_to_json(const TreeDecomposition& td) {
  nlohmann::json j;
  j["bags"] = td.bags;
  auto& edges = j["tree_edges"] = nlohmann::json::array();
  for (const auto& e : td.tree_edges) edges.push_back({e.first, e.second});
  return j;
}

inline TreeDecomposition tree_decomposition_from_json(const nlohmann::json& j) {
  TreeDecomposition td;
  td.bags = j.at("bags").get<std::vector<std::vector<std::uint32_t>>>();
  for (const auto& e : j.at("tree_edges")) {
    td.tree_edges.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()});
  }
  return td;
}

}  // namespace twspan::io
