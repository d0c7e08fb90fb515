#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "twspan/io.hpp"
#include "twspan/pointgen.hpp"
#include "twspan/tree_tools.hpp"
#include "twspan/treewidth.hpp"

using namespace twspan;

TEST_CASE("doubles survive the round trip") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 12345.678901234567, 0.0}) {
    CHECK(std::stod(io::format_double(v)) == v);
  }
}

TEST_CASE("point-set file round trip") {
  const PointSet ps = random_points(3, 75, 9, 1.0);
  std::stringstream buf;
  io::write_point_set(buf, ps);
  const PointSet back = io::read_point_set(buf);
  CHECK(back == ps);

  std::stringstream bad("2");
  CHECK_THROWS_AS(io::read_point_set(bad), io::IoError);
  std::stringstream truncated("2 3\n0 0\n1 1\n");
  CHECK_THROWS_AS(io::read_point_set(truncated), io::IoError);
}

TEST_CASE("graph json round trip") {
  auto ps = share(random_points(2, 30, 10, 1.0));
  const GeoGraph g = emst(ps);
  const GeoGraph back = io::geo_graph_from_json(io::geo_graph_to_json(g));
  CHECK(back.points() == g.points());
  CHECK(back.edges() == g.edges());

  const auto j = io::geo_graph_to_json(g);
  for (const auto& e : j.at("edges")) {
    CHECK(e.at(0).get<VertexId>() < e.at(1).get<VertexId>());
  }
}

TEST_CASE("abstract graph json round trip") {
  const AbstractGraph g = grid_graph(2, 4);
  const AbstractGraph back = io::abstract_graph_from_json(io::abstract_graph_to_json(g));
  CHECK(back == g);
}

TEST_CASE("tree decomposition json round trip") {
  const AbstractGraph g = grid_graph(2, 3);
  const TreewidthResult tw = exact_treewidth(g);
  const TreeDecomposition back =
      io::tree_decomposition_from_json(io::tree_decomposition_to_json(tw.decomposition));
  CHECK(back.bags == tw.decomposition.bags);
  CHECK(back.tree_edges == tw.decomposition.tree_edges);
  CHECK(validate_decomposition(g, back).valid);
}

TEST_CASE("file io errors") {
  CHECK_THROWS_AS(io::load_point_set("/nonexistent/path/points.txt"), io::IoError);
  CHECK_THROWS_AS(io::load_geo_graph("/nonexistent/path/graph.json"), io::IoError);

  const auto dir = std::filesystem::temp_directory_path() / "twspan_io_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.json";
  {
    std::ofstream out(bad);
    out << "{ not json";
  }
  CHECK_THROWS_AS(io::load_geo_graph(bad.string()), io::IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("save and load graph files") {
  const auto dir = std::filesystem::temp_directory_path() / "twspan_io_test2";
  std::filesystem::create_directories(dir);
  auto ps = share(random_points(2, 12, 11, 1.0));
  const GeoGraph g = emst(ps);
  const auto path = (dir / "g.json").string();
  io::save_geo_graph(path, g);
  const GeoGraph back = io::load_geo_graph(path);
  CHECK(back.edges() == g.edges());
  CHECK(back.points() == g.points());
  std::filesystem::remove_all(dir);
}
