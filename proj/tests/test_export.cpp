#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "cayconn/errors.hpp"
#include "cayconn/export.hpp"
#include "fixtures.hpp"

using namespace cayconn;
using namespace testing_fixtures;

TEST_CASE("graph6 against networkx reference strings") {
  CHECK(to_graph6(fixtures::complete(3)) == "Bw\n");
  CHECK(to_graph6(fixtures::cycle(4)) == "Cl\n");
  const std::vector<std::pair<Vertex, Vertex>> path{{0, 1}, {1, 2}, {2, 3}};
  CHECK(to_graph6(Graph::from_edges(4, path)) == "Ch\n");
  CHECK(to_graph6(mb(4).graph()) == "WpO[ACACGA?bG?CO_CQ?`?AOG?WOC?K?C?Ga_@?G@?QC??b\n");
}

TEST_CASE("graph6 capacity") {
  CHECK_THROWS_AS(to_graph6(mb(5).graph()), CapacityError);
  CHECK_NOTHROW(to_graph6(fixtures::cycle(62)));
  CHECK_THROWS_AS(to_graph6(fixtures::cycle(63)), CapacityError);
}

TEST_CASE("DOT output") {
  const auto dot = to_dot(mb(4), "mb:4");
  CHECK(dot.rfind("graph \"mb:4\" {\n", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 24 + 48 + 1);
  CHECK(dot.find("0 [label=\"1234\"];") != std::string::npos);
  CHECK(dot.find("23 [label=\"4321\"];") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(to_dot(mb(4), "mb:4") == dot);
}

TEST_CASE("edge list output") {
  const auto text = to_edge_list(ug(5));
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n=5 order=120 degree=5");
  std::size_t lines = 0;
  Vertex u = 0;
  Vertex v = 0;
  while (in >> u >> v) {
    CHECK(u < v);
    CHECK(v < 120);
    ++lines;
  }
  CHECK(lines == 300);
}
