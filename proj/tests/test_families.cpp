#include <doctest.h>

#include <stdexcept>

#include "sgc/cover.hpp"
#include "sgc/families.hpp"
#include "sgc/generators.hpp"
#include "sgc/invariants.hpp"

using namespace sgc;

TEST_CASE("no-SGC family layout") {
  auto f1 = no_sgc_family(1);
  CHECK(f1.graph.order() == 13);
  CHECK(f1.graph.size() == 12);
  CHECK(no_sgc_family(2).graph.order() == 30);
  CHECK(no_sgc_family_order(3) == 53);

  REQUIRE(f1.copies.size() == 3);
  CHECK(f1.s_vertices == std::vector<Vertex>{0});
  CHECK(f1.copies[0].b_side == std::vector<Vertex>{1, 2, 3});
  CHECK(f1.copies[0].a_side == std::vector<Vertex>{4});
  CHECK(f1.copies[0].selected == std::vector<Vertex>{1});
  CHECK(f1.copies[2].selected == std::vector<Vertex>{9});

  for (int m = 1; m <= 3; ++m) {
    auto f = no_sgc_family(m);
    CHECK_FALSE(check_no_sgc_family(f).has_value());
    CHECK(f.graph.order() == m + (m + 2) * (3 * m + 1));
    CHECK(is_connected(f.graph));
  }
  CHECK_THROWS_AS(no_sgc_family(0), std::invalid_argument);
}

TEST_CASE("structural checker rejects tampered families") {
  auto f = no_sgc_family(2);
  auto extra = f.graph.edges();
  extra.push_back(make_edge(f.copies[0].a_side[0], f.s_vertices[0]));
  auto tampered = f;
  tampered.graph = Graph(f.graph.order(), extra);
  CHECK(check_no_sgc_family(tampered).has_value());

  auto bad_select = f;
  bad_select.copies[1].selected[0] = f.copies[1].a_side[0];
  CHECK(check_no_sgc_family(bad_select).has_value());

  auto short_s = f;
  short_s.s_vertices.pop_back();
  CHECK(check_no_sgc_family(short_s).has_value());
}

TEST_CASE("no-SGC family invariants") {
  for (int m = 1; m <= 2; ++m) {
    auto f = no_sgc_family(m);
    auto a = independence_number(f.graph);
    CHECK(a.exhaustive);
    CHECK(a.alpha == (2 * m + 1) * (m + 2));
    CHECK(vertex_connectivity(f.graph).kappa == m);
  }
}

TEST_CASE("each block needs m+1 disjoint paths") {
  for (int m = 1; m <= 2; ++m) {
    auto pc = path_cover_number(complete_bipartite(2 * m + 1, m).graph);
    REQUIRE(pc.value);
    CHECK(*pc.value >= m + 1);
  }
  CHECK(*path_cover_number(complete_bipartite(5, 2).graph).value == 3);
}

TEST_CASE("K_{m,2m} counterexample") {
  CHECK(path_cover_counterexample(2).graph == complete_bipartite(2, 4).graph);
  auto k612 = path_cover_counterexample(6);
  CHECK(k612.graph.order() == 18);
  CHECK(k612.parts.side_a.size() == 6);
  CHECK(path_cover_counterexample(1).graph.size() == 2);
  CHECK_THROWS_AS(path_cover_counterexample(0), std::invalid_argument);

  for (int m : {1, 2, 3, 6}) {
    auto g = path_cover_counterexample(m).graph;
    CHECK(independence_number(g).alpha == 2 * m);
    CHECK(vertex_connectivity(g).kappa == m);
  }
}
