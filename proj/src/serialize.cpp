#include "sgc/serialize.hpp"

namespace sgc {

Json to_json(const SpanningTree& t) {
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back({e.u, e.v});
  return {{"n", t.order}, {"edges", std::move(edges)}};
}

Json to_json(const CaterpillarCertificate& c) {
  return {{"n", c.tree.order},
          {"tree_edges", to_json(c.tree)["edges"]},
          {"spine", c.spine},
          {"max_degree", c.tree.max_degree()},
          {"branch_vertices", branch_profile(c.tree).branch_vertices}};
}

Json to_json(const PathCover& c) { return {{"paths", c.paths}}; }

Json to_json(const CycleCover& c) { return {{"cycles", c.cycles}}; }

Json to_json(const Fan& f) { return {{"origin", f.origin}, {"paths", f.paths}}; }

Json to_json(const CycleWitness& c) { return {{"cycle", c.cycle}}; }

Json to_json(const Bipartition& p) { return {{"side_a", p.side_a}, {"side_b", p.side_b}}; }

SpanningTree tree_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
  return make_tree(j.at("n").get<int>(), std::move(edges));
}

CaterpillarCertificate certificate_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("tree_edges")) edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
  return {make_tree(j.at("n").get<int>(), std::move(edges)), j.at("spine").get<std::vector<Vertex>>()};
}

}  // namespace sgc
