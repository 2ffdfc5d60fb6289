#include "doctest.h"

#include <random>

#include "generators.hpp"
#include "gsparse/error.hpp"
#include "gsparse/graph.hpp"
#include "gsparse/pipeline.hpp"

using namespace gsparse;
using gsparse::testing::barabasi_albert;
using gsparse::testing::complete_graph;
using gsparse::testing::erdos_renyi;
using gsparse::testing::star_graph;

namespace {

std::vector<Edge> as_vector(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

std::vector<NodeId> row(const AdjacencyList& adj, NodeId i) {
  const auto r = adj.neighbors(i);
  return {r.begin(), r.end()};
}

}  // namespace

TEST_CASE("canonicalize orients, deduplicates and drops self-loops") {
  const auto out = canonicalize(std::vector<Edge>{{0, 1}, {1, 0}, {2, 2}}, 3);
  CHECK(out.graph.num_nodes() == 3);
  CHECK(as_vector(out.graph) == std::vector<Edge>{{0, 1}});
  CHECK(out.stats.self_loops_dropped == 1);
  CHECK(out.stats.duplicates_collapsed == 1);
  CHECK(out.stats.raw_edges == 3);
}

TEST_CASE("canonicalize of no edges keeps the node count") {
  const auto out = canonicalize(std::vector<Edge>{}, 5);
  CHECK(out.graph.num_nodes() == 5);
  CHECK(out.graph.num_edges() == 0);
}

TEST_CASE("canonicalize sorts by (min, max)") {
  const auto out = canonicalize(std::vector<Edge>{{1, 0}, {0, 2}, {2, 0}}, 3);
  CHECK(as_vector(out.graph) == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("canonicalize names the out-of-range pair") {
  try {
    canonicalize(std::vector<Edge>{{0, 1}, {1, 7}}, 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kOutOfRange);
    CHECK(std::string(e.what()).find("(1, 7)") != std::string::npos);
  }
  CHECK_THROWS_AS(canonicalize(std::vector<NodeId>{0, 1}, std::vector<NodeId>{1}, 3), Error);
}

TEST_CASE("from_canonical rejects non-canonical lists") {
  CHECK_NOTHROW(Graph::from_canonical(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(Graph::from_canonical(3, {{1, 0}}), Error);
  CHECK_THROWS_AS(Graph::from_canonical(3, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(Graph::from_canonical(3, {{0, 2}, {0, 1}}), Error);
  CHECK_THROWS_AS(Graph::from_canonical(2, {{0, 2}}), Error);
}

TEST_CASE("to_adjacency materializes reverse edges") {
  const auto g = canonicalize(std::vector<Edge>{{0, 1}, {0, 2}}, 3).graph;
  const auto adj = to_adjacency(g);
  CHECK(row(adj, 0) == std::vector<NodeId>{1, 2});
  CHECK(row(adj, 1) == std::vector<NodeId>{0});
  CHECK(row(adj, 2) == std::vector<NodeId>{0});

  const auto empty = to_adjacency(Graph(3));
  CHECK(empty.num_nodes() == 3);
  for (NodeId i = 0; i < 3; ++i) CHECK(empty.degree(i) == 0);

  const auto path = to_adjacency(canonicalize(std::vector<Edge>{{0, 1}, {1, 2}}, 3).graph);
  CHECK(path.degree(0) == 1);
  CHECK(path.degree(1) == 2);
  CHECK(path.degree(2) == 1);
}

TEST_CASE("degree_index") {
  const auto star = degree_index(to_adjacency(star_graph(4)));
  CHECK(std::vector<NodeId>(star.degrees().begin(), star.degrees().end()) ==
        std::vector<NodeId>{4, 1, 1, 1, 1});

  const auto empty = degree_index(to_adjacency(Graph(4)));
  for (const NodeId d : empty.degrees()) CHECK(d == 0);

  const auto k4 = degree_index(to_adjacency(complete_graph(4)));
  for (const NodeId d : k4.degrees()) CHECK(d == 3);
}

TEST_CASE("adjacency invariants and round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const NodeId n = 1 + static_cast<NodeId>(rng() % 80);
    const Graph g = trial % 2 ? erdos_renyi(n, 0.1 + 0.4 * (trial % 3) / 2.0, rng())
                              : barabasi_albert(n, 1 + trial % 3, rng());
    const AdjacencyList adj = to_adjacency(g);

    CHECK(adj.directed_entries().size() == 2 * g.num_edges());
    EdgeId degree_sum = 0;
    for (NodeId i = 0; i < n; ++i) {
      const auto r = adj.neighbors(i);
      degree_sum += r.size();
      CHECK(std::adjacent_find(r.begin(), r.end(), std::greater_equal<>()) == r.end());
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        const NodeId j = r[pos];
        const auto back = adj.neighbors(j);
        CHECK(std::binary_search(back.begin(), back.end(), i));
        const EdgeId id = adj.edge_id_at(i, pos);
        REQUIRE(id < g.num_edges());
        CHECK(g.edges()[id] == Edge{std::min(i, j), std::max(i, j)});
        CHECK(adj.edge(id) == g.edges()[id]);
        CHECK(adj.edge_id(j, i) == id);
      }
    }
    CHECK(degree_sum == 2 * g.num_edges());

    const auto entries = adj.directed_entries();
    CHECK(canonicalize(entries, n).graph == g);
  }
}

TEST_CASE("construction is independent of the worker count") {
  const Graph g = barabasi_albert(3000, 4, 5);
  std::vector<Edge> shuffled(g.edges().begin(), g.edges().end());
  for (auto& e : shuffled) std::swap(e.u, e.v);
  std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937_64(3));

  std::vector<Graph> graphs;
  std::vector<std::vector<Edge>> entries;
  for (const unsigned workers : {1u, 2u, 8u}) {
    WorkerScope scope(workers);
    graphs.push_back(canonicalize(shuffled, g.num_nodes()).graph);
    entries.push_back(to_adjacency(graphs.back()).directed_entries());
  }
  CHECK(graphs[0] == g);
  CHECK(graphs[1] == g);
  CHECK(graphs[2] == g);
  CHECK(entries[0] == entries[1]);
  CHECK(entries[0] == entries[2]);
}

TEST_CASE("covered_nodes counts endpoints once") {
  CHECK(covered_nodes(Graph(4)) == 0);
  CHECK(covered_nodes(star_graph(3)) == 4);
  CHECK(covered_nodes(canonicalize(std::vector<Edge>{{0, 1}, {5, 6}}, 9).graph) == 4);
}
