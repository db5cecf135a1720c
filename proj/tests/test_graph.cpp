#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dyer/graph.hpp"
#include "dyer/dyg.hpp"
#include "dyer/random_graph.hpp"
#include "test_support.hpp"

using namespace dyer;
using namespace testsupport;

TEST_CASE("validate accepts a single vertex of any order") {
  auto out = validate_dyer({{"a", vo(5)}}, {});
  REQUIRE(out.ok());
  REQUIRE(out.graph->vertex_count() == 1);
  REQUIRE(out.graph->order("a") == vo(5));
}

TEST_CASE("validate rejects a label-3 edge with an order-3 endpoint") {
  auto out = validate_dyer({{"a", vo(2)}, {"b", vo(3)}}, {{"a", "b", 3}});
  REQUIRE_FALSE(out.ok());
  REQUIRE(out.violations.size() == 1);
  REQUIRE(out.violations[0].kind == Violation::Kind::DyerConditionViolated);
  REQUIRE(out.violations[0].a == "a");
  REQUIRE(out.violations[0].b == "b");
}

TEST_CASE("validate reports the complete violation list") {
  auto out = validate_dyer({{"a", vo(2)}, {"a", vo(3)}, {"b", vo(4)}},
                           {{"a", "a", 2},
                            {"a", "b", 2},
                            {"b", "a", 3},
                            {"a", "x", 2}});
  REQUIRE_FALSE(out.ok());
  std::vector<Violation::Kind> kinds;
  for (const auto& v : out.violations) kinds.push_back(v.kind);
  REQUIRE(std::count(kinds.begin(), kinds.end(),
                     Violation::Kind::DuplicateVertex) == 1);
  REQUIRE(std::count(kinds.begin(), kinds.end(), Violation::Kind::LoopEdge) == 1);
  REQUIRE(std::count(kinds.begin(), kinds.end(),
                     Violation::Kind::DuplicateEdge) == 1);
  REQUIRE(std::count(kinds.begin(), kinds.end(),
                     Violation::Kind::UnknownVertex) == 1);
}

TEST_CASE("validate rejects an empty vertex set") {
  auto out = validate_dyer({}, {});
  REQUIRE_FALSE(out.ok());
  REQUIRE(out.violations[0].kind == Violation::Kind::EmptyVertexSet);
}

TEST_CASE("malformed tokens and labels are precondition errors") {
  REQUIRE_THROWS_AS(validate_dyer({{"a b", vo(2)}}, {}), PreconditionError);
  REQUIRE_THROWS_AS(validate_dyer({{"", vo(2)}}, {}), PreconditionError);
  REQUIRE_THROWS_AS(
      validate_dyer({{"a", vo(2)}, {"b", vo(2)}}, {{"a", "b", 1}}),
      PreconditionError);
  REQUIRE_THROWS_AS(VertexOrder(1), Error);
  REQUIRE_NOTHROW(validate_dyer({{"A_9z", vo(2)}}, {}));
}

TEST_CASE("the bundled five-vertex figure validates") {
  auto g = final_figure();
  REQUIRE(g.vertex_count() == 5);
  REQUIRE(g.edge_count() == 7);
  REQUIRE(g.order("e").is_inf());
  REQUIRE(g.label("a", "b") == 5);
  REQUIRE(g.label("b", "d") == 3);
}

TEST_CASE("induced subgraph on the full vertex set is the identity") {
  auto g = final_figure();
  const auto names = g.vertex_names();
  std::set<std::string> all(names.begin(), names.end());
  REQUIRE(induced_subgraph(g, all) == g);
}

TEST_CASE("induced subgraph restricts vertices and labels") {
  auto g = final_figure();
  auto sub = induced_subgraph(g, {"a", "b", "d"});
  REQUIRE(sub.vertex_count() == 3);
  REQUIRE(sub.edge_count() == 3);
  REQUIRE(sub.label("a", "b") == 5);
  REQUIRE(sub.label("a", "d") == 2);
  REQUIRE(sub.label("b", "d") == 3);

  auto pair = induced_subgraph(g, {"a", "c"});
  REQUIRE(pair.edge_count() == 0);
}

TEST_CASE("induced subgraph rejects bad subsets") {
  auto g = final_figure();
  REQUIRE_THROWS_AS(induced_subgraph(g, {}), EmptySubsetError);
  REQUIRE_THROWS_AS(induced_subgraph(g, {"zz"}), UnknownVertexError);
}

TEST_CASE("label filter removes exactly the multiples of p") {
  auto g = final_figure();
  auto filtered = label_filtered(g, 2);
  REQUIRE(filtered.edge_count() == 2);
  REQUIRE(filtered.label("a", "b") == 5);
  REQUIRE(filtered.label("b", "d") == 3);

  auto triangle = graph({{"a", 2}, {"b", 2}, {"d", 2}},
                        {{"a", "b", 5}, {"a", "d", 2}, {"b", "d", 3}});
  auto at5 = label_filtered(triangle, 5);
  REQUIRE(at5.edge_count() == 2);
  REQUIRE(at5.has_edge("a", "d"));
  REQUIRE(at5.has_edge("b", "d"));

  auto untouched = label_filtered(triangle, 7);
  REQUIRE(untouched == triangle);

  REQUIRE_THROWS_AS(label_filtered(g, 4), NotPrimeError);
}

TEST_CASE("label filter keeps the vertex set and shrinks the edge set") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto doc = io::gen_random({n, rng(), {vo(2), vo(3), voinf()}, {2, 3, 4, 5, 6}, 0.6});
    for (int p : {2, 3, 5}) {
      auto f = label_filtered(doc.graph, p);
      REQUIRE(f.vertices() == doc.graph.vertices());
      bool removed_any = false;
      for (const auto& [key, m] : doc.graph.edges()) {
        if (m % p == 0) {
          REQUIRE_FALSE(f.has_edge(key.first, key.second));
          removed_any = true;
        } else {
          REQUIRE(f.label(key.first, key.second) == m);
        }
      }
      REQUIRE((f == doc.graph) == !removed_any);
    }
  }
}

TEST_CASE("connected components are sorted and partition the graph") {
  auto discrete = graph({{"a", 2}, {"b", 2}, {"c", 2}}, {});
  REQUIRE(connected_components(discrete) ==
          std::vector<std::vector<std::string>>{{"a"}, {"b"}, {"c"}});

  auto filtered = label_filtered(final_figure(), 2);
  REQUIRE(connected_components(filtered) ==
          std::vector<std::vector<std::string>>{{"a", "b", "d"}, {"c"}, {"e"}});

  auto complete = graph({{"a", 2}, {"b", 2}, {"c", 2}},
                        {{"a", "b", 2}, {"a", "c", 2}, {"b", "c", 2}});
  REQUIRE(connected_components(complete).size() == 1);
}

TEST_CASE("complement swaps complete and discrete, fixes the 5-cycle") {
  auto complete = graph({{"a", 2}, {"b", 2}, {"c", 2}},
                        {{"a", "b", 2}, {"a", "c", 2}, {"b", "c", 2}});
  REQUIRE(complement(complete).edges.empty());

  auto discrete = graph({{"a", 2}, {"b", 2}, {"c", 2}}, {});
  REQUIRE(complement(discrete).edges.size() == 3);

  auto c5 = graph({{"v1", 2}, {"v2", 2}, {"v3", 2}, {"v4", 2}, {"v5", 2}},
                  {{"v1", "v2", 2},
                   {"v2", "v3", 2},
                   {"v3", "v4", 2},
                   {"v4", "v5", 2},
                   {"v1", "v5", 2}});
  auto comp = complement(c5);
  REQUIRE(comp.edges.size() == 5);
  // The complement of a 5-cycle is again a 5-cycle.
  for (const auto& v : c5.vertex_names()) {
    int degree = 0;
    for (const auto& w : c5.vertex_names())
      if (v != w && comp.has_edge(v, w)) ++degree;
    REQUIRE(degree == 2);
  }
}

TEST_CASE("join decomposition: complete graphs split into singletons") {
  auto complete = graph({{"a", 2}, {"b", 3}, {"c", 5}},
                        {{"a", "b", 2}, {"a", "c", 2}, {"b", "c", 2}});
  auto d = join_decompose(complete);
  REQUIRE(d.factors ==
          std::vector<std::vector<std::string>>{{"a"}, {"b"}, {"c"}});
}

TEST_CASE("join decomposition: a 5-cycle is indecomposable") {
  auto c5 = graph({{"v1", 2}, {"v2", 2}, {"v3", 2}, {"v4", 2}, {"v5", 2}},
                  {{"v1", "v2", 2},
                   {"v2", "v3", 2},
                   {"v3", "v4", 2},
                   {"v4", "v5", 2},
                   {"v1", "v5", 2}});
  REQUIRE(join_decompose(c5).indecomposable());
}

TEST_CASE("join decomposition: the figure splits off its apex vertex") {
  auto d = join_decompose(final_figure());
  REQUIRE(d.factors ==
          std::vector<std::vector<std::string>>{{"a", "b", "c", "e"}, {"d"}});
}

TEST_CASE("join decomposition reassembles to the original graph") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    auto doc = io::gen_random({n, rng(), {vo(2), vo(3)}, {2, 3, 4}, 0.5});
    const auto& g = doc.graph;
    auto d = join_decompose(g);
    std::size_t total = 0;
    for (const auto& factor : d.factors) total += factor.size();
    REQUIRE(total == g.vertex_count());
    // Cross-factor pairs are edges; factor subgraphs are indecomposable.
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      auto sub = induced_subgraph(
          g, {d.factors[i].begin(), d.factors[i].end()});
      REQUIRE(join_decompose(sub).indecomposable());
      for (std::size_t j = i + 1; j < d.factors.size(); ++j)
        for (const auto& u : d.factors[i])
          for (const auto& w : d.factors[j]) REQUIRE(g.has_edge(u, w));
    }
  }
}

TEST_CASE("completeness check") {
  REQUIRE(is_complete(graph({{"a", 7}}, {})));
  REQUIRE(is_complete(graph({{"a", 2}, {"b", 2}, {"c", 2}},
                            {{"a", "b", 2}, {"a", "c", 2}, {"b", "c", 2}})));
  REQUIRE_FALSE(is_complete(
      graph({{"a", 2}, {"b", 2}, {"c", 2}}, {{"a", "b", 2}, {"b", "c", 2}})));
}

TEST_CASE("chordality: trees and the figure pass, 4-cycles fail") {
  auto path = graph({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}},
                    {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}});
  auto cert = is_chordal(path);
  REQUIRE(cert.chordal);
  REQUIRE(verify_elimination_order(path, cert.elimination_order));

  auto fig = final_figure();
  auto fig_cert = is_chordal(fig);
  REQUIRE(fig_cert.chordal);
  REQUIRE(verify_elimination_order(fig, fig_cert.elimination_order));

  auto c4 = graph({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}},
                  {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"a", "d", 2}});
  auto bad = is_chordal(c4);
  REQUIRE_FALSE(bad.chordal);
  REQUIRE(bad.chordless_cycle.size() == 4);
  REQUIRE(verify_chordless_cycle(c4, bad.chordless_cycle));
}

TEST_CASE("chordality certificates re-verify on random graphs") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    auto doc = io::gen_random({n, rng(), {vo(2)}, {2}, 0.45});
    auto cert = is_chordal(doc.graph);
    if (cert.chordal)
      REQUIRE(verify_elimination_order(doc.graph, cert.elimination_order));
    else
      REQUIRE(verify_chordless_cycle(doc.graph, cert.chordless_cycle));
  }
}

TEST_CASE("maximal cliques on small shapes") {
  auto discrete = graph({{"a", 2}, {"b", 2}}, {});
  REQUIRE(maximal_cliques(discrete) ==
          std::vector<std::vector<std::string>>{{"a"}, {"b"}});

  auto triangle = graph({{"a", 2}, {"b", 2}, {"d", 2}},
                        {{"a", "b", 2}, {"a", "d", 2}, {"b", "d", 2}});
  REQUIRE(maximal_cliques(triangle) ==
          std::vector<std::vector<std::string>>{{"a", "b", "d"}});

  auto path = graph({{"a", 2}, {"b", 2}, {"c", 2}},
                    {{"a", "b", 2}, {"b", "c", 2}});
  REQUIRE(maximal_cliques(path) ==
          std::vector<std::vector<std::string>>{{"a", "b"}, {"b", "c"}});
}

TEST_CASE("indecomposable witness: direct examples") {
  auto gamma2 = graph({{"x", 2}, {"y", 2}, {"z", 2}}, {{"x", "y", 2}});
  auto w = find_indecomposable_witness(gamma2);
  REQUIRE(w.kind == IndecomposableWitness::Kind::Gamma2);
  REQUIRE(w.vertices == std::array<std::string, 3>{"x", "y", "z"});
  REQUIRE(verify_indecomposable_witness(gamma2, w));

  auto c5 = graph({{"v1", 2}, {"v2", 2}, {"v3", 2}, {"v4", 2}, {"v5", 2}},
                  {{"v1", "v2", 2},
                   {"v2", "v3", 2},
                   {"v3", "v4", 2},
                   {"v4", "v5", 2},
                   {"v1", "v5", 2}});
  auto wc5 = find_indecomposable_witness(c5);
  REQUIRE(wc5.kind == IndecomposableWitness::Kind::Gamma2);
  REQUIRE(wc5.vertices == std::array<std::string, 3>{"v1", "v2", "v4"});

  auto k4 = graph({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}},
                  {{"a", "b", 2},
                   {"a", "c", 2},
                   {"a", "d", 2},
                   {"b", "c", 2},
                   {"b", "d", 2},
                   {"c", "d", 2}});
  REQUIRE_THROWS_AS(find_indecomposable_witness(k4), PreconditionError);
  REQUIRE_THROWS_AS(find_indecomposable_witness(graph({{"a", 2}}, {})),
                    PreconditionError);
}

TEST_CASE("every indecomposable graph on up to 6 vertices has a witness") {
  for (int n = 3; n <= 6; ++n) {
    for_each_simple_graph(n, [&](const DyerGraph& g) {
      if (!join_decompose(g).indecomposable()) return;
      auto w = find_indecomposable_witness(g);
      REQUIRE(verify_indecomposable_witness(g, w));
    });
  }
}

TEST_CASE("induced subgraphs preserve the Dyer condition") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    auto doc = io::gen_random({n, rng(), {vo(2), vo(3), voinf()}, {2, 3, 4, 6}, 0.6});
    const auto names = doc.graph.vertex_names();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      std::set<std::string> subset;
      for (int i = 0; i < n; ++i)
        if (mask & (std::uint64_t(1) << i)) subset.insert(names[i]);
      REQUIRE_NOTHROW(induced_subgraph(doc.graph, subset));
    }
  }
}
