// Shared helpers for the test suites: compact graph construction and
// deterministic enumeration of small graphs.

#pragma once

#include <random>

#include "dyer/dyg.hpp"
#include "dyer/graph.hpp"

namespace testsupport {

using dyer::DyerGraph;
using dyer::EdgeDecl;
using dyer::VertexDecl;
using dyer::VertexOrder;

inline VertexOrder vo(int n) { return VertexOrder(static_cast<std::uint32_t>(n)); }
inline VertexOrder voinf() { return VertexOrder::inf(); }

struct V {
  std::string name;
  int order;  // 0 encodes inf
};

struct E {
  std::string u, v;
  int m;
};

inline DyerGraph graph(std::initializer_list<V> vs, std::initializer_list<E> es) {
  std::vector<VertexDecl> vertices;
  for (const auto& v : vs)
    vertices.emplace_back(v.name, v.order == 0 ? voinf() : vo(v.order));
  std::vector<EdgeDecl> edges;
  for (const auto& e : es) edges.push_back({e.u, e.v, e.m});
  return dyer::make_dyer(vertices, edges);
}

inline DyerGraph final_figure() {
  return dyer::io::load_dyg(std::string(FIXTURES_DIR) + "/final_figure.dyg");
}

inline std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  return names;
}

// Enumerates every simple graph structure on n labeled vertices (edge
// subsets of the complete graph) with all orders 2 and all labels 2.
template <typename Fn>
void for_each_simple_graph(int n, Fn&& fn) {
  const auto names = default_names(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size());
       ++mask) {
    std::vector<VertexDecl> vs;
    for (const auto& name : names) vs.emplace_back(name, vo(2));
    std::vector<EdgeDecl> es;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask & (std::uint64_t(1) << k))
        es.push_back({names[pairs[k].first], names[pairs[k].second], 2});
    fn(dyer::make_dyer(vs, es));
  }
}

// Enumerates every valid Dyer graph on n labeled vertices with vertex
// orders drawn from f_pool and edge labels from m_pool (absent edges
// included).  Invalid combinations are skipped.
template <typename Fn>
void for_each_dyer_graph(int n, const std::vector<VertexOrder>& f_pool,
                         const std::vector<int>& m_pool, Fn&& fn) {
  const auto names = default_names(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  const std::size_t edge_choices = m_pool.size() + 1;  // + absent
  std::vector<std::size_t> edge_pick(pairs.size(), 0);
  std::vector<std::size_t> f_pick(n, 0);

  auto next = [](std::vector<std::size_t>& digits, std::size_t radix) {
    for (auto& d : digits) {
      if (++d < radix) return true;
      d = 0;
    }
    return false;
  };

  do {
    std::vector<EdgeDecl> es;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (edge_pick[k] > 0)
        es.push_back({names[pairs[k].first], names[pairs[k].second],
                      m_pool[edge_pick[k] - 1]});
    // Vertices incident to a label != 2 edge are forced to order 2.
    std::vector<char> forced(n, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (edge_pick[k] > 0 && m_pool[edge_pick[k] - 1] != 2) {
        forced[pairs[k].first] = 1;
        forced[pairs[k].second] = 1;
      }
    std::fill(f_pick.begin(), f_pick.end(), 0);
    do {
      bool skip = false;
      std::vector<VertexDecl> vs;
      for (int i = 0; i < n; ++i) {
        const auto f = f_pool[f_pick[i]];
        if (forced[i] && f != vo(2)) {
          skip = true;
          break;
        }
        vs.emplace_back(names[i], f);
      }
      if (!skip) fn(dyer::make_dyer(vs, es));
      // Forced coordinates only take their first pool value that equals 2;
      // skipped combinations are cheap to step over.
    } while (next(f_pick, f_pool.size()));
  } while (next(edge_pick, edge_choices));
}

}  // namespace testsupport
