// Recognition of finite Coxeter types from a complete Dyer graph with all
// vertex orders 2.  The Coxeter diagram keeps the pairs with label >= 3
// (label-2 pairs commute and become diagram non-edges); each diagram
// component is matched exactly against the finite-type catalogue.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "dyer/graph.hpp"

namespace dyer {

using BigInt = boost::multiprecision::cpp_int;

class NotCoxeterError : public Error {
public:
  explicit NotCoxeterError(const std::string& v)
      : Error("vertex " + v + " has order != 2; not a Coxeter presentation") {}
};

class NotCompleteError : public Error {
public:
  NotCompleteError() : Error("finite-type recognition requires a complete graph") {}
};

enum class CoxeterTag { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

struct CoxeterComponent {
  CoxeterTag tag;
  int rank;                         // number of vertices
  int m = 0;                        // dihedral label, I2 only
  std::vector<std::string> vertices;  // sorted

  std::string name() const {
    switch (tag) {
      case CoxeterTag::A: return "A" + std::to_string(rank);
      case CoxeterTag::B: return "B" + std::to_string(rank);
      case CoxeterTag::D: return "D" + std::to_string(rank);
      case CoxeterTag::E6: return "E6";
      case CoxeterTag::E7: return "E7";
      case CoxeterTag::E8: return "E8";
      case CoxeterTag::F4: return "F4";
      case CoxeterTag::H3: return "H3";
      case CoxeterTag::H4: return "H4";
      case CoxeterTag::I2: return "I2(" + std::to_string(m) + ")";
    }
    return "?";
  }

  BigInt order() const {
    auto factorial = [](int k) {
      BigInt out = 1;
      for (int i = 2; i <= k; ++i) out *= i;
      return out;
    };
    switch (tag) {
      case CoxeterTag::A: return factorial(rank + 1);
      case CoxeterTag::B: return (BigInt(1) << rank) * factorial(rank);
      case CoxeterTag::D: return (BigInt(1) << (rank - 1)) * factorial(rank);
      case CoxeterTag::E6: return 51840;
      case CoxeterTag::E7: return 2903040;
      case CoxeterTag::E8: return 696729600;
      case CoxeterTag::F4: return 1152;
      case CoxeterTag::H3: return 120;
      case CoxeterTag::H4: return 14400;
      case CoxeterTag::I2: return 2 * m;
    }
    return 0;
  }
};

struct FiniteCoxeterType {
  bool finite;
  std::vector<CoxeterComponent> components;  // set iff finite
  std::string reason;                        // set iff not finite

  BigInt order() const {
    BigInt out = 1;
    for (const auto& c : components) out *= c.order();
    return out;
  }
};

namespace detail {

// Classifies one connected diagram component (indices into `view`,
// diagram adjacency in `dadj`, labels in `dlabel`).
inline std::optional<CoxeterComponent> classify_diagram_component(
    const AdjacencyView& view, const std::vector<int>& comp,
    const std::map<std::pair<int, int>, int>& dlabel,
    const std::vector<std::vector<int>>& dadj, std::string& reason) {
  const int n = static_cast<int>(comp.size());
  std::vector<std::string> names;
  for (int v : comp) names.push_back(view.names[v]);
  std::sort(names.begin(), names.end());

  auto label_of = [&](int a, int b) {
    return dlabel.at({std::min(a, b), std::max(a, b)});
  };

  if (n == 1) return CoxeterComponent{CoxeterTag::A, 1, 0, names};
  if (n == 2) {
    const int m = label_of(comp[0], comp[1]);
    if (m == 3) return CoxeterComponent{CoxeterTag::A, 2, 0, names};
    if (m == 4) return CoxeterComponent{CoxeterTag::B, 2, 0, names};
    return CoxeterComponent{CoxeterTag::I2, 2, m, names};
  }

  // Rank >= 3: the diagram must be a tree with maximum degree 3 and at
  // most one branch vertex.
  int edge_count = 0;
  for (int v : comp) edge_count += static_cast<int>(dadj[v].size());
  edge_count /= 2;
  if (edge_count != n - 1) {
    reason = "diagram component contains a cycle";
    return std::nullopt;
  }
  std::vector<int> branch;
  for (int v : comp) {
    if (dadj[v].size() >= 4) {
      reason = "diagram vertex of degree >= 4";
      return std::nullopt;
    }
    if (dadj[v].size() == 3) branch.push_back(v);
  }
  if (branch.size() >= 2) {
    reason = "diagram component with two branch vertices";
    return std::nullopt;
  }

  if (branch.empty()) {
    // A path; read labels from one end.
    int end = -1;
    for (int v : comp)
      if (dadj[v].size() == 1) { end = v; break; }
    std::vector<int> labels;
    int prev = -1, cur = end;
    for (int step = 0; step < n - 1; ++step) {
      int next = (dadj[cur][0] == prev && dadj[cur].size() > 1) ? dadj[cur][1]
                                                                : dadj[cur][0];
      if (next == prev) next = dadj[cur].back();
      labels.push_back(label_of(cur, next));
      prev = cur;
      cur = next;
    }
    std::vector<int> heavy_pos;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if (labels[i] > 3) heavy_pos.push_back(i);

    if (heavy_pos.empty()) return CoxeterComponent{CoxeterTag::A, n, 0, names};
    if (heavy_pos.size() >= 2) {
      reason = "path diagram with two labels > 3";
      return std::nullopt;
    }
    const int pos = heavy_pos[0];
    const int m = labels[pos];
    const bool at_end = (pos == 0 || pos == static_cast<int>(labels.size()) - 1);
    if (m == 4) {
      if (at_end) return CoxeterComponent{CoxeterTag::B, n, 0, names};
      if (n == 4) return CoxeterComponent{CoxeterTag::F4, 4, 0, names};
      reason = "interior label 4 in a path of rank != 4";
      return std::nullopt;
    }
    if (m == 5 && at_end) {
      if (n == 3) return CoxeterComponent{CoxeterTag::H3, 3, 0, names};
      if (n == 4) return CoxeterComponent{CoxeterTag::H4, 4, 0, names};
      reason = "end label 5 in a path of rank > 4";
      return std::nullopt;
    }
    reason = "path diagram label " + std::to_string(m) + " outside the catalogue";
    return std::nullopt;
  }

  // One branch vertex: all labels must be 3, arm lengths decide D/E.
  for (int v : comp)
    for (int w : dadj[v])
      if (v < w && label_of(v, w) != 3) {
        reason = "branched diagram with a label > 3";
        return std::nullopt;
      }
  std::vector<int> arms;
  for (int start : dadj[branch[0]]) {
    int len = 1, prev = branch[0], cur = start;
    while (dadj[cur].size() == 2) {
      int next = (dadj[cur][0] == prev) ? dadj[cur][1] : dadj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1)
    return CoxeterComponent{CoxeterTag::D, n, 0, names};
  if (arms == std::vector<int>{1, 2, 2})
    return CoxeterComponent{CoxeterTag::E6, 6, 0, names};
  if (arms == std::vector<int>{1, 2, 3})
    return CoxeterComponent{CoxeterTag::E7, 7, 0, names};
  if (arms == std::vector<int>{1, 2, 4})
    return CoxeterComponent{CoxeterTag::E8, 8, 0, names};
  reason = "branched diagram outside the D/E catalogue";
  return std::nullopt;
}

}  // namespace detail

/// Decides whether the Coxeter group presented by a complete all-order-2
/// Dyer graph is finite, naming the irreducible factors when it is.
inline FiniteCoxeterType recognize_finite_coxeter(const DyerGraph& g) {
  for (const auto& [name, f] : g.vertices())
    if (f != VertexOrder(2)) throw NotCoxeterError(name);
  if (!is_complete(g)) throw NotCompleteError();

  detail::AdjacencyView view(g);
  const int n = view.n();

  // Diagram: keep pairs with label >= 3.
  std::vector<std::vector<int>> dadj(n);
  std::map<std::pair<int, int>, int> dlabel;
  for (const auto& [key, m] : g.edges()) {
    if (m < 3) continue;
    int i = view.index.at(key.first), j = view.index.at(key.second);
    dadj[i].push_back(j);
    dadj[j].push_back(i);
    dlabel[{std::min(i, j), std::max(i, j)}] = m;
  }
  for (auto& row : dadj) std::sort(row.begin(), row.end());

  FiniteCoxeterType out;
  out.finite = true;
  for (const auto& comp : detail::components_of(n, dadj)) {
    std::string reason;
    auto c = detail::classify_diagram_component(view, comp, dlabel, dadj, reason);
    if (!c) {
      return FiniteCoxeterType{false, {}, reason};
    }
    out.components.push_back(std::move(*c));
  }
  return out;
}

}  // namespace dyer
