// Decision procedures on Dyer graphs: evenness, quasi-perfectness (via the
// component decomposition of the odd-edge graph), derived-length class of
// numbered graph products, abelianization invariants, the even quotient
// construction, and virtual freeness.  Every negative verdict carries a
// counter-witness that re-validates against the input graph.

#pragma once

#include <numeric>
#include <variant>

#include "dyer/coxeter.hpp"
#include "dyer/graph.hpp"

namespace dyer {

class NotEvenError : public Error {
public:
  NotEvenError() : Error("graph has an odd edge label; not an even Dyer graph") {}
};

class NotGraphProductError : public Error {
public:
  explicit NotGraphProductError(const std::string& u, const std::string& v, int m)
      : Error("edge {" + u + "," + v + "} has label " + std::to_string(m) +
              " != 2; not a graph product presentation") {}
};

/// True iff no edge label is odd (the edge set may be empty).
inline bool is_even(const DyerGraph& g) {
  for (const auto& [key, m] : g.edges())
    if (m % 2 != 0) return false;
  return true;
}

/// Even case of the quasi-perfectness criterion: true iff the graph is
/// complete and either has no edges or every label equals 2 (the group is
/// then abelian; every other even Dyer group has derived length >= 2).
inline bool classify_even_quasi_perfect(const DyerGraph& g) {
  if (!is_even(g)) throw NotEvenError();
  if (!is_complete(g)) return false;
  for (const auto& [key, m] : g.edges())
    if (m != 2) return false;
  return true;
}

enum class DerivedLengthClass { One = 1, Two = 2, Infinite = 3 };

inline std::string str(DerivedLengthClass c) {
  switch (c) {
    case DerivedLengthClass::One: return "1";
    case DerivedLengthClass::Two: return "2";
    case DerivedLengthClass::Infinite: return "inf";
  }
  return "?";
}

/// Derived-length trichotomy for numbered graph products (all labels 2).
/// Joins split as direct products, so the value is the maximum over the
/// indecomposable factors: a single vertex gives 1, two isolated order-2
/// vertices give 2, everything else is infinite.
inline DerivedLengthClass graph_product_derived_length(const DyerGraph& g) {
  for (const auto& [key, m] : g.edges())
    if (m != 2) throw NotGraphProductError(key.first, key.second, m);

  auto factor_class = [&](const std::vector<std::string>& factor) {
    if (factor.size() == 1) return DerivedLengthClass::One;
    if (factor.size() == 2) {
      // Within a join factor the two vertices are never adjacent.
      if (g.order(factor[0]) == VertexOrder(2) &&
          g.order(factor[1]) == VertexOrder(2))
        return DerivedLengthClass::Two;
      return DerivedLengthClass::Infinite;
    }
    return DerivedLengthClass::Infinite;
  };

  DerivedLengthClass result = DerivedLengthClass::One;
  for (const auto& factor : join_decompose(g).factors)
    result = std::max(result, factor_class(factor));
  return result;
}

/// One connected component of the odd-edge graph, with its induced
/// subgraph and lexicographically least representative.
struct ComponentPart {
  std::vector<std::string> vertices;  // sorted
  DyerGraph graph;                    // induced subgraph of the source
  std::string representative;         // least vertex
};

struct ComponentDecomposition {
  std::vector<ComponentPart> parts;  // ordered by least vertex

  int part_of(const std::string& v) const {
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
      for (const auto& name : parts[i].vertices)
        if (name == v) return i;
    return -1;
  }
};

inline ComponentDecomposition component_decomposition(const DyerGraph& g) {
  ComponentDecomposition out;
  for (const auto& comp : connected_components(label_filtered(g, 2))) {
    std::set<std::string> subset(comp.begin(), comp.end());
    ComponentPart part{comp, induced_subgraph(g, subset), comp.front()};
    if (part.vertices.size() >= 2)
      for (const auto& v : part.vertices)
        if (g.order(v) != VertexOrder(2))
          throw Error("multi-vertex odd component with a vertex of order != 2");
    out.parts.push_back(std::move(part));
  }
  return out;
}

/// The even quotient graph: one vertex per odd component (keeping its
/// representative's order), cross edges labelled by the gcd of all
/// existing cross-edge labels, absent when no cross edge exists.
struct EvenQuotient {
  DyerGraph graph;
  // (i, j) with i < j indexing decomposition parts; nullopt encodes the
  // empty gcd (no cross edge).
  std::map<std::pair<int, int>, std::optional<int>> cross_labels;
};

inline EvenQuotient even_quotient(const DyerGraph& g) {
  const auto decomp = component_decomposition(g);
  const int k = static_cast<int>(decomp.parts.size());

  std::map<std::string, int> part_index;
  for (int i = 0; i < k; ++i)
    for (const auto& v : decomp.parts[i].vertices) part_index[v] = i;

  std::map<std::pair<int, int>, std::optional<int>> cross;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) cross[{i, j}] = std::nullopt;
  for (const auto& [key, m] : g.edges()) {
    int i = part_index.at(key.first), j = part_index.at(key.second);
    if (i == j) continue;
    auto& slot = cross[{std::min(i, j), std::max(i, j)}];
    slot = slot ? std::gcd(*slot, m) : m;
  }

  std::vector<VertexDecl> vs;
  for (const auto& part : decomp.parts)
    vs.emplace_back(part.representative, g.order(part.representative));
  std::vector<EdgeDecl> es;
  for (const auto& [ij, label] : cross)
    if (label)
      es.push_back({decomp.parts[ij.first].representative,
                    decomp.parts[ij.second].representative, *label});

  EvenQuotient out{make_dyer(vs, es), std::move(cross)};
  if (!is_even(out.graph))
    throw Error("even quotient produced an odd cross label");
  return out;
}

/// Noncompliance certificates for the quasi-perfectness criterion.
struct QuasiPerfectFailPrime {
  int part;    // index into the component decomposition
  int prime;   // prime whose filtered component graph disconnects
  std::vector<std::vector<std::string>> disconnection;  // >= 2 components
};

struct QuasiPerfectFailPair {
  int i, j;  // part indices with no label-2 cross edge
};

struct QuasiPerfectVerdict {
  bool result;
  std::optional<std::variant<QuasiPerfectFailPrime, QuasiPerfectFailPair>> failure;
};

/// Quasi-perfectness of the Dyer group, decided on the graph: (i) every
/// prime filter of every odd component stays connected, and (ii) every
/// pair of odd components is joined by some edge of label exactly 2.
inline QuasiPerfectVerdict is_quasi_perfect(const DyerGraph& g) {
  const auto decomp = component_decomposition(g);
  const int k = static_cast<int>(decomp.parts.size());

  // (i): primes dividing some label of the part's induced graph; for all
  // other primes the filter removes nothing.
  for (int i = 0; i < k; ++i) {
    const auto& part = decomp.parts[i];
    std::set<int> primes;
    for (const auto& [key, m] : part.graph.edges())
      for (int p = 2; p <= m; ++p)
        if (is_prime(p) && m % p == 0) primes.insert(p);
    for (int p : primes) {
      auto components = connected_components(label_filtered(part.graph, p));
      if (components.size() > 1)
        return {false, QuasiPerfectFailPrime{i, p, std::move(components)}};
    }
  }

  // (ii): some cross edge of label exactly 2 for every part pair.
  std::map<std::string, int> part_index;
  for (int i = 0; i < k; ++i)
    for (const auto& v : decomp.parts[i].vertices) part_index[v] = i;
  std::set<std::pair<int, int>> has_two;
  for (const auto& [key, m] : g.edges()) {
    int i = part_index.at(key.first), j = part_index.at(key.second);
    if (i != j && m == 2) has_two.insert({std::min(i, j), std::max(i, j)});
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!has_two.count({i, j}))
        return {false, QuasiPerfectFailPair{i, j}};

  return {true, std::nullopt};
}

/// Re-checks a quasi-perfectness verdict against the graph.
inline bool verify_quasi_perfect_verdict(const DyerGraph& g,
                                         const QuasiPerfectVerdict& v) {
  if (v.result != !v.failure.has_value()) return false;
  if (v.result) return true;
  const auto decomp = component_decomposition(g);
  if (const auto* fp = std::get_if<QuasiPerfectFailPrime>(&*v.failure)) {
    if (fp->part < 0 || fp->part >= static_cast<int>(decomp.parts.size()))
      return false;
    if (!is_prime(fp->prime)) return false;
    auto filtered =
        connected_components(label_filtered(decomp.parts[fp->part].graph, fp->prime));
    return filtered.size() >= 2 && filtered == fp->disconnection;
  }
  const auto& pair = std::get<QuasiPerfectFailPair>(*v.failure);
  if (pair.i < 0 || pair.j >= static_cast<int>(decomp.parts.size()) ||
      pair.i >= pair.j)
    return false;
  for (const auto& u : decomp.parts[pair.i].vertices)
    for (const auto& w : decomp.parts[pair.j].vertices)
      if (g.has_edge(u, w) && g.label(u, w) == 2) return false;
  return true;
}

/// Abelianization of the Dyer group as a multiset of cyclic orders: one
/// value f(w_i) per odd component (odd edges identify their endpoints in
/// the abelianization; even edge relations die).  Sorted, infinities last.
inline std::vector<VertexOrder> abelianization_invariants(const DyerGraph& g) {
  std::vector<VertexOrder> out;
  for (const auto& part : component_decomposition(g).parts)
    out.push_back(g.order(part.representative));
  std::sort(out.begin(), out.end());
  return out;
}

/// Counter-witnesses for the virtual-freeness criterion.
struct InfiniteOrderEdge { std::string v, w; };
struct MissingTriangle { std::string u, v, w; };  // u infinite, v,w finite
struct NotChordal { std::vector<std::string> cycle; };
struct InfiniteCoxeterClique { std::vector<std::string> clique; std::string reason; };

using VirtuallyFreeFailure =
    std::variant<InfiniteOrderEdge, MissingTriangle, NotChordal,
                 InfiniteCoxeterClique>;

struct VirtuallyFreeVerdict {
  bool result;
  std::optional<VirtuallyFreeFailure> failed_condition;
};

/// Virtual freeness of the Dyer group, decided on the graph:
///  (1) no edge joins two infinite-order vertices,
///  (2) two finite-order neighbors of an infinite-order vertex are adjacent,
///  (3) the graph is chordal,
///  (4) every maximal clique of order-2 vertices presents a finite Coxeter
///      group.
inline VirtuallyFreeVerdict is_virtually_free(const DyerGraph& g) {
  const auto names = g.vertex_names();

  for (const auto& [key, m] : g.edges())
    if (g.order(key.first).is_inf() && g.order(key.second).is_inf())
      return {false, InfiniteOrderEdge{key.first, key.second}};

  for (const auto& u : names) {
    if (!g.order(u).is_inf()) continue;
    auto nbrs = g.neighbors(u);
    std::vector<std::string> finite;
    for (const auto& v : nbrs)
      if (!g.order(v).is_inf()) finite.push_back(v);
    for (std::size_t i = 0; i < finite.size(); ++i)
      for (std::size_t j = i + 1; j < finite.size(); ++j)
        if (!g.has_edge(finite[i], finite[j]))
          return {false, MissingTriangle{u, finite[i], finite[j]}};
  }

  auto chordal = is_chordal(g);
  if (!chordal.chordal)
    return {false, NotChordal{chordal.chordless_cycle}};

  std::set<std::string> coxeter_part;
  for (const auto& v : names)
    if (g.order(v) == VertexOrder(2)) coxeter_part.insert(v);
  if (!coxeter_part.empty()) {
    auto sub = induced_subgraph(g, coxeter_part);
    for (const auto& clique : maximal_cliques(sub)) {
      auto type = recognize_finite_coxeter(
          induced_subgraph(g, {clique.begin(), clique.end()}));
      if (!type.finite)
        return {false, InfiniteCoxeterClique{clique, type.reason}};
    }
  }
  return {true, std::nullopt};
}

/// Re-checks a virtual-freeness verdict against the graph.
inline bool verify_virtually_free_verdict(const DyerGraph& g,
                                          const VirtuallyFreeVerdict& v) {
  if (v.result != !v.failed_condition.has_value()) return false;
  if (v.result) return true;
  const auto& f = *v.failed_condition;
  if (const auto* e = std::get_if<InfiniteOrderEdge>(&f))
    return g.has_edge(e->v, e->w) && g.order(e->v).is_inf() &&
           g.order(e->w).is_inf();
  if (const auto* t = std::get_if<MissingTriangle>(&f))
    return g.order(t->u).is_inf() && !g.order(t->v).is_inf() &&
           !g.order(t->w).is_inf() && t->v != t->w && g.has_edge(t->u, t->v) &&
           g.has_edge(t->u, t->w) && !g.has_edge(t->v, t->w);
  if (const auto* c = std::get_if<NotChordal>(&f))
    return verify_chordless_cycle(g, c->cycle);
  const auto& clique = std::get<InfiniteCoxeterClique>(f);
  for (const auto& u : clique.clique) {
    if (g.order(u) != VertexOrder(2)) return false;
    for (const auto& w : clique.clique)
      if (u < w && !g.has_edge(u, w)) return false;
  }
  auto type = recognize_finite_coxeter(
      induced_subgraph(g, {clique.clique.begin(), clique.clique.end()}));
  return !type.finite;
}

}  // namespace dyer
