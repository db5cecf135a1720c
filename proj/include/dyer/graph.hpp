// Labelled-graph model for Dyer graphs: a finite simplicial graph with
// vertex orders f: V -> {2,3,...} u {inf} and edge labels m: E -> {2,3,...},
// subject to the Dyer condition (any edge with label != 2 joins two vertices
// of order 2).  All operations are pure; graphs are immutable once built.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyer {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class UnknownVertexError : public Error {
public:
  explicit UnknownVertexError(const std::string& name)
      : Error("unknown vertex: " + name) {}
};

class EmptySubsetError : public Error {
public:
  EmptySubsetError() : Error("vertex subset must be nonempty") {}
};

class NotPrimeError : public Error {
public:
  explicit NotPrimeError(int p)
      : Error("not a prime: " + std::to_string(p)) {}
};

class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Vertex order: a finite integer >= 2 or infinity.
class VertexOrder {
public:
  static VertexOrder inf() { return VertexOrder(kInf); }

  explicit VertexOrder(std::uint32_t n) : raw_(n) {
    if (n != kInf && n < 2)
      throw Error("vertex order must be >= 2 or inf, got " + std::to_string(n));
  }

  bool is_inf() const { return raw_ == kInf; }

  std::uint32_t finite_value() const {
    if (is_inf()) throw Error("finite_value() on infinite vertex order");
    return raw_;
  }

  std::string str() const {
    return is_inf() ? "inf" : std::to_string(raw_);
  }

  friend bool operator==(VertexOrder a, VertexOrder b) { return a.raw_ == b.raw_; }
  friend bool operator!=(VertexOrder a, VertexOrder b) { return a.raw_ != b.raw_; }

  // Finite values ascending, infinity greatest.
  friend bool operator<(VertexOrder a, VertexOrder b) {
    if (a.is_inf()) return false;
    if (b.is_inf()) return true;
    return a.raw_ < b.raw_;
  }

private:
  static constexpr std::uint32_t kInf = 0;
  std::uint32_t raw_;
};

struct Violation {
  enum class Kind {
    EmptyVertexSet,
    DuplicateVertex,
    LoopEdge,
    DuplicateEdge,
    UnknownVertex,
    DyerConditionViolated,
  };

  Kind kind;
  std::string a;  // vertex name or first edge endpoint
  std::string b;  // second edge endpoint, if any
  int label = 0;

  std::string str() const {
    switch (kind) {
      case Kind::EmptyVertexSet:
        return "empty vertex set";
      case Kind::DuplicateVertex:
        return "duplicate vertex: " + a;
      case Kind::LoopEdge:
        return "loop edge at vertex: " + a;
      case Kind::DuplicateEdge:
        return "duplicate edge: {" + a + "," + b + "}";
      case Kind::UnknownVertex:
        return "edge endpoint is not a declared vertex: " + a;
      case Kind::DyerConditionViolated:
        return "edge {" + a + "," + b + "} has label " + std::to_string(label) +
               " != 2 but an endpoint order differs from 2";
    }
    return "unknown violation";
  }
};

class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<Violation> vs)
      : Error(describe(vs)), violations(std::move(vs)) {}

  std::vector<Violation> violations;

private:
  static std::string describe(const std::vector<Violation>& vs) {
    std::ostringstream os;
    os << "invalid Dyer graph (" << vs.size() << " violation"
       << (vs.size() == 1 ? "" : "s") << "):";
    for (const auto& v : vs) os << "\n  " << v.str();
    return os.str();
  }
};

struct EdgeDecl {
  std::string u, v;
  int label;
};

using VertexDecl = std::pair<std::string, VertexOrder>;

struct ValidationOutcome;
inline ValidationOutcome validate_dyer(const std::vector<VertexDecl>&,
                                       const std::vector<EdgeDecl>&);

class DyerGraph {
public:
  // Unordered pair, normalized so that first < second.
  using EdgeKey = std::pair<std::string, std::string>;

  static EdgeKey edge_key(std::string u, std::string v) {
    if (v < u) std::swap(u, v);
    return {std::move(u), std::move(v)};
  }

  const std::map<std::string, VertexOrder>& vertices() const { return vertices_; }
  const std::map<EdgeKey, int>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const std::string& name) const {
    return vertices_.count(name) != 0;
  }

  VertexOrder order(const std::string& name) const {
    auto it = vertices_.find(name);
    if (it == vertices_.end()) throw UnknownVertexError(name);
    return it->second;
  }

  bool has_edge(const std::string& u, const std::string& v) const {
    return edges_.count(edge_key(u, v)) != 0;
  }

  int label(const std::string& u, const std::string& v) const {
    auto it = edges_.find(edge_key(u, v));
    if (it == edges_.end())
      throw Error("no edge {" + u + "," + v + "}");
    return it->second;
  }

  std::vector<std::string> vertex_names() const {
    std::vector<std::string> names;
    names.reserve(vertices_.size());
    for (const auto& [name, f] : vertices_) names.push_back(name);
    return names;  // map iteration is already sorted
  }

  std::vector<std::string> neighbors(const std::string& v) const {
    if (!has_vertex(v)) throw UnknownVertexError(v);
    std::vector<std::string> out;
    for (const auto& [key, m] : edges_) {
      if (key.first == v) out.push_back(key.second);
      else if (key.second == v) out.push_back(key.first);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const DyerGraph& a, const DyerGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const DyerGraph& a, const DyerGraph& b) {
    return !(a == b);
  }

private:
  DyerGraph(std::map<std::string, VertexOrder> vertices,
            std::map<EdgeKey, int> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  friend struct ValidationOutcome;
  friend ValidationOutcome validate_dyer(const std::vector<VertexDecl>&,
                                         const std::vector<EdgeDecl>&);

  std::map<std::string, VertexOrder> vertices_;
  std::map<EdgeKey, int> edges_;
};

/// Result of validate_dyer: either a graph or the complete violation list.
struct ValidationOutcome {
  std::optional<DyerGraph> graph;
  std::vector<Violation> violations;

  bool ok() const { return graph.has_value(); }

  static ValidationOutcome success(std::map<std::string, VertexOrder> vs,
                                   std::map<DyerGraph::EdgeKey, int> es) {
    ValidationOutcome out;
    out.graph = DyerGraph(std::move(vs), std::move(es));
    return out;
  }
};

inline bool valid_vertex_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool word = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '_';
    if (!word) return false;
  }
  return true;
}

/// Checks every DyerGraph invariant on raw declarations and returns either
/// the constructed graph or the complete list of violations.  Token-level
/// well-formedness of names and labels is a precondition and throws.
inline ValidationOutcome validate_dyer(const std::vector<VertexDecl>& vertices,
                                       const std::vector<EdgeDecl>& edges) {
  for (const auto& [name, f] : vertices)
    if (!valid_vertex_token(name))
      throw PreconditionError("malformed vertex name: '" + name + "'");
  for (const auto& e : edges) {
    for (const auto& end : {e.u, e.v})
      if (!valid_vertex_token(end))
        throw PreconditionError("malformed vertex name: '" + end + "'");
    if (e.label < 2)
      throw PreconditionError("edge label must be >= 2, got " +
                              std::to_string(e.label));
  }

  std::vector<Violation> violations;

  std::map<std::string, VertexOrder> vmap;
  for (const auto& [name, f] : vertices) {
    if (!vmap.emplace(name, f).second)
      violations.push_back({Violation::Kind::DuplicateVertex, name, "", 0});
  }
  if (vmap.empty())
    violations.push_back({Violation::Kind::EmptyVertexSet, "", "", 0});

  std::map<DyerGraph::EdgeKey, int> emap;
  for (const auto& e : edges) {
    if (e.u == e.v) {
      violations.push_back({Violation::Kind::LoopEdge, e.u, "", 0});
      continue;
    }
    bool known = true;
    for (const auto& end : {e.u, e.v}) {
      if (!vmap.count(end)) {
        violations.push_back({Violation::Kind::UnknownVertex, end, "", 0});
        known = false;
      }
    }
    if (!known) continue;
    auto key = DyerGraph::edge_key(e.u, e.v);
    if (!emap.emplace(key, e.label).second) {
      violations.push_back(
          {Violation::Kind::DuplicateEdge, key.first, key.second, 0});
      continue;
    }
    if (e.label != 2) {
      auto fu = vmap.at(key.first), fv = vmap.at(key.second);
      if (fu != VertexOrder(2) || fv != VertexOrder(2))
        violations.push_back({Violation::Kind::DyerConditionViolated, key.first,
                              key.second, e.label});
    }
  }

  if (!violations.empty()) {
    ValidationOutcome out;
    out.violations = std::move(violations);
    return out;
  }
  return ValidationOutcome::success(std::move(vmap), std::move(emap));
}

/// Convenience wrapper: construct or throw ValidationError.
inline DyerGraph make_dyer(const std::vector<VertexDecl>& vertices,
                           const std::vector<EdgeDecl>& edges) {
  auto out = validate_dyer(vertices, edges);
  if (!out.ok()) throw ValidationError(std::move(out.violations));
  return *out.graph;
}

namespace detail {

// Index-based adjacency view over a graph's sorted vertex names.
struct AdjacencyView {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<std::vector<int>> adj;        // sorted neighbor lists
  std::vector<std::vector<std::uint8_t>> mat;

  explicit AdjacencyView(const DyerGraph& g) {
    names = g.vertex_names();
    for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
    const int n = static_cast<int>(names.size());
    adj.assign(n, {});
    mat.assign(n, std::vector<std::uint8_t>(n, 0));
    for (const auto& [key, m] : g.edges()) {
      int i = index.at(key.first), j = index.at(key.second);
      adj[i].push_back(j);
      adj[j].push_back(i);
      mat[i][j] = mat[j][i] = 1;
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
  }

  int n() const { return static_cast<int>(names.size()); }
  bool has(int i, int j) const { return mat[i][j] != 0; }
};

inline std::vector<std::vector<int>> components_of(
    int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      out[id].push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = id;
          queue.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;  // components appear in order of their least vertex
}

}  // namespace detail

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline DyerGraph induced_subgraph(const DyerGraph& g,
                                  const std::set<std::string>& subset) {
  if (subset.empty()) throw EmptySubsetError();
  std::vector<VertexDecl> vs;
  for (const auto& name : subset) {
    if (!g.has_vertex(name)) throw UnknownVertexError(name);
    vs.emplace_back(name, g.order(name));
  }
  std::vector<EdgeDecl> es;
  for (const auto& [key, m] : g.edges())
    if (subset.count(key.first) && subset.count(key.second))
      es.push_back({key.first, key.second, m});
  return make_dyer(vs, es);
}

/// The graph with all edges whose labels are divisible by p removed.
inline DyerGraph label_filtered(const DyerGraph& g, int p) {
  if (!is_prime(p)) throw NotPrimeError(p);
  std::vector<VertexDecl> vs;
  for (const auto& [name, f] : g.vertices()) vs.emplace_back(name, f);
  std::vector<EdgeDecl> es;
  for (const auto& [key, m] : g.edges())
    if (m % p != 0) es.push_back({key.first, key.second, m});
  return make_dyer(vs, es);
}

/// Maximal connected vertex sets, each sorted, listed by least vertex.
inline std::vector<std::vector<std::string>> connected_components(
    const DyerGraph& g) {
  detail::AdjacencyView view(g);
  std::vector<std::vector<std::string>> out;
  for (const auto& comp : detail::components_of(view.n(), view.adj)) {
    std::vector<std::string> names;
    names.reserve(comp.size());
    for (int v : comp) names.push_back(view.names[v]);
    out.push_back(std::move(names));
  }
  return out;
}

inline bool is_connected(const DyerGraph& g) {
  return connected_components(g).size() == 1;
}

/// Unlabelled simple graph (complement construction drops labels).
struct SimpleGraph {
  std::vector<std::string> vertices;  // sorted
  std::set<std::pair<std::string, std::string>> edges;  // normalized pairs

  bool has_edge(const std::string& u, const std::string& v) const {
    return edges.count(DyerGraph::edge_key(u, v)) != 0;
  }
};

inline SimpleGraph complement(const DyerGraph& g) {
  SimpleGraph out;
  out.vertices = g.vertex_names();
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j)
      if (!g.has_edge(out.vertices[i], out.vertices[j]))
        out.edges.insert({out.vertices[i], out.vertices[j]});
  return out;
}

struct JoinDecomposition {
  // Partition of V; every cross-factor pair is an edge; each factor's
  // induced subgraph is indecomposable.  Ordered by least vertex.
  std::vector<std::vector<std::string>> factors;

  bool indecomposable() const { return factors.size() == 1; }
};

/// Join factors = connected components of the complement graph.
/// The reassembly identity (cross pairs all edges, within-factor edges
/// from g) is re-checked on every output.
inline JoinDecomposition join_decompose(const DyerGraph& g) {
  const auto names = g.vertex_names();
  const int n = static_cast<int>(names.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[names[i]] = i;

  std::vector<std::vector<int>> cadj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(names[i], names[j])) {
        cadj[i].push_back(j);
        cadj[j].push_back(i);
      }

  JoinDecomposition out;
  std::vector<int> factor_of(n, -1);
  for (const auto& comp : detail::components_of(n, cadj)) {
    std::vector<std::string> factor;
    for (int v : comp) {
      factor.push_back(names[v]);
      factor_of[v] = static_cast<int>(out.factors.size());
    }
    out.factors.push_back(std::move(factor));
  }

  // Reassembly check: cross-factor pairs must all be edges of g.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (factor_of[i] != factor_of[j] && !g.has_edge(names[i], names[j]))
        throw Error("join decomposition reassembly failed");
  return out;
}

inline bool is_complete(const DyerGraph& g) {
  const auto names = g.vertex_names();
  const std::size_t n = names.size();
  return g.edge_count() == n * (n - 1) / 2;
}

/// Chordality certificate: a perfect elimination ordering when chordal,
/// otherwise an induced chordless cycle of length >= 4.
struct ChordalityCertificate {
  bool chordal;
  std::vector<std::string> elimination_order;  // set iff chordal
  std::vector<std::string> chordless_cycle;    // set iff not chordal
};

/// Checks that `order` is a perfect elimination ordering of g: the later
/// neighbors of each vertex form a clique.
inline bool verify_elimination_order(const DyerGraph& g,
                                     const std::vector<std::string>& order) {
  detail::AdjacencyView view(g);
  if (static_cast<int>(order.size()) != view.n()) return false;
  std::vector<int> pos(view.n(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    auto it = view.index.find(order[i]);
    if (it == view.index.end() || pos[it->second] != -1) return false;
    pos[it->second] = i;
  }
  for (int v = 0; v < view.n(); ++v) {
    std::vector<int> later;
    for (int w : view.adj[v])
      if (pos[w] > pos[v]) later.push_back(w);
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j)
        if (!view.has(later[i], later[j])) return false;
  }
  return true;
}

/// Checks that `cycle` is an induced cycle of g of length >= 4 with no chord.
inline bool verify_chordless_cycle(const DyerGraph& g,
                                   const std::vector<std::string>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  std::set<std::string> seen(cycle.begin(), cycle.end());
  if (seen.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (!cycle[i].empty() && !g.has_vertex(cycle[i])) return false;
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

namespace detail {

// Maximum-cardinality search; returns the visit order (reverse is the
// candidate perfect elimination ordering).
inline std::vector<int> mcs_order(const AdjacencyView& view) {
  const int n = view.n();
  std::vector<int> weight(n, 0), order;
  std::vector<char> numbered(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (numbered[v]) continue;
      if (best < 0 || weight[v] > weight[best]) best = v;  // ties: least index
    }
    numbered[best] = 1;
    order.push_back(best);
    for (int w : view.adj[best])
      if (!numbered[w]) ++weight[w];
  }
  return order;
}

// Shortest u--w path avoiding v and all other neighbors of v; with u,w
// non-adjacent neighbors of v this closes an induced chordless cycle.
inline std::vector<int> chordless_cycle_through(const AdjacencyView& view,
                                                int v, int u, int w) {
  const int n = view.n();
  std::vector<char> allowed(n, 1);
  allowed[v] = 0;
  for (int x : view.adj[v])
    if (x != u && x != w) allowed[x] = 0;
  std::vector<int> parent(n, -2);
  std::deque<int> queue{u};
  parent[u] = -1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == w) break;
    for (int y : view.adj[x])
      if (allowed[y] && parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  if (parent[w] == -2) return {};
  std::vector<int> path;
  for (int x = w; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());  // u ... w
  std::vector<int> cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

}  // namespace detail

inline ChordalityCertificate is_chordal(const DyerGraph& g) {
  detail::AdjacencyView view(g);
  const int n = view.n();

  auto visit = detail::mcs_order(view);
  std::vector<int> peo(visit.rbegin(), visit.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;

  bool ok = true;
  for (int idx = 0; idx < n && ok; ++idx) {
    const int v = peo[idx];
    std::vector<int> later;
    for (int w : view.adj[v])
      if (pos[w] > pos[v]) later.push_back(w);
    if (later.empty()) continue;
    int parent = later[0];
    for (int w : later)
      if (pos[w] < pos[parent]) parent = w;
    for (int w : later)
      if (w != parent && !view.has(parent, w)) ok = false;
  }

  ChordalityCertificate cert;
  if (ok) {
    cert.chordal = true;
    for (int v : peo) cert.elimination_order.push_back(view.names[v]);
    return cert;
  }

  // Non-chordal: locate an induced chordless cycle.  Some vertex has two
  // non-adjacent neighbors joined by a path through non-neighbors.
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < view.adj[v].size(); ++i)
      for (std::size_t j = i + 1; j < view.adj[v].size(); ++j) {
        int u = view.adj[v][i], w = view.adj[v][j];
        if (view.has(u, w)) continue;
        auto cycle = detail::chordless_cycle_through(view, v, u, w);
        if (cycle.empty()) continue;
        cert.chordal = false;
        for (int x : cycle) cert.chordless_cycle.push_back(view.names[x]);
        return cert;
      }
  throw Error("elimination ordering rejected but no chordless cycle found");
}

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted,
/// the list sorted lexicographically.
inline std::vector<std::vector<std::string>> maximal_cliques(
    const DyerGraph& g) {
  detail::AdjacencyView view(g);
  std::vector<std::vector<int>> found;

  auto extend = [&](auto&& self, std::vector<int> r, std::vector<int> p,
                    std::vector<int> x) -> void {
    if (p.empty() && x.empty()) {
      found.push_back(std::move(r));
      return;
    }
    int pivot = -1, best = -1;
    for (int v : p)
      if (static_cast<int>(view.adj[v].size()) > best) {
        best = static_cast<int>(view.adj[v].size());
        pivot = v;
      }
    for (int v : x)
      if (static_cast<int>(view.adj[v].size()) > best) {
        best = static_cast<int>(view.adj[v].size());
        pivot = v;
      }
    std::vector<int> candidates;
    for (int v : p)
      if (pivot < 0 || !view.has(pivot, v)) candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> r2 = r, p2, x2;
      r2.push_back(v);
      for (int w : p)
        if (view.has(v, w)) p2.push_back(w);
      for (int w : x)
        if (view.has(v, w)) x2.push_back(w);
      self(self, std::move(r2), std::move(p2), std::move(x2));
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };

  std::vector<int> all(view.n());
  for (int i = 0; i < view.n(); ++i) all[i] = i;
  extend(extend, {}, all, {});

  std::vector<std::vector<std::string>> out;
  for (auto& clique : found) {
    std::sort(clique.begin(), clique.end());
    std::vector<std::string> names;
    for (int v : clique) names.push_back(view.names[v]);
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A 3-vertex induced subgraph certifying indecomposability: either three
/// isolated vertices (Gamma1) or a single edge plus an isolated vertex
/// (Gamma2, vertices ordered edge-first).
struct IndecomposableWitness {
  enum class Kind { Gamma1, Gamma2 };
  Kind kind;
  std::array<std::string, 3> vertices;
};

inline IndecomposableWitness find_indecomposable_witness(const DyerGraph& g) {
  if (g.vertex_count() < 3)
    throw PreconditionError("witness search needs at least 3 vertices");
  if (!join_decompose(g).indecomposable())
    throw PreconditionError("witness search requires an indecomposable graph");

  const auto names = g.vertex_names();
  const std::size_t n = names.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::string &x = names[i], &y = names[j], &z = names[k];
        const bool xy = g.has_edge(x, y), xz = g.has_edge(x, z),
                   yz = g.has_edge(y, z);
        const int count = int(xy) + int(xz) + int(yz);
        if (count == 0)
          return {IndecomposableWitness::Kind::Gamma1, {x, y, z}};
        if (count == 1) {
          if (xy) return {IndecomposableWitness::Kind::Gamma2, {x, y, z}};
          if (xz) return {IndecomposableWitness::Kind::Gamma2, {x, z, y}};
          return {IndecomposableWitness::Kind::Gamma2, {y, z, x}};
        }
      }
  throw Error("indecomposable graph without a 3-vertex witness");
}

/// Re-validates a witness against the graph it was produced from.
inline bool verify_indecomposable_witness(const DyerGraph& g,
                                          const IndecomposableWitness& w) {
  const auto& [x, y, z] = w.vertices;
  if (!g.has_vertex(x) || !g.has_vertex(y) || !g.has_vertex(z)) return false;
  if (x == y || y == z || x == z) return false;
  const int count =
      int(g.has_edge(x, y)) + int(g.has_edge(x, z)) + int(g.has_edge(y, z));
  if (w.kind == IndecomposableWitness::Kind::Gamma1) return count == 0;
  return count == 1 && g.has_edge(x, y);
}

}  // namespace dyer
