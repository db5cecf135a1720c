// Seeded random Dyer-graph generation for property testing.  Sampling
// uses mt19937_64 directly (the engine is fully specified, so documents
// are reproducible across platforms).  Labels that would violate the
// Dyer condition are repaired by resetting the endpoint orders to 2, and
// every repair is recorded in the document header.

#pragma once

#include <random>

#include "dyer/dyg.hpp"

namespace dyer::io {

struct GenOptions {
  int vertices = 4;
  std::uint64_t seed = 0;
  std::vector<VertexOrder> f_pool = {VertexOrder(2), VertexOrder(3),
                                     VertexOrder(4), VertexOrder::inf()};
  std::vector<int> m_pool = {2, 3, 4, 5, 6};
  double edge_prob = 0.5;
};

namespace detail_gen {

inline std::string vertex_name(int i) {
  std::string name;
  ++i;
  while (i > 0) {
    --i;
    name.insert(name.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  }
  return name;
}

}  // namespace detail_gen

inline DygDocument gen_random(const GenOptions& opt) {
  if (opt.vertices < 1) throw PreconditionError("need at least one vertex");
  if (opt.f_pool.empty() || opt.m_pool.empty())
    throw PreconditionError("label pools must be nonempty");
  if (opt.edge_prob < 0.0 || opt.edge_prob > 1.0)
    throw PreconditionError("edge probability must be in [0,1]");

  std::mt19937_64 rng(opt.seed);
  auto pick = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  auto coin = [&rng](double p) {
    return ((rng() >> 11) * 0x1.0p-53) < p;  // uniform in [0,1)
  };

  std::vector<std::string> names;
  std::map<std::string, VertexOrder> order;
  for (int i = 0; i < opt.vertices; ++i) {
    names.push_back(detail_gen::vertex_name(i));
    order.emplace(names.back(), opt.f_pool[pick(opt.f_pool.size())]);
  }

  std::vector<EdgeDecl> edges;
  for (int i = 0; i < opt.vertices; ++i)
    for (int j = i + 1; j < opt.vertices; ++j) {
      if (!coin(opt.edge_prob)) continue;
      edges.push_back({names[i], names[j],
                       opt.m_pool[pick(opt.m_pool.size())]});
    }

  std::vector<std::string> repairs;
  for (const auto& e : edges) {
    if (e.label == 2) continue;
    for (const auto& end : {e.u, e.v}) {
      auto it = order.find(end);
      if (it->second != VertexOrder(2)) {
        it->second = VertexOrder(2);
        repairs.push_back("# repair: vertex " + end + " order -> 2 (edge {" +
                          e.u + "," + e.v + "} label " +
                          std::to_string(e.label) + ")");
      }
    }
  }

  std::vector<std::string> header;
  {
    std::ostringstream os;
    os << "# generated: vertices=" << opt.vertices << " seed=" << opt.seed
       << " edge_prob=" << opt.edge_prob << " f_pool=";
    for (std::size_t i = 0; i < opt.f_pool.size(); ++i)
      os << (i ? "," : "") << opt.f_pool[i].str();
    os << " m_pool=";
    for (std::size_t i = 0; i < opt.m_pool.size(); ++i)
      os << (i ? "," : "") << opt.m_pool[i];
    header.push_back(os.str());
  }
  header.insert(header.end(), repairs.begin(), repairs.end());

  std::vector<VertexDecl> vs;
  for (const auto& name : names) vs.emplace_back(name, order.at(name));
  return DygDocument{std::move(header), make_dyer(vs, edges)};
}

}  // namespace dyer::io
