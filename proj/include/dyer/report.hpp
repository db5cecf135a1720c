// Classification reports: every classifier verdict for one graph, with
// witnesses re-validated against the echoed graph, in deterministic text
// and JSON (schema 1) forms.  The oracle section is optional and carries
// an explicit inapplicability marker when some vertex order is infinite.

#pragma once

#include <json.hpp>

#include "dyer/dyg.hpp"
#include "dyer/oracle.hpp"

namespace dyer::io {

struct OracleSection {
  bool applicable = false;
  std::string reason;  // set iff not applicable
  oracle::AbelianInvariants group_abelianization;
  oracle::AbelianInvariants derived_abelianization;  // of G'
  std::uint64_t derived_subgroup_index = 0;          // cosets of G'
  bool quasi_perfect = false;
  bool agreement = false;  // oracle verdict == classifier verdict
};

struct ClassificationReport {
  DyerGraph graph;
  bool even = false;
  QuasiPerfectVerdict quasi_perfect;
  VirtuallyFreeVerdict virtually_free;
  std::vector<VertexOrder> abelianization;
  std::optional<DerivedLengthClass> graph_product_dl;  // all labels 2 only
  EvenQuotient even_quotient;
  std::optional<OracleSection> oracle;
};

inline ClassificationReport classify_graph(const DyerGraph& g,
                                           bool with_oracle) {
  ClassificationReport r{g,
                         is_even(g),
                         is_quasi_perfect(g),
                         is_virtually_free(g),
                         abelianization_invariants(g),
                         std::nullopt,
                         even_quotient(g),
                         std::nullopt};
  if (!verify_quasi_perfect_verdict(g, r.quasi_perfect) ||
      !verify_virtually_free_verdict(g, r.virtually_free))
    throw Error("verdict witness failed re-validation");

  bool all_two = true;
  for (const auto& [key, m] : g.edges())
    if (m != 2) all_two = false;
  if (all_two) r.graph_product_dl = graph_product_derived_length(g);

  if (with_oracle) {
    OracleSection section;
    bool finite = true;
    for (const auto& [name, f] : g.vertices())
      if (f.is_inf()) finite = false;
    if (!finite) {
      section.applicable = false;
      section.reason = "inapplicable: infinite abelianization";
    } else {
      const auto p = oracle::build_presentation(g);
      section.applicable = true;
      section.group_abelianization = oracle::abelianize_snf(p);
      const auto table = oracle::derived_subgroup_coset_table(p);
      section.derived_subgroup_index = table.size();
      section.derived_abelianization =
          oracle::abelianize_snf(oracle::reidemeister_schreier(p, table));
      section.quasi_perfect = section.derived_abelianization.trivial();
      section.agreement = section.quasi_perfect == r.quasi_perfect.result;
    }
    r.oracle = std::move(section);
  }
  return r;
}

namespace detail_report {

inline nlohmann::ordered_json order_value(VertexOrder f) {
  if (f.is_inf()) return "inf";
  return f.finite_value();
}

inline nlohmann::ordered_json invariants_json(
    const oracle::AbelianInvariants& inv) {
  nlohmann::ordered_json j;
  j["torsion"] = inv.torsion;
  j["free_rank"] = inv.free_rank;
  return j;
}

inline nlohmann::ordered_json quasi_perfect_json(const QuasiPerfectVerdict& v) {
  nlohmann::ordered_json j;
  j["result"] = v.result;
  if (!v.failure) {
    j["witness"] = nullptr;
    return j;
  }
  nlohmann::ordered_json w;
  if (const auto* fp = std::get_if<QuasiPerfectFailPrime>(&*v.failure)) {
    w["kind"] = "fail_prime";
    w["part"] = fp->part;
    w["prime"] = fp->prime;
    w["disconnection"] = fp->disconnection;
  } else {
    const auto& pair = std::get<QuasiPerfectFailPair>(*v.failure);
    w["kind"] = "fail_pair";
    w["i"] = pair.i;
    w["j"] = pair.j;
  }
  j["witness"] = std::move(w);
  return j;
}

inline nlohmann::ordered_json virtually_free_json(
    const VirtuallyFreeVerdict& v) {
  nlohmann::ordered_json j;
  j["result"] = v.result;
  if (!v.failed_condition) {
    j["witness"] = nullptr;
    return j;
  }
  nlohmann::ordered_json w;
  const auto& f = *v.failed_condition;
  if (const auto* e = std::get_if<InfiniteOrderEdge>(&f)) {
    w["kind"] = "infinite_order_edge";
    w["v"] = e->v;
    w["w"] = e->w;
  } else if (const auto* t = std::get_if<MissingTriangle>(&f)) {
    w["kind"] = "missing_triangle";
    w["u"] = t->u;
    w["v"] = t->v;
    w["w"] = t->w;
  } else if (const auto* c = std::get_if<NotChordal>(&f)) {
    w["kind"] = "not_chordal";
    w["cycle"] = c->cycle;
  } else {
    const auto& clique = std::get<InfiniteCoxeterClique>(f);
    w["kind"] = "infinite_coxeter_clique";
    w["clique"] = clique.clique;
    w["reason"] = clique.reason;
  }
  j["witness"] = std::move(w);
  return j;
}

}  // namespace detail_report

inline nlohmann::ordered_json report_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["graph"] = canonical_print(r.graph);
  j["even"] = r.even;
  j["quasi_perfect"] = detail_report::quasi_perfect_json(r.quasi_perfect);
  j["virtually_free"] = detail_report::virtually_free_json(r.virtually_free);
  nlohmann::ordered_json ab = nlohmann::ordered_json::array();
  for (const auto& f : r.abelianization)
    ab.push_back(detail_report::order_value(f));
  j["abelianization"] = std::move(ab);
  if (r.graph_product_dl) {
    if (*r.graph_product_dl == DerivedLengthClass::Infinite)
      j["graph_product_dl"] = "inf";
    else
      j["graph_product_dl"] = static_cast<int>(*r.graph_product_dl);
  }
  j["even_quotient"] = canonical_print(r.even_quotient.graph);
  if (r.oracle) {
    nlohmann::ordered_json o;
    o["applicable"] = r.oracle->applicable;
    if (!r.oracle->applicable) {
      o["reason"] = r.oracle->reason;
    } else {
      o["abelian_invariants"] =
          detail_report::invariants_json(r.oracle->group_abelianization);
      o["derived_subgroup_abelianization"] =
          detail_report::invariants_json(r.oracle->derived_abelianization);
      o["derived_subgroup_index"] = r.oracle->derived_subgroup_index;
      o["quasi_perfect"] = r.oracle->quasi_perfect;
      o["agreement"] = r.oracle->agreement;
    }
    j["oracle"] = std::move(o);
  }
  return j;
}

inline std::string report_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "graph:\n";
  std::istringstream graph(canonical_print(r.graph));
  std::string line;
  while (std::getline(graph, line)) os << "  " << line << "\n";
  os << "even: " << (r.even ? "true" : "false") << "\n";

  os << "quasi_perfect: " << (r.quasi_perfect.result ? "true" : "false") << "\n";
  if (r.quasi_perfect.failure) {
    if (const auto* fp =
            std::get_if<QuasiPerfectFailPrime>(&*r.quasi_perfect.failure)) {
      os << "  witness: component " << fp->part << " disconnects at prime "
         << fp->prime << ":";
      for (const auto& comp : fp->disconnection) {
        os << " {";
        for (std::size_t i = 0; i < comp.size(); ++i)
          os << (i ? "," : "") << comp[i];
        os << "}";
      }
      os << "\n";
    } else {
      const auto& pair = std::get<QuasiPerfectFailPair>(*r.quasi_perfect.failure);
      os << "  witness: components " << pair.i << " and " << pair.j
         << " share no edge of label 2\n";
    }
  }

  os << "virtually_free: " << (r.virtually_free.result ? "true" : "false")
     << "\n";
  if (r.virtually_free.failed_condition) {
    const auto& f = *r.virtually_free.failed_condition;
    if (const auto* e = std::get_if<InfiniteOrderEdge>(&f))
      os << "  witness: edge {" << e->v << "," << e->w
         << "} joins two infinite-order vertices\n";
    else if (const auto* t = std::get_if<MissingTriangle>(&f))
      os << "  witness: " << t->v << "," << t->w
         << " are non-adjacent finite-order neighbors of " << t->u << "\n";
    else if (const auto* c = std::get_if<NotChordal>(&f)) {
      os << "  witness: chordless cycle";
      for (const auto& v : c->cycle) os << " " << v;
      os << "\n";
    } else {
      const auto& clique = std::get<InfiniteCoxeterClique>(f);
      os << "  witness: clique {";
      for (std::size_t i = 0; i < clique.clique.size(); ++i)
        os << (i ? "," : "") << clique.clique[i];
      os << "} presents an infinite Coxeter group (" << clique.reason << ")\n";
    }
  }

  os << "abelianization:";
  for (const auto& f : r.abelianization) os << " " << f.str();
  os << "\n";
  if (r.graph_product_dl)
    os << "graph_product_dl: " << str(*r.graph_product_dl) << "\n";
  os << "even_quotient:\n";
  std::istringstream quot(canonical_print(r.even_quotient.graph));
  while (std::getline(quot, line)) os << "  " << line << "\n";

  if (r.oracle) {
    os << "oracle:\n";
    if (!r.oracle->applicable) {
      os << "  " << r.oracle->reason << "\n";
    } else {
      auto show = [&](const oracle::AbelianInvariants& inv) {
        std::ostringstream s;
        s << "torsion [";
        for (std::size_t i = 0; i < inv.torsion.size(); ++i)
          s << (i ? "," : "") << inv.torsion[i];
        s << "] free_rank " << inv.free_rank;
        return s.str();
      };
      os << "  abelian_invariants: " << show(r.oracle->group_abelianization)
         << "\n";
      os << "  derived_subgroup_index: " << r.oracle->derived_subgroup_index
         << "\n";
      os << "  derived_subgroup_abelianization: "
         << show(r.oracle->derived_abelianization) << "\n";
      os << "  quasi_perfect: " << (r.oracle->quasi_perfect ? "true" : "false")
         << "\n";
      os << "  agreement: " << (r.oracle->agreement ? "true" : "false") << "\n";
    }
  }
  return os.str();
}

}  // namespace dyer::io
