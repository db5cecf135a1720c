// The literal-computation oracle: decides quasi-perfectness of a Dyer
// group with finite vertex orders by checking that the abelianization of
// its derived subgroup (obtained by Reidemeister-Schreier rewriting over
// the derived-subgroup coset table) is trivial.

#pragma once

#include "dyer/classify.hpp"
#include "dyer/group_table.hpp"
#include "dyer/rewriting.hpp"

namespace dyer::oracle {

/// G is quasi-perfect iff G'/G'' is trivial.  Requires every vertex order
/// finite (otherwise G' has infinite index and the rewriting route does
/// not apply); throws InfiniteAbelianizationError in that case.
inline bool oracle_quasi_perfect(const DyerGraph& g) {
  for (const auto& [name, f] : g.vertices())
    if (f.is_inf()) throw InfiniteAbelianizationError();
  const auto p = build_presentation(g);
  const auto table = derived_subgroup_coset_table(p);
  const auto subgroup = reidemeister_schreier(p, table);
  return abelianize_snf(subgroup).trivial();
}

/// Abelian invariants of the derived subgroup G'/G''; same applicability
/// condition as oracle_quasi_perfect.
inline AbelianInvariants derived_subgroup_abelianization(const DyerGraph& g) {
  for (const auto& [name, f] : g.vertices())
    if (f.is_inf()) throw InfiniteAbelianizationError();
  const auto p = build_presentation(g);
  const auto table = derived_subgroup_coset_table(p);
  return abelianize_snf(reidemeister_schreier(p, table));
}

}  // namespace dyer::oracle
