// Reidemeister-Schreier rewriting: a presentation of the subgroup at coset
// 0 of a complete coset table, on Schreier generators s(c,g) with the
// transversal-trivial ones deleted.  Relators are the rewritten conjugates
// t_c r t_c^-1 of the parent relators over all cosets, freely reduced.

#pragma once

#include "dyer/coset_table.hpp"

namespace dyer::oracle {

inline GroupPresentation reidemeister_schreier(const GroupPresentation& p,
                                               const CosetTable& t) {
  verify_complete(t, p);
  const int n = static_cast<int>(p.generators.size());
  const int cosets = t.size();

  // s(c,g) = t_c g t_{c.g}^-1; trivial exactly when that word freely
  // reduces to nothing (tree edges of the Schreier transversal).
  std::vector<std::vector<int>> sgen_index(cosets, std::vector<int>(n, -1));
  GroupPresentation out;
  for (int c = 0; c < cosets; ++c)
    for (int g = 0; g < n; ++g) {
      Word w = t.transversal[c];
      w.push_back(g + 1);
      w = concat(std::move(w), inverse_word(t.transversal[t.fwd[c][g]]));
      if (free_reduce(w).empty()) continue;
      sgen_index[c][g] = static_cast<int>(out.generators.size());
      out.generators.push_back("s" + std::to_string(c) + "_" +
                               p.generators[g]);
    }

  for (const auto& relator : p.relators) {
    for (int c = 0; c < cosets; ++c) {
      Word rewritten;
      int cur = c;
      for (int letter : relator) {
        if (letter > 0) {
          const int g = letter - 1;
          if (sgen_index[cur][g] >= 0)
            rewritten.push_back(sgen_index[cur][g] + 1);
          cur = t.fwd[cur][g];
        } else {
          const int g = -letter - 1;
          const int prev = t.bwd[cur][g];
          if (sgen_index[prev][g] >= 0)
            rewritten.push_back(-(sgen_index[prev][g] + 1));
          cur = prev;
        }
      }
      if (cur != c)
        throw IncompatibleTableError("relator trace left its starting coset");
      rewritten = free_reduce(rewritten);
      if (!rewritten.empty()) out.relators.push_back(std::move(rewritten));
    }
  }

  // One trivial Schreier generator per transversal tree edge, so with
  // N cosets and n parent generators exactly n*N - N + 1 >= 1 remain.
  if (out.generators.empty())
    throw Error("subgroup presentation lost all generators");
  return out;
}

}  // namespace dyer::oracle
