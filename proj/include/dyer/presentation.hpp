// Group presentations extracted from Dyer graphs: one generator per vertex
// (lexicographic order), an order relator v^f(v) for each finite-order
// vertex, and for each edge the braid-style relator
// pi(v,w,m) * pi(w,v,m)^-1, where pi(a,b,n) is the alternating word
// abab... of length n.

#pragma once

#include "dyer/graph.hpp"

namespace dyer::oracle {

// A letter is +(i+1) for generator i and -(i+1) for its inverse.
using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) out.pop_back();
    else out.push_back(letter);
  }
  return out;
}

inline Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Alternating word abab... with n letters (generators as 0-based indices).
inline Word pi_word(int a, int b, int n) {
  Word out;
  for (int i = 0; i < n; ++i) out.push_back((i % 2 == 0 ? a : b) + 1);
  return out;
}

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // freely reduced

  int generator_index(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end()) throw UnknownVertexError(name);
    return static_cast<int>(it - generators.begin());
  }
};

inline GroupPresentation build_presentation(const DyerGraph& g) {
  GroupPresentation p;
  p.generators = g.vertex_names();
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(p.generators.size()); ++i)
    index[p.generators[i]] = i;

  for (const auto& [name, f] : g.vertices()) {
    if (f.is_inf()) continue;
    Word w(f.finite_value(), index.at(name) + 1);
    p.relators.push_back(std::move(w));
  }
  for (const auto& [key, m] : g.edges()) {
    const int v = index.at(key.first), w = index.at(key.second);
    Word relator = free_reduce(
        concat(pi_word(v, w, m), inverse_word(pi_word(w, v, m))));
    p.relators.push_back(std::move(relator));
  }
  return p;
}

}  // namespace dyer::oracle
