// Finite groups as explicit multiplication tables (the regular
// representation read off a coset table over the trivial subgroup), and
// the derived series computed by commutator-set closure.

#pragma once

#include <random>

#include "dyer/coset_table.hpp"

namespace dyer::oracle {

struct FiniteGroupTable {
  int n = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  std::vector<int> gen_image;
  int identity = 0;

  bool abelian() const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (mul[a][b] != mul[b][a]) return false;
    return true;
  }
};

/// Regular-representation table of the group enumerated by a coset table
/// over the trivial subgroup.  Associativity is sampled exhaustively for
/// n <= 512 and on 1e5 random triples beyond that; identity and inverses
/// are checked exactly.
inline FiniteGroupTable finite_group_table(const CosetTable& t) {
  FiniteGroupTable gt;
  gt.n = t.size();
  gt.mul.assign(gt.n, std::vector<int>(gt.n, -1));
  for (int a = 0; a < gt.n; ++a)
    for (int b = 0; b < gt.n; ++b) gt.mul[a][b] = t.trace(a, t.transversal[b]);

  gt.inv.assign(gt.n, -1);
  for (int a = 0; a < gt.n; ++a) {
    for (int b = 0; b < gt.n; ++b)
      if (gt.mul[a][b] == 0) {
        gt.inv[a] = b;
        break;
      }
    if (gt.inv[a] < 0 || gt.mul[gt.inv[a]][a] != 0)
      throw Error("group table has a one-sided inverse");
  }
  for (int g = 0; g < t.ngens; ++g) gt.gen_image.push_back(t.fwd[0][g]);

  for (int a = 0; a < gt.n; ++a)
    if (gt.mul[0][a] != a || gt.mul[a][0] != a)
      throw Error("coset 0 is not the identity of the group table");

  auto check = [&](int a, int b, int c) {
    return gt.mul[gt.mul[a][b]][c] == gt.mul[a][gt.mul[b][c]];
  };
  if (gt.n <= 512) {
    for (int a = 0; a < gt.n; ++a)
      for (int b = 0; b < gt.n; ++b)
        for (int c = 0; c < gt.n; ++c)
          if (!check(a, b, c)) throw Error("group table is not associative");
  } else {
    std::mt19937_64 rng(0xd1e5);
    for (int k = 0; k < 100000; ++k) {
      int a = static_cast<int>(rng() % gt.n);
      int b = static_cast<int>(rng() % gt.n);
      int c = static_cast<int>(rng() % gt.n);
      if (!check(a, b, c)) throw Error("group table is not associative");
    }
  }
  return gt;
}

namespace detail_table {

// Subgroup generated by the commutators of the elements of H, by
// breadth-first multiplication closure.
inline std::vector<int> commutator_subgroup(const FiniteGroupTable& gt,
                                            const std::vector<int>& h) {
  std::vector<char> member(gt.n, 0);
  std::vector<int> elements{gt.identity};
  member[gt.identity] = 1;

  std::deque<int> queue;
  auto add = [&](int x) {
    if (!member[x]) {
      member[x] = 1;
      elements.push_back(x);
      queue.push_back(x);
    }
  };
  for (int x : h)
    for (int y : h) {
      const int c = gt.mul[gt.mul[gt.mul[x][y]][gt.inv[x]]][gt.inv[y]];
      add(c);
    }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    // elements grows while iterating; index loop keeps it exhaustive
    for (std::size_t i = 0; i < elements.size(); ++i) {
      add(gt.mul[x][elements[i]]);
      add(gt.mul[elements[i]][x]);
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace detail_table

/// Derived length: the first i with G^(i) = G^(i+1) (0 for perfect or
/// trivial groups, 1 for nontrivial abelian ones).
inline int derived_length_finite(const FiniteGroupTable& gt) {
  std::vector<int> current(gt.n);
  for (int i = 0; i < gt.n; ++i) current[i] = i;
  int i = 0;
  while (true) {
    auto next = detail_table::commutator_subgroup(gt, current);
    if (next == current) return i;
    current = std::move(next);
    ++i;
  }
}

/// Element counts of the derived series down to stabilization, starting
/// with |G|.
inline std::vector<std::size_t> derived_series_sizes(const FiniteGroupTable& gt) {
  std::vector<std::size_t> sizes;
  std::vector<int> current(gt.n);
  for (int i = 0; i < gt.n; ++i) current[i] = i;
  sizes.push_back(current.size());
  while (true) {
    auto next = detail_table::commutator_subgroup(gt, current);
    if (next == current) break;
    sizes.push_back(next.size());
    current = std::move(next);
  }
  return sizes;
}

}  // namespace dyer::oracle
