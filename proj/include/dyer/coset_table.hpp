// Coset tables: the tabulated action of generators on subgroup cosets.
// Two producers live here.  derived_subgroup_coset_table builds the table
// of the commutator subgroup directly from the abelianization (cosets of
// G' biject with abelianization elements; generators act by translation),
// with no enumeration.  todd_coxeter is an HLT-strategy enumerator over
// the trivial subgroup with immediate coincidence processing, used to
// certify finiteness and to realize groups as regular permutation tables.

#pragma once

#include "dyer/snf.hpp"

namespace dyer::oracle {

class InfiniteAbelianizationError : public Error {
public:
  InfiniteAbelianizationError()
      : Error("abelianization is infinite; derived-subgroup cosets are not "
              "enumerable") {}
};

class IncompatibleTableError : public Error {
public:
  explicit IncompatibleTableError(const std::string& what) : Error(what) {}
};

struct CosetTable {
  int ngens = 0;
  std::vector<std::vector<int>> fwd;  // [coset][gen] -> coset
  std::vector<std::vector<int>> bwd;  // inverse action
  std::vector<Word> transversal;      // coset 0 representative words

  int size() const { return static_cast<int>(fwd.size()); }

  int apply_letter(int coset, int letter) const {
    return letter > 0 ? fwd[coset][letter - 1] : bwd[coset][-letter - 1];
  }

  int trace(int coset, const Word& w) const {
    for (int letter : w) coset = apply_letter(coset, letter);
    return coset;
  }
};

/// Checks completeness and relator compatibility: every generator acts as
/// a permutation and every relator fixes every coset.  Throws
/// IncompatibleTableError on failure.
inline void verify_complete(const CosetTable& t, const GroupPresentation& p) {
  const int n = t.size();
  if (t.ngens != static_cast<int>(p.generators.size()))
    throw IncompatibleTableError("generator count mismatch");
  for (int g = 0; g < t.ngens; ++g) {
    std::vector<char> hit(n, 0);
    for (int c = 0; c < n; ++c) {
      const int d = t.fwd[c][g];
      if (d < 0 || d >= n || hit[d])
        throw IncompatibleTableError("generator column is not a permutation");
      hit[d] = 1;
      if (t.bwd[d][g] != c)
        throw IncompatibleTableError("inverse action disagrees");
    }
  }
  for (const auto& relator : p.relators)
    for (int c = 0; c < n; ++c)
      if (t.trace(c, relator) != c)
        throw IncompatibleTableError("relator does not fix every coset");
  if (n > 0 && !t.transversal.empty()) {
    for (int c = 0; c < n; ++c)
      if (t.trace(0, t.transversal[c]) != c)
        throw IncompatibleTableError("transversal word misses its coset");
  }
}

namespace detail_coset {

// Breadth-first transversal over generator letters (g before g^-1,
// generators in index order); Schreier (prefix-closed) by construction.
inline void fill_transversal(CosetTable& t) {
  const int n = t.size();
  t.transversal.assign(n, {});
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int g = 0; g < t.ngens; ++g) {
      for (int letter : {g + 1, -(g + 1)}) {
        int d = t.apply_letter(c, letter);
        if (!seen[d]) {
          seen[d] = 1;
          t.transversal[d] = t.transversal[c];
          t.transversal[d].push_back(letter);
          queue.push_back(d);
        }
      }
    }
  }
}

}  // namespace detail_coset

/// Coset table of the derived subgroup.  Requires a finite abelianization;
/// cosets are its elements in breadth-first discovery order (identity
/// first), and each generator acts by translation by its image.
inline CosetTable derived_subgroup_coset_table(const GroupPresentation& p) {
  const int n = static_cast<int>(p.generators.size());
  auto snf = smith_with_column_transform(exponent_matrix(p));

  // Moduli for all n generator coordinates; a coordinate beyond the
  // diagonal (or with diagonal 0) is free.
  std::vector<std::uint64_t> moduli;
  int rank = 0;
  for (const auto& d : snf.diagonal)
    if (d != 0) ++rank;
  if (rank < n) throw InfiniteAbelianizationError();
  for (const auto& d : snf.diagonal)
    moduli.push_back(static_cast<std::uint64_t>(d));

  std::vector<int> live_coords;
  std::uint64_t order = 1;
  for (int i = 0; i < n; ++i) {
    if (moduli[i] == 1) continue;
    live_coords.push_back(i);
    if (order > (std::uint64_t(1) << 22) / moduli[i])
      throw Error("abelianization too large to tabulate");
    order *= moduli[i];
  }

  // Generator images in diagonal coordinates: row g of the column
  // transform, reduced mod the moduli.
  std::vector<std::vector<std::uint64_t>> image(n);
  for (int g = 0; g < n; ++g)
    for (int idx : live_coords) {
      BigInt v = snf.column_transform[g][idx] % BigInt(moduli[idx]);
      if (v < 0) v += moduli[idx];
      image[g].push_back(static_cast<std::uint64_t>(v));
    }

  const int k = static_cast<int>(live_coords.size());
  std::vector<std::uint64_t> radix_mod(k);
  for (int i = 0; i < k; ++i) radix_mod[i] = moduli[live_coords[i]];

  auto encode = [&](const std::vector<std::uint64_t>& tuple) {
    std::uint64_t code = 0;
    for (int i = 0; i < k; ++i) code = code * radix_mod[i] + tuple[i];
    return code;
  };

  // Breadth-first numbering from the identity over generators in order,
  // so that coset 0 is the subgroup and indices are canonical.
  std::vector<int> number(order, -1);
  std::vector<std::vector<std::uint64_t>> tuples;
  std::deque<int> queue;
  tuples.push_back(std::vector<std::uint64_t>(k, 0));
  number[encode(tuples[0])] = 0;
  queue.push_back(0);
  CosetTable t;
  t.ngens = n;
  t.fwd.emplace_back(n, -1);
  t.transversal.push_back({});
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int g = 0; g < n; ++g) {
      auto tuple = tuples[c];
      for (int i = 0; i < k; ++i)
        tuple[i] = (tuple[i] + image[g][i]) % radix_mod[i];
      const std::uint64_t code = encode(tuple);
      if (number[code] < 0) {
        number[code] = static_cast<int>(tuples.size());
        tuples.push_back(tuple);
        t.fwd.emplace_back(n, -1);
        t.transversal.push_back(t.transversal[c]);
        t.transversal.back().push_back(g + 1);
        queue.push_back(number[code]);
      }
      t.fwd[c][g] = number[code];
    }
  }
  if (static_cast<std::uint64_t>(t.size()) != order)
    throw Error("generator translations did not reach every abelianization "
                "element");

  t.bwd.assign(t.size(), std::vector<int>(n, -1));
  for (int c = 0; c < t.size(); ++c)
    for (int g = 0; g < n; ++g) t.bwd[t.fwd[c][g]][g] = c;

  verify_complete(t, p);
  return t;
}

namespace detail_coset {

// HLT enumerator state.  Columns come in generator/inverse pairs.
struct Enumerator {
  int ngens;
  int ncols;
  std::vector<std::vector<int>> tab;  // [coset][column], -1 undefined
  std::vector<int> rep;               // union-find over cosets
  std::int64_t live = 0;
  std::int64_t cap;
  std::vector<std::vector<int>> relator_cols;

  Enumerator(const GroupPresentation& p, std::int64_t max_cosets)
      : ngens(static_cast<int>(p.generators.size())),
        ncols(2 * ngens),
        cap(max_cosets) {
    for (const auto& relator : p.relators) {
      std::vector<int> cols;
      for (int letter : relator) cols.push_back(column(letter));
      if (!cols.empty()) relator_cols.push_back(std::move(cols));
    }
    new_coset();
  }

  static int inv(int col) { return col ^ 1; }
  static int column(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }

  int find(int c) {
    while (rep[c] != c) {
      rep[c] = rep[rep[c]];
      c = rep[c];
    }
    return c;
  }

  bool alive(int c) { return find(c) == c; }

  // -1 when capacity is exhausted.
  int new_coset() {
    if (live >= cap) return -1;
    tab.emplace_back(ncols, -1);
    rep.push_back(static_cast<int>(tab.size()) - 1);
    ++live;
    return static_cast<int>(tab.size()) - 1;
  }

  int get(int c, int col) {
    const int d = tab[c][col];
    return d < 0 ? -1 : find(d);
  }

  void set(int c, int col, int d) {
    tab[c][col] = d;
    tab[d][inv(col)] = c;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    rep[b] = a;
    --live;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int dead = queue.front();
      queue.pop_front();
      // Redistribute the dead row; exactly one branch per entry keeps the
      // forward/backward tables consistent.
      for (int col = 0; col < ncols; ++col) {
        const int raw = tab[dead][col];
        if (raw < 0) continue;
        if (tab[raw][inv(col)] == dead) tab[raw][inv(col)] = -1;
        const int mu = find(dead);
        const int nu = find(raw);
        const int existing_fwd = get(mu, col);
        if (existing_fwd >= 0) {
          merge(nu, existing_fwd, queue);
          continue;
        }
        const int existing_bwd = get(nu, inv(col));
        if (existing_bwd >= 0) {
          merge(mu, existing_bwd, queue);
          continue;
        }
        set(mu, col, nu);
      }
    }
  }

  // Traces one relator from coset c, defining cosets to close the cycle.
  // Returns false when capacity is exhausted.
  bool scan_and_fill(int c, const std::vector<int>& cols) {
    int f = c, i = 0;
    int b = c, j = static_cast<int>(cols.size()) - 1;
    while (true) {
      while (i <= j) {
        const int next = get(f, cols[i]);
        if (next < 0) break;
        f = next;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i) {
        const int prev = get(b, inv(cols[j]));
        if (prev < 0) break;
        b = prev;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (j == i) {
        set(f, cols[i], b);
        return true;
      }
      const int fresh = new_coset();
      if (fresh < 0) return false;
      set(f, cols[i], fresh);
    }
  }
};

}  // namespace detail_coset

/// HLT coset enumeration over the trivial subgroup.  Returns the complete,
/// standardized table when the group order fits within max_cosets live
/// cosets; std::nullopt (inconclusive) when capacity is exhausted.
inline std::optional<CosetTable> todd_coxeter(const GroupPresentation& p,
                                              std::int64_t max_cosets = 1000000) {
  if (max_cosets < 1) throw PreconditionError("max_cosets must be >= 1");
  detail_coset::Enumerator e(p, max_cosets);

  for (int current = 0; current < static_cast<int>(e.tab.size()); ++current) {
    if (!e.alive(current)) continue;
    for (const auto& cols : e.relator_cols) {
      if (!e.scan_and_fill(current, cols)) return std::nullopt;
      if (!e.alive(current)) break;
    }
    if (!e.alive(current)) continue;
    for (int col = 0; col < e.ncols; ++col) {
      if (e.get(current, col) >= 0) continue;
      const int fresh = e.new_coset();
      if (fresh < 0) return std::nullopt;
      e.set(current, col, fresh);
    }
  }

  // Compact and standardize: breadth-first renumbering from coset 0 over
  // columns in order makes the table canonical.
  std::vector<int> live;
  for (int c = 0; c < static_cast<int>(e.tab.size()); ++c)
    if (e.alive(c)) live.push_back(c);

  std::vector<int> order_of(e.tab.size(), -1);
  std::vector<int> bfs;
  bfs.push_back(e.find(0));
  order_of[bfs[0]] = 0;
  for (std::size_t at = 0; at < bfs.size(); ++at) {
    for (int col = 0; col < e.ncols; ++col) {
      const int d = e.get(bfs[at], col);
      if (d >= 0 && order_of[d] < 0) {
        order_of[d] = static_cast<int>(bfs.size());
        bfs.push_back(d);
      }
    }
  }
  if (bfs.size() != live.size())
    throw Error("enumeration finished with unreachable cosets");

  CosetTable t;
  t.ngens = e.ngens;
  t.fwd.assign(bfs.size(), std::vector<int>(e.ngens, -1));
  t.bwd.assign(bfs.size(), std::vector<int>(e.ngens, -1));
  for (std::size_t c = 0; c < bfs.size(); ++c)
    for (int g = 0; g < e.ngens; ++g) {
      const int d = e.get(bfs[c], 2 * g);
      if (d < 0) throw Error("incomplete table after enumeration");
      t.fwd[c][g] = order_of[d];
      t.bwd[order_of[d]][g] = static_cast<int>(c);
    }
  detail_coset::fill_transversal(t);
  verify_complete(t, p);
  return t;
}

}  // namespace dyer::oracle
