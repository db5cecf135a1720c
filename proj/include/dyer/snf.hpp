// Integer Smith normal form and abelianization invariants.  The dense
// routine uses smallest-nonzero-pivot selection with full row/column
// reduction over arbitrary-precision integers, with balanced remainders
// to keep intermediate entries small.  abelianize_snf triangularizes the
// (large, sparse) exponent matrices produced by subgroup rewriting into a
// Hermite-style basis first, so the dense routine only ever sees a small
// normalized core.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>

#include "dyer/presentation.hpp"

namespace dyer::oracle {

using BigInt = boost::multiprecision::cpp_int;

struct AbelianInvariants {
  std::vector<std::uint64_t> torsion;  // each entry divides the next
  int free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }

  // Group order; only meaningful when free_rank == 0.
  BigInt order() const {
    BigInt out = 1;
    for (auto d : torsion) out *= d;
    return out;
  }

  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.torsion == b.torsion && a.free_rank == b.free_rank;
  }
};

namespace detail_snf {

inline BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Balanced quotient: b = q*a + r with r in (-a/2, a/2], a > 0.
inline BigInt balanced_quotient(const BigInt& b, const BigInt& a) {
  BigInt q = b / a;
  BigInt r = b - q * a;
  if (2 * r > a) ++q;
  else if (2 * r <= -a) --q;
  return q;
}

// Core dense SNF; optionally accumulates the column transform V
// (D = U * M * V) for translating generators into diagonal coordinates.
inline std::vector<BigInt> smith_core(std::vector<std::vector<BigInt>>& m,
                                      std::vector<std::vector<BigInt>>* vt) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  if (vt) {
    vt->assign(cols, std::vector<BigInt>(cols, 0));
    for (int i = 0; i < cols; ++i) (*vt)[i][i] = 1;
  }

  auto swap_rows = [&](int a, int b) { std::swap(m[a], m[b]); };
  auto swap_cols = [&](int a, int b) {
    for (auto& row : m) std::swap(row[a], row[b]);
    if (vt)
      for (auto& row : *vt) std::swap(row[a], row[b]);
  };
  auto add_col = [&](int dst, int src, const BigInt& factor) {
    for (auto& row : m) row[dst] += factor * row[src];
    if (vt)
      for (auto& row : *vt) row[dst] += factor * row[src];
  };
  auto add_row = [&](int dst, int src, const BigInt& factor) {
    for (int j = 0; j < cols; ++j) m[dst][j] += factor * m[src][j];
  };

  std::vector<BigInt> diag;
  int t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the remaining block becomes the pivot.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (pi < 0 || abs_big(m[i][j]) < abs_big(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    if (m[t][t] < 0)
      for (int j = t; j < cols; ++j) m[t][j] = -m[t][j];

    bool clean = false;
    while (!clean) {
      clean = true;
      const BigInt pivot = m[t][t];
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = balanced_quotient(m[i][t], pivot);
        if (q != 0) add_row(i, t, -q);
        if (m[i][t] != 0) {
          swap_rows(t, i);  // remainder is smaller; restart reduction
          clean = false;
          break;
        }
      }
      if (!clean) {
        if (m[t][t] < 0)
          for (int j = t; j < cols; ++j) m[t][j] = -m[t][j];
        continue;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = balanced_quotient(m[t][j], pivot);
        if (q != 0) add_col(j, t, -q);
        if (m[t][j] != 0) {
          swap_cols(t, j);
          clean = false;
          break;
        }
      }
      if (!clean) {
        if (m[t][t] < 0) {
          for (int j = t; j < cols; ++j) m[t][j] = -m[t][j];
          // column sign flip is a row operation here; keep V untouched
        }
        continue;
      }
      // Divisibility: the pivot must divide every remaining entry.
      for (int i = t + 1; i < rows && clean; ++i)
        for (int j = t + 1; j < cols && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            add_row(t, i, 1);
            clean = false;
          }
    }
    if (m[t][t] < 0)
      for (int j = t; j < cols; ++j) m[t][j] = -m[t][j];
    diag.push_back(m[t][t]);
    ++t;
  }
  return diag;
}

}  // namespace detail_snf

/// Smith normal form diagonal (nonzero entries, in divisibility order).
inline std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m) {
  return detail_snf::smith_core(m, nullptr);
}

struct SmithTransform {
  std::vector<BigInt> diagonal;
  std::vector<std::vector<BigInt>> column_transform;  // V with D = U M V
};

inline SmithTransform smith_with_column_transform(
    std::vector<std::vector<BigInt>> m) {
  SmithTransform out;
  out.diagonal = detail_snf::smith_core(m, &out.column_transform);
  return out;
}

/// Exponent-sum matrix of a presentation: one row per relator, one column
/// per generator.
inline std::vector<std::vector<BigInt>> exponent_matrix(
    const GroupPresentation& p) {
  const int n = static_cast<int>(p.generators.size());
  std::vector<std::vector<BigInt>> m;
  for (const auto& relator : p.relators) {
    std::vector<BigInt> row(n, 0);
    for (int letter : relator) row[std::abs(letter) - 1] += (letter > 0 ? 1 : -1);
    m.push_back(std::move(row));
  }
  return m;
}

namespace detail_snf {

// Raised by the 64-bit fast path when an operation would overflow; the
// caller restarts the whole computation with arbitrary precision.
struct OverflowSignal {};

template <typename Int>
struct Scalar;

template <>
struct Scalar<std::int64_t> {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowSignal{};
    return out;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowSignal{};
    return out;
  }
  static std::int64_t neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowSignal{};
    return -a;
  }
  static std::int64_t balanced_quotient(std::int64_t b, std::int64_t a) {
    std::int64_t q = b / a;
    const std::int64_t r = b - q * a;  // |r| < a, exact
    if (r > a - r) ++q;                // 2r > a without overflow risk
    else if (-r >= a + r) --q;         // 2r <= -a
    return q;
  }
};

template <>
struct Scalar<BigInt> {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt neg(const BigInt& a) { return -a; }
  static BigInt balanced_quotient(const BigInt& b, const BigInt& a) {
    return detail_snf::balanced_quotient(b, a);
  }
};

// Sparse row: sorted (column, value) pairs, no zero values.
template <typename Int>
using SparseRow = std::vector<std::pair<int, Int>>;

// dst - q * src, merging sorted entries and dropping zeros.
template <typename Int>
SparseRow<Int> row_submul(const SparseRow<Int>& dst, const Int& q,
                          const SparseRow<Int>& src) {
  SparseRow<Int> out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == dst.end() || b->first < a->first) {
      Int v = Scalar<Int>::neg(Scalar<Int>::mul(q, b->second));
      if (v != 0) out.emplace_back(b->first, std::move(v));
      ++b;
    } else {
      Int v = Scalar<Int>::sub(a->second, Scalar<Int>::mul(q, b->second));
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

// Triangularizes rows into a Hermite-style basis (one row per pivot
// column, positive lead).  When every lead is a unit the cokernel is
// torsion-free and the answer is immediate; otherwise the basis is
// normalized and the few non-unit rows go through the dense routine.
template <typename Int>
AbelianInvariants invariants_from_sparse_impl(std::vector<SparseRow<Int>> rows,
                                              int cols) {
  std::vector<std::optional<SparseRow<Int>>> basis(cols);

  // Short rows first keeps the basis sparse.
  std::sort(rows.begin(), rows.end(),
            [](const SparseRow<Int>& a, const SparseRow<Int>& b) {
              return a.size() < b.size();
            });

  auto negate = [](SparseRow<Int>& row) {
    for (auto& [col, v] : row) v = Scalar<Int>::neg(v);
  };

  for (auto& incoming : rows) {
    SparseRow<Int> row = std::move(incoming);
    while (!row.empty()) {
      const int c = row.front().first;
      if (!basis[c]) {
        if (row.front().second < 0) negate(row);
        basis[c] = std::move(row);
        break;
      }
      const Int& lead = (*basis[c]).front().second;  // > 0
      const Int q = Scalar<Int>::balanced_quotient(row.front().second, lead);
      row = row_submul(row, q, *basis[c]);
      if (!row.empty() && row.front().first == c) {
        // Nonzero remainder at the pivot column: swap the smaller lead
        // into the basis and keep reducing (Euclid descent).
        if (row.front().second < 0) negate(row);
        std::swap(*basis[c], row);
      }
    }
  }

  int pivots = 0;
  bool all_unit = true;
  for (const auto& row : basis)
    if (row) {
      ++pivots;
      if ((*row).front().second != 1) all_unit = false;
    }

  AbelianInvariants out;
  out.free_rank = cols - pivots;
  if (all_unit) return out;  // unit triangular basis: no torsion

  // Normalization pass: reduce every entry sitting under another pivot,
  // descending lead order so reducers are already final.  Afterwards a
  // unit-lead row is zero at every other pivot column, so it splits off
  // and only the non-unit rows feed the dense core.
  for (int c = cols - 1; c >= 0; --c) {
    if (!basis[c]) continue;
    auto& row = *basis[c];
    std::size_t at = 1;
    while (at < row.size()) {
      const int col = row[at].first;
      if (!basis[col]) {
        ++at;
        continue;
      }
      const Int q = Scalar<Int>::balanced_quotient(
          row[at].second, (*basis[col]).front().second);
      if (q != 0) row = row_submul(row, q, *basis[col]);
      // The reduced entry may have vanished, shifting later entries down.
      if (at < row.size() && row[at].first == col) ++at;
    }
  }

  std::vector<const SparseRow<Int>*> core_rows;
  std::set<int> seen_cols;
  for (const auto& row : basis) {
    if (!row || (*row).front().second == 1) continue;
    core_rows.push_back(&*row);
    for (const auto& [col, v] : *row) seen_cols.insert(col);
  }
  std::map<int, int> col_index;
  for (int col : seen_cols)
    col_index.emplace(col, static_cast<int>(col_index.size()));

  std::vector<std::vector<BigInt>> dense;
  for (const auto* row : core_rows) {
    std::vector<BigInt> drow(col_index.size(), 0);
    for (const auto& [col, v] : *row) drow[col_index.at(col)] = v;
    dense.push_back(std::move(drow));
  }
  if (!dense.empty())
    for (const auto& d : smith_core(dense, nullptr))
      if (d >= 2) out.torsion.push_back(static_cast<std::uint64_t>(d));
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

inline AbelianInvariants invariants_from_sparse(
    const std::vector<SparseRow<std::int64_t>>& rows, int cols) {
  try {
    return invariants_from_sparse_impl(rows, cols);
  } catch (const OverflowSignal&) {
    // Exceptional: redo everything in arbitrary precision.
  }
  std::vector<SparseRow<BigInt>> big;
  for (const auto& row : rows) {
    SparseRow<BigInt> brow;
    for (const auto& [c, v] : row) brow.emplace_back(c, v);
    big.push_back(std::move(brow));
  }
  return invariants_from_sparse_impl(std::move(big), cols);
}

}  // namespace detail_snf

/// Abelian invariants of the group presented by p, via Smith normal form
/// of the exponent-sum matrix.
inline AbelianInvariants abelianize_snf(const GroupPresentation& p) {
  const int cols = static_cast<int>(p.generators.size());
  std::set<detail_snf::SparseRow<std::int64_t>> unique_rows;
  for (const auto& relator : p.relators) {
    std::map<int, std::int64_t> sums;
    for (int letter : relator) sums[std::abs(letter) - 1] += (letter > 0 ? 1 : -1);
    detail_snf::SparseRow<std::int64_t> row;
    for (const auto& [c, v] : sums)
      if (v != 0) row.emplace_back(c, v);
    if (!row.empty()) unique_rows.insert(std::move(row));
  }
  std::vector<detail_snf::SparseRow<std::int64_t>> rows(unique_rows.begin(),
                                                        unique_rows.end());
  return detail_snf::invariants_from_sparse(rows, cols);
}

/// Invariant factors of a finite-or-free product of cyclic groups given by
/// their orders (infinite order contributes a free factor).  Used to put
/// the per-component abelianization into divisibility-chain form.
inline AbelianInvariants invariants_from_cyclic_orders(
    const std::vector<VertexOrder>& orders) {
  AbelianInvariants out;
  std::map<std::uint64_t, std::vector<std::uint64_t>> prime_powers;
  for (const auto& f : orders) {
    if (f.is_inf()) {
      ++out.free_rank;
      continue;
    }
    std::uint64_t n = f.finite_value();
    for (std::uint64_t q = 2; q * q <= n; ++q) {
      if (n % q != 0) continue;
      std::uint64_t power = 1;
      while (n % q == 0) {
        power *= q;
        n /= q;
      }
      prime_powers[q].push_back(power);
    }
    if (n > 1) prime_powers[n].push_back(n);
  }
  std::size_t chain_length = 0;
  for (auto& [q, powers] : prime_powers) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    chain_length = std::max(chain_length, powers.size());
  }
  std::vector<std::uint64_t> chain(chain_length, 1);  // descending order
  for (auto& [q, powers] : prime_powers)
    for (std::size_t i = 0; i < powers.size(); ++i) chain[i] *= powers[i];
  out.torsion.assign(chain.rbegin(), chain.rend());
  return out;
}

}  // namespace dyer::oracle
