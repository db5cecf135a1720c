#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dyer/coset_table.hpp"
#include "dyer/random_graph.hpp"
#include "test_support.hpp"

using namespace dyer;
using namespace dyer::oracle;
using namespace testsupport;

TEST_CASE("derived subgroup table of S3 has two cosets") {
  auto p = build_presentation(graph({{"v", 2}, {"w", 2}}, {{"v", "w", 3}}));
  auto t = derived_subgroup_coset_table(p);
  REQUIRE(t.size() == 2);
  REQUIRE(t.transversal[0].empty());
  verify_complete(t, p);
}

TEST_CASE("derived subgroup table of the Klein presentation is the group") {
  auto p = build_presentation(graph({{"v", 2}, {"w", 2}}, {{"v", "w", 2}}));
  auto t = derived_subgroup_coset_table(p);
  REQUIRE(t.size() == 4);
  verify_complete(t, p);
}

TEST_CASE("infinite abelianization is a typed error") {
  auto p = build_presentation(final_figure());
  REQUIRE_THROWS_AS(derived_subgroup_coset_table(p),
                    InfiniteAbelianizationError);
}

TEST_CASE("transversal words are prefix-closed Schreier representatives") {
  auto p = build_presentation(
      graph({{"v", 3}, {"w", 4}}, {}));  // Z/3 * Z/4, abelianization Z/12
  auto t = derived_subgroup_coset_table(p);
  REQUIRE(t.size() == 12);
  for (int c = 0; c < t.size(); ++c) {
    REQUIRE(t.trace(0, t.transversal[c]) == c);
    // Every proper prefix is itself a transversal word.
    Word prefix;
    for (std::size_t i = 0; i + 1 < t.transversal[c].size(); ++i) {
      prefix.push_back(t.transversal[c][i]);
      const int at = t.trace(0, prefix);
      REQUIRE(t.transversal[at] == prefix);
    }
  }
}

TEST_CASE("todd-coxeter enumerates dihedral groups exactly") {
  for (int m = 2; m <= 12; ++m) {
    auto p = build_presentation(graph({{"v", 2}, {"w", 2}}, {{"v", "w", m}}));
    auto t = todd_coxeter(p, 1000000);
    REQUIRE(t.has_value());
    REQUIRE(t->size() == 2 * m);
    verify_complete(*t, p);
  }
}

TEST_CASE("todd-coxeter terminates with Exceeded on the affine triangle") {
  auto p = build_presentation(graph({{"a", 2}, {"b", 2}, {"c", 2}},
                                    {{"a", "b", 3},
                                     {"b", "c", 3},
                                     {"a", "c", 3}}));
  REQUIRE_FALSE(todd_coxeter(p, 100000).has_value());
}

TEST_CASE("todd-coxeter handles trivial and cyclic groups") {
  auto z5 = build_presentation(graph({{"v", 5}}, {}));
  auto t = todd_coxeter(z5, 100);
  REQUIRE(t.has_value());
  REQUIRE(t->size() == 5);

  // Group forced trivial: v = 1 from v^2 = v^3 = 1.
  GroupPresentation p;
  p.generators = {"v"};
  p.relators = {{1, 1}, {1, 1, 1}};
  auto trivial = todd_coxeter(p, 100);
  REQUIRE(trivial.has_value());
  REQUIRE(trivial->size() == 1);
}

TEST_CASE("todd-coxeter tables are deterministic and relator-complete") {
  std::mt19937_64 rng(61);
  int enumerated = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto doc = io::gen_random({n, rng(), {vo(2), vo(3), vo(4)}, {2, 3, 4}, 0.8});
    auto p = build_presentation(doc.graph);
    auto a = todd_coxeter(p, 3000);
    auto b = todd_coxeter(p, 3000);
    REQUIRE(a.has_value() == b.has_value());
    if (!a) continue;
    ++enumerated;
    REQUIRE(a->fwd == b->fwd);
    REQUIRE(a->transversal == b->transversal);
    verify_complete(*a, p);
  }
  REQUIRE(enumerated > 20);
}

TEST_CASE("coset table traces match letter application") {
  auto p = build_presentation(graph({{"v", 2}, {"w", 2}}, {{"v", "w", 5}}));
  auto t = todd_coxeter(p, 100);
  REQUIRE(t.has_value());
  REQUIRE(t->size() == 10);
  for (int c = 0; c < t->size(); ++c) {
    const int via_v = t->apply_letter(c, 1);
    REQUIRE(t->apply_letter(via_v, -1) == c);
    for (const auto& relator : p.relators) REQUIRE(t->trace(c, relator) == c);
  }
}
