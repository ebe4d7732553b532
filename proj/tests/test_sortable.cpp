#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "difacet/harness.hpp"
#include "difacet/sortable.hpp"

using namespace difacet;

TEST_CASE("sort_pair basics") {
  CHECK(sort_pair({1, 3}, {2, 4}) == std::pair<std::vector<int>, std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(sort_pair({1, 4}, {2, 3}) == std::pair<std::vector<int>, std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(sort_pair({1, 2}, {1, 3}) == std::pair<std::vector<int>, std::vector<int>>{{1, 2}, {1, 3}});
  CHECK_THROWS(sort_pair({1}, {1, 2}));
}

TEST_CASE("sort_pair properties") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> dk(1, 4), dv(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int k = dk(rng);
    auto rand_set = [&]() {
      std::vector<int> s;
      while (static_cast<int>(s.size()) < k) {
        int v = dv(rng);
        if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
      }
      std::sort(s.begin(), s.end());
      return s;
    };
    std::vector<int> f = rand_set(), g = rand_set();
    auto [fp, gp] = sort_pair(f, g);
    // symmetric in the arguments
    CHECK(sort_pair(g, f) == std::pair{fp, gp});
    // idempotent
    CHECK(sort_pair(fp, gp) == std::pair{fp, gp});
    // cardinalities and multiset union preserved
    CHECK(fp.size() == f.size());
    CHECK(gp.size() == g.size());
    std::vector<int> lhs, rhs;
    lhs.insert(lhs.end(), f.begin(), f.end());
    lhs.insert(lhs.end(), g.begin(), g.end());
    rhs.insert(rhs.end(), fp.begin(), fp.end());
    rhs.insert(rhs.end(), gp.begin(), gp.end());
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    CHECK(lhs == rhs);
    // outputs are genuine sets
    CHECK(std::adjacent_find(fp.begin(), fp.end()) == fp.end());
    CHECK(std::adjacent_find(gp.begin(), gp.end()) == gp.end());
  }
}

TEST_CASE("is_sortable_family basics") {
  CHECK(is_sortable_family({{1}, {4}, {7}}));
  CHECK(is_sortable_family({{1, 3}}));
  std::optional<SortFailure> why;
  CHECK_FALSE(is_sortable_family({{1, 4}, {2, 3}}, &why));
  REQUIRE(why.has_value());
  CHECK(why->missing == std::vector<int>{1, 3});
  CHECK_THROWS(is_sortable_family({{1}, {1, 2}}));
}

TEST_CASE("is_sortable_complex basics") {
  CHECK(is_sortable_complex(ind_d(path_graph(3), 1)));
  CHECK(is_sortable_complex(std::vector<std::vector<int>>{{}}));

  // Ind_1 of the claw fails under every one of the 24 labellings.
  Graph claw = claw_graph();
  std::vector<int> perm{1, 2, 3, 4};
  do {
    Labelling pi{perm};
    CHECK_FALSE(is_sortable_complex(ind_d(relabel(claw, pi), 1)));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("complete graphs are sortable at every d") {
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) CHECK(is_sortable_complex(ind_d(complete_graph(n), d)));
}

TEST_CASE("corollary equivalence: unit_lab iff sortable, exhaustive n<=5, d<=3") {
  for (const Graph& g : labelled_graphs_upto(5))
    for (int d : {1, 2, 3})
      CHECK(is_unit_interval_lab(delta_d(g, d)) == is_sortable_complex(ind_d(g, d)));
}
