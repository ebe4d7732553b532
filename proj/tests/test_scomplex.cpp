#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "difacet/harness.hpp"
#include "difacet/scomplex.hpp"

using namespace difacet;

namespace {

SimplicialComplex path3_delta1() { return SimplicialComplex(3, 1, {{1, 2}, {2, 3}}); }
SimplicialComplex bent3_delta1() { return SimplicialComplex(3, 1, {{1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("construction validates purity and range") {
  CHECK_THROWS(SimplicialComplex(3, 1, {{1, 2, 3}}));
  CHECK_THROWS(SimplicialComplex(3, 1, {{1, 4}}));
  CHECK_THROWS(SimplicialComplex(3, 1, {{2, 2}}));
  SimplicialComplex dup(3, 1, {{2, 1}, {1, 2}});
  CHECK(dup.facet_count() == 1);  // sorted and deduplicated
}

TEST_CASE("relabel") {
  SimplicialComplex bent = bent3_delta1();
  Labelling id = Labelling::identity(3);
  CHECK(relabel(bent, id) == bent);
  Labelling pi{{1, 3, 2}};  // 2 -> 3, 3 -> 2
  SimplicialComplex mapped = relabel(bent, pi);
  CHECK(mapped == SimplicialComplex(3, 1, {{1, 2}, {2, 3}}));
  CHECK(relabel(mapped, pi.inverse()) == bent);
}

TEST_CASE("closed predicate") {
  CHECK(is_closed_lab(SimplicialComplex(4, 2, {{1, 2, 3}})));  // single facet
  CHECK(is_closed_lab(path3_delta1()));  // the only pair shares no position
  CHECK_FALSE(is_closed_lab(delta_bsv()));
}

TEST_CASE("unit interval predicate") {
  CHECK_FALSE(is_unit_interval_lab(delta_bsv()));
  CHECK(is_unit_interval_lab(SimplicialComplex(3, 2, {{1, 2, 3}})));
  CHECK(is_unit_interval_lab(path3_delta1()));
  CHECK_FALSE(is_unit_interval_lab(bent3_delta1()));
}

TEST_CASE("poor closed predicate") {
  CHECK(is_poor_closed_lab(delta_bsv()));
  CHECK(is_poor_closed_lab(SimplicialComplex(5, 2, {{1, 2, 3}})));
  CHECK_FALSE(is_poor_closed_lab(bent3_delta1()));
}

TEST_CASE("global interval predicate") {
  CHECK(is_global_interval_lab(SimplicialComplex(4, 3, {{1, 2, 3, 4}})));
  CHECK(is_global_interval_lab(path3_delta1()));
  CHECK_FALSE(is_global_interval_lab(bent3_delta1()));
}

TEST_CASE("proper interval predicate") {
  CHECK(is_proper_interval_lab(SimplicialComplex(4, 2, {{1, 3, 4}})));
  CHECK(is_proper_interval_lab(path3_delta1()));
  // K_{1,3} is never proper interval, under any labelling.
  Graph claw = claw_graph();
  std::vector<int> perm{1, 2, 3, 4};
  do {
    Labelling pi{perm};
    CHECK_FALSE(is_proper_interval_lab(delta_d(relabel(claw, pi), 1)));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("zero facets satisfy every labelled predicate vacuously") {
  SimplicialComplex empty(4, 1, {});
  for (ComplexClass cls :
       {ComplexClass::Closed, ComplexClass::UnitInterval, ComplexClass::PoorClosed,
        ComplexClass::GlobalInterval, ComplexClass::ProperInterval})
    CHECK(evaluate_class(empty, cls));
}

TEST_CASE("skeleton") {
  SimplicialComplex tri(3, 2, {{1, 2, 3}});
  CHECK(skeleton(tri, 2) == tri);
  CHECK(skeleton(tri, 1) == SimplicialComplex(3, 1, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(skeleton(delta_bsv(), 1).facet_count() == 18);
  CHECK_THROWS(skeleton(tri, 3));
  CHECK_THROWS(skeleton(tri, -1));
}

TEST_CASE("unit/global/proper are skeleton-hereditary") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    SimplicialComplex dc = random_pure_complex(rng, 6, 2, 6);
    for (ComplexClass cls :
         {ComplexClass::UnitInterval, ComplexClass::GlobalInterval, ComplexClass::ProperInterval}) {
      bool full = evaluate_class(dc, cls);
      bool all_skeletons = true;
      for (int k = 0; k <= dc.dim(); ++k)
        if (!evaluate_class(skeleton(dc, k), cls)) all_skeletons = false;
      CHECK(full == all_skeletons);
    }
  }
}

TEST_CASE("implication chain from unit interval") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 200; ++trial) {
    SimplicialComplex dc = random_pure_complex(rng);
    if (!is_unit_interval_lab(dc)) continue;
    CHECK(is_global_interval_lab(dc));
    CHECK(is_proper_interval_lab(dc));
    CHECK(is_poor_closed_lab(dc));
  }
}

TEST_CASE("closed equals poor closed for d=1 graph complexes") {
  for (const Graph& g : connected_labelled_graphs_upto(4)) {
    SimplicialComplex dc = delta_d(g, 1);
    CHECK(is_closed_lab(dc) == is_poor_closed_lab(dc));
  }
}

TEST_CASE("strong interval with representation") {
  // all pairs with equal intervals: complete 1-complex required
  SimplicialComplex complete(3, 1, {{1, 2}, {1, 3}, {2, 3}});
  IntervalRep same;
  for (int v = 0; v < 3; ++v) same.intervals.push_back({Rational(0), Rational(1)});
  CHECK(is_strong_interval_with_rep(complete, same));

  // touching endpoints: the path is consistent, the extra facet is not
  IntervalRep chain;
  chain.intervals = {{Rational(0), Rational(1)}, {Rational(1), Rational(2)}, {Rational(2), Rational(3)}};
  CHECK(is_strong_interval_with_rep(path3_delta1(), chain));
  SimplicialComplex with_13(3, 1, {{1, 2}, {2, 3}, {1, 3}});
  CHECK_FALSE(is_strong_interval_with_rep(with_13, chain));

  IntervalRep missing;
  missing.intervals = {{Rational(0), Rational(1)}};
  CHECK_THROWS(is_strong_interval_with_rep(path3_delta1(), missing));
}

TEST_CASE("strong rep invariance under translation and rescaling") {
  std::mt19937_64 rng(77);
  SimplicialComplex path = path3_delta1();
  IntervalRep base;
  base.intervals = {{Rational(0), Rational(1)}, {Rational(1), Rational(2)}, {Rational(2), Rational(3)}};
  std::uniform_int_distribution<long> dt(-6, 6), ds(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Rational shift(dt(rng), ds(rng));
    Rational scale(ds(rng), ds(rng));
    IntervalRep moved;
    for (auto [a, b] : base.intervals) moved.intervals.push_back({a * scale + shift, b * scale + shift});
    CHECK(is_strong_interval_with_rep(path, moved));
  }
}

TEST_CASE("exists_labelling basics") {
  SearchOutcome s = exists_labelling(bent3_delta1(), ComplexClass::Closed);
  REQUIRE(s.found());
  CHECK(is_closed_lab(relabel(bent3_delta1(), *s.labelling)));

  SearchOutcome claw = exists_labelling(delta_d(claw_graph(), 1), ComplexClass::ProperInterval);
  CHECK(claw.kind == SearchOutcome::Kind::ExhaustedNone);

  SearchOutcome single =
      exists_labelling(SimplicialComplex(4, 2, {{1, 2, 4}}), ComplexClass::UnitInterval);
  CHECK(single.found());
}

TEST_CASE("found certificates re-verify") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    SimplicialComplex dc = random_pure_complex(rng, 6, 2, 5);
    for (ComplexClass cls : {ComplexClass::UnitInterval, ComplexClass::GlobalInterval}) {
      SearchOutcome s = exists_labelling(dc, cls);
      if (s.found()) CHECK(evaluate_class(relabel(dc, *s.labelling), cls));
    }
  }
}

TEST_CASE("budgeted search reports BudgetExceeded on the big fixture") {
  SearchOutcome s = exists_labelling(delta_bsv(), ComplexClass::UnitInterval, 500, 9);
  CHECK(s.kind == SearchOutcome::Kind::BudgetExceeded);
  CHECK(s.examined == 500);
}

TEST_CASE("ordered strong-rep search") {
  SearchOutcome s = search_strong_rep(path3_delta1());
  REQUIRE(s.found());
  CHECK(is_strong_interval_with_rep(path3_delta1(), *s.rep));
  // C4's edge complex admits no interval representation at all.
  SearchOutcome none = search_strong_rep(delta_d(cycle_graph(4), 1));
  CHECK(none.kind == SearchOutcome::Kind::ExhaustedNone);
}

TEST_CASE("connectivity of complexes") {
  CHECK(is_connected_complex(path3_delta1()));
  CHECK_FALSE(is_connected_complex(SimplicialComplex(4, 1, {{1, 2}, {3, 4}})));
  CHECK_FALSE(is_connected_complex(SimplicialComplex(3, 1, {{1, 2}})));  // vertex 3 isolated
}

TEST_CASE("determinantal facet ideal") {
  SimplicialComplex bent = bent3_delta1();
  Basis b = determinantal_facet_ideal(bent);
  REQUIRE(b.size() == 2);
  CHECK(b.ctx.rows == 2);
  CHECK(b.ctx.cols == 3);
  CHECK(render_polynomial(b.polys[0]) == "x[1,1]*x[2,3] - x[1,3]*x[2,1]");
  CHECK(render_polynomial(b.polys[1]) == "x[1,2]*x[2,3] - x[1,3]*x[2,2]");
  CHECK(determinantal_facet_ideal(SimplicialComplex(3, 1, {})).size() == 0);
  // complete complex gives all (d+1)-minors
  SimplicialComplex full(4, 1, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(determinantal_facet_ideal(full).size() == 6);
}

TEST_CASE("complex file round trip and parse errors") {
  SimplicialComplex bsv = delta_bsv();
  std::ostringstream os;
  write_complex(os, bsv);
  std::istringstream is(os.str());
  CHECK(read_complex(is) == bsv);

  std::istringstream bad("3 1\n1 2 3\n");
  CHECK_THROWS_AS(read_complex(bad), ParseError);
  std::istringstream with_comment("# a path\n3 1\n1 2\n2 3\n");
  CHECK(read_complex(with_comment) == path3_delta1());
  std::istringstream headerless("");
  CHECK_THROWS_AS(read_complex(headerless), ParseError);
}
