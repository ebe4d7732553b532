#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "difacet/harness.hpp"
#include "difacet/sortable.hpp"

using namespace difacet;

TEST_CASE("graph enumeration counts") {
  CHECK(enumerate_graphs(3, EnumMode::Labelled).size() == 8);
  CHECK(enumerate_graphs(3, EnumMode::Canonical).size() == 4);
  CHECK(enumerate_graphs(4, EnumMode::Canonical).size() == 11);
  CHECK(enumerate_graphs(5, EnumMode::Canonical).size() == 34);
  CHECK_THROWS(enumerate_graphs(8, EnumMode::Labelled));
  CHECK_THROWS(enumerate_graphs(7, EnumMode::Canonical));
}

TEST_CASE("canonical enumeration is deterministic and isomorphism-free") {
  auto gs = enumerate_graphs(4, EnumMode::Canonical);
  for (std::size_t a = 0; a < gs.size(); ++a)
    for (std::size_t b = a + 1; b < gs.size(); ++b)
      CHECK(canonical_code(gs[a]) != canonical_code(gs[b]));
}

TEST_CASE("connected labelled graph counts") {
  auto gs = connected_labelled_graphs_upto(4);
  // 1 + 1 + 4 + 38 connected labelled graphs on 1..4 vertices
  CHECK(gs.size() == 44);
}

TEST_CASE("canonical trees and forests") {
  CHECK(canonical_trees(1).size() == 1);
  CHECK(canonical_trees(2).size() == 1);
  CHECK(canonical_trees(3).size() == 1);
  CHECK(canonical_trees(4).size() == 2);
  CHECK(canonical_trees(5).size() == 3);
  CHECK(canonical_trees(6).size() == 6);
  CHECK(canonical_trees(7).size() == 11);
  for (const Graph& t : canonical_trees(6)) {
    CHECK(is_forest(t));
    CHECK(is_connected_graph(t));
  }
  // forests: 1, 2, 3, 6, 10, 20, 37 on 1..7 vertices
  CHECK(canonical_forests(1).size() == 1);
  CHECK(canonical_forests(2).size() == 2);
  CHECK(canonical_forests(3).size() == 3);
  CHECK(canonical_forests(4).size() == 6);
  CHECK(canonical_forests(5).size() == 10);
  CHECK(canonical_forests(6).size() == 20);
  CHECK(canonical_forests(7).size() == 37);
  for (const Graph& f : canonical_forests(5)) CHECK(is_forest(f));
}

TEST_CASE("fixture delta_BSV") {
  SimplicialComplex bsv = delta_bsv();
  CHECK(bsv.n() == 11);
  CHECK(bsv.dim() == 2);
  CHECK(bsv.facet_count() == 10);
}

TEST_CASE("measured GB status of delta_BSV cross-checks against completion") {
  Basis b = determinantal_facet_ideal(delta_bsv());
  GBReport rep = is_groebner(b);
  CHECK(rep.is_gb);
  CHECK(rep.reduced);
  // A second route: Buchberger completion adds nothing to a GB.
  CHECK(buchberger(b).size() == b.size());
}

TEST_CASE("report JSON round trip") {
  VerificationReport rep;
  rep.theorem = "T";
  rep.source = "s";
  rep.seed = 5;
  rep.checked = 17;
  rep.failures.push_back({"inst", "", "w"});
  rep.notes.push_back("n1");
  rep.millis = 3;
  VerificationReport back = report_from_json(rep.to_json(2));
  CHECK(back.theorem == rep.theorem);
  CHECK(back.checked == rep.checked);
  CHECK(back.failures.size() == 1);
  CHECK(back.failures[0].labelling.empty());
  CHECK(back.notes == rep.notes);
}

TEST_CASE("small verification jobs pass") {
  HarnessOptions opts;
  VerificationReport det = run_lem_det(opts, 2, 4);
  CHECK(det.passed());
  CHECK(det.checked > 0);

  VerificationReport gb1 = run_thm_gb1(opts, {{2, 3}, {2, 4}});
  CHECK(gb1.passed());

  VerificationReport gb234 = run_thm_gb_parts(opts, {2, 3, 4}, 4, {1, 2});
  CHECK(gb234.passed());

  VerificationReport gb234_d3 = run_thm_gb_parts(opts, {2, 3, 4}, 4, {3});
  CHECK(gb234_d3.passed());

  VerificationReport gb5 = run_thm_gb5(opts, 4);
  CHECK(gb5.passed());

  VerificationReport bsv = run_fixture_bsv(opts);
  CHECK(bsv.passed());
  REQUIRE(!bsv.notes.empty());

  VerificationReport pu = run_thm_proper_unit(opts, 4, {1, 2}, 30);
  CHECK(pu.passed());

  VerificationReport eq = run_lem_equiv(opts, 4, {1, 2}, 50);
  CHECK(eq.passed());

  // Monotone persistence genuinely fails for the unit and proper clauses
  // (triangle-plus-pendant family); the global and strong clauses hold.
  VerificationReport mono = run_thm_monotone(opts, 4, {1, 2}, true);
  CHECK(!mono.passed());
  for (const Failure& f : mono.failures) {
    CHECK(f.witness.rfind("global_interval", 0) != 0);
    CHECK(f.witness.rfind("strong", 0) != 0);
  }

  VerificationReport sort = run_cor_sort(opts, 4, {1, 2}, 20, false);
  CHECK(sort.passed());
  VerificationReport sortp = run_cor_sort(opts, 4, {1, 2}, 0, true);
  for (const Failure& f : sortp.failures) CHECK(f.witness.rfind("persistence", 0) == 0);

  VerificationReport iv = run_thm_interval(opts, 5);
  CHECK(iv.passed());

  VerificationReport cyc = run_prop_cycle(opts, 5, {1, 2});
  CHECK(cyc.passed());

  VerificationReport cp = run_prop_clawpaw(opts, 5, {1, 2, 3});
  CHECK(cp.passed());

  HarnessOptions modp = opts;
  modp.field = FieldSpec::prime(13);
  VerificationReport gb5p = run_thm_gb5(modp, 4);
  CHECK(gb5p.passed());

  VerificationReport cf = run_cor_cycle_forest(opts, "both", 6, 5, {1, 2});
  CHECK(cf.passed());

  VerificationReport cor = run_cor_corona(opts);
  CHECK(cor.passed());

  VerificationReport glob = run_lem_global(opts, 30);
  CHECK(glob.passed());

  VerificationReport rt = run_roundtrip(opts, 100);
  CHECK(rt.passed());
}

TEST_CASE("the unit-persistence counterexample re-verifies exhaustively") {
  // Triangle {1,2,3} with pendant 4 on vertex 3: unit and proper interval
  // at d=1 under the identity labels, yet delta_2 = {123,134,234} is unit
  // or proper under none of the 24 labellings. Any facet containing both
  // labels 1 and 4 spans the whole window, forcing the missing triple.
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  CHECK(is_unit_interval_lab(delta_d(g, 1)));
  CHECK(is_proper_interval_lab(delta_d(g, 1)));
  SimplicialComplex d2 = delta_d(g, 2);
  std::vector<int> perm{1, 2, 3, 4};
  do {
    SimplicialComplex r = relabel(d2, Labelling{perm});
    CHECK_FALSE(is_unit_interval_lab(r));
    CHECK_FALSE(is_proper_interval_lab(r));
  } while (std::next_permutation(perm.begin(), perm.end()));
  // global interval and the clique representation do persist here
  CHECK(is_global_interval_lab(d2));
  auto ir = is_interval_graph(g);
  REQUIRE(ir.outcome.found());
  Graph rg = relabel(g, *ir.labelling);
  for (int d = 1; d <= 3; ++d) CHECK(is_strong_interval_with_rep(delta_d(rg, d), *ir.rep));
  // sortability tracks the unit predicate at both levels
  CHECK(is_sortable_complex(ind_d(g, 1)));
  CHECK_FALSE(is_sortable_complex(ind_d(g, 2)));
}

TEST_CASE("worker fan-out yields identical reports") {
  HarnessOptions seq;
  HarnessOptions par;
  par.workers = 2;
  VerificationReport a = run_thm_gb5(seq, 4);
  VerificationReport b = run_thm_gb5(par, 4);
  CHECK(a.checked == b.checked);
  CHECK(a.failures.size() == b.failures.size());
  VerificationReport c = run_cor_sort(seq, 4, {1}, 10);
  VerificationReport d = run_cor_sort(par, 4, {1}, 10);
  CHECK(c.checked == d.checked);
  CHECK(c.failures.size() == d.failures.size());
}

TEST_CASE("reports are deterministic for fixed seed and budgets") {
  HarnessOptions opts;
  opts.seed = 77;
  VerificationReport a = run_thm_proper_unit(opts, 3, {1}, 25);
  VerificationReport b = run_thm_proper_unit(opts, 3, {1}, 25);
  a.millis = b.millis = 0;
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("dispatcher knows every id") {
  for (const std::string& id : known_theorem_ids()) CHECK_NOTHROW((void)id);
  CHECK_THROWS(run_theorem("NOPE", HarnessOptions{}));
}
