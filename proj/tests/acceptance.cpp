// Acceptance suite: one pass/fail line per criterion, exact (zero
// tolerance) checks throughout. Exit code is the number of failed
// criteria.

#include <chrono>
#include <cstdio>
#include <string>

#include "difacet/harness.hpp"
#include "difacet/sortable.hpp"

using namespace difacet;

namespace {

int failures_total = 0;

void line(int idx, const std::string& name, bool pass, std::uint64_t checked, std::int64_t millis,
          const std::string& detail = "") {
  std::printf("[%2d] %-18s %s  (checked=%llu, %lld ms)%s%s\n", idx, name.c_str(),
              pass ? "PASS" : "FAIL", static_cast<unsigned long long>(checked),
              static_cast<long long>(millis), detail.empty() ? "" : "  ", detail.c_str());
  if (!pass) ++failures_total;
}

void report_line(int idx, const std::string& name, const VerificationReport& rep,
                 std::int64_t time_cap_ms = -1) {
  bool pass = rep.passed();
  std::string detail;
  if (!rep.failures.empty())
    detail = std::to_string(rep.failures.size()) + " counterexample(s)";
  if (time_cap_ms > 0 && rep.millis > time_cap_ms) {
    pass = false;
    detail += " [exceeded " + std::to_string(time_cap_ms) + " ms budget]";
  }
  line(idx, name, pass, rep.checked, rep.millis, detail);
  if (!pass) {
    std::size_t shown = 0;
    for (const Failure& f : rep.failures) {
      if (++shown > 3) {
        std::printf("       ... and %zu more\n", rep.failures.size() - 3);
        break;
      }
      std::printf("       %s%s%s: %s\n", f.instance.c_str(),
                  f.labelling.empty() ? "" : " @", f.labelling.c_str(), f.witness.c_str());
    }
    for (const std::string& n : rep.notes) std::printf("       note: %s\n", n.c_str());
  }
}

}  // namespace

int main() {
  auto suite_start = std::chrono::steady_clock::now();
  HarnessOptions opts;  // rationals, default budgets, single worker, seed 1

  // 1. LEM-DET: every t in {1,2,3,4}, all admissible columns in n = 6,
  //    exact symbolic equality, < 30 s.
  report_line(1, "LEM-DET", run_lem_det(opts, 4, 6), 30'000);

  // 2. THM-GB-1: all m-minors of the generic m x n matrix are reduced GBs,
  //    six shapes, < 5 min.
  report_line(2, "THM-GB-1", run_thm_gb1(opts), 300'000);

  // 3. THM-GB-2/3/4 over all connected labelled graphs n <= 5, d in {1,2},
  //    < 10 min.
  report_line(3, "THM-GB-2/3/4", run_thm_gb_parts(opts, {2, 3, 4}, 5, {1, 2}), 600'000);

  // 4. THM-GB-5 (d = 1): GB iff closed_lab, connected graphs n <= 5.
  report_line(4, "THM-GB-5", run_thm_gb5(opts, 5));

  // 5. Fixture delta_BSV: stated flags plus GB-measurement consistency.
  report_line(5, "FIXTURE-BSV", run_fixture_bsv(opts));

  // 6. THM-PROPER-UNIT: existence equivalence, graphs n <= 5 (d in {1,2})
  //    and 500 seeded random complexes.
  report_line(6, "THM-PROPER-UNIT", run_thm_proper_unit(opts, 5, {1, 2}, 500));

  // 7. THM-MONOTONE: same-labelling persistence d -> d+1 for
  //    unit/global/proper, all labelled graphs n <= 5, d in {1,2,3}.
  report_line(7, "THM-MONOTONE", run_thm_monotone(opts, 5, {1, 2, 3}, true));

  // 8. COR-SORT: unit iff sortable per labelling, all labelled graphs
  //    n <= 5 (d in {1,2}) plus 200 seeded random graphs at n = 6.
  report_line(8, "COR-SORT", run_cor_sort(opts, 5, {1, 2}, 200, false));

  // 9. THM-INTERVAL: 1-global existence, consecutive-ones test, and
  //    representation re-verification agree on all canonical graphs n <= 6.
  report_line(9, "THM-INTERVAL", run_thm_interval(opts, 6));

  // 10. PROP-CYCLE / PROP-CLAWPAW on canonical graphs n <= 6, d in {1,2}.
  {
    VerificationReport cycle = run_prop_cycle(opts, 6, {1, 2});
    VerificationReport clawpaw = run_prop_clawpaw(opts, 6, {1, 2});
    VerificationReport merged;
    merged.checked = cycle.checked + clawpaw.checked;
    merged.millis = cycle.millis + clawpaw.millis;
    merged.failures = cycle.failures;
    merged.failures.insert(merged.failures.end(), clawpaw.failures.begin(), clawpaw.failures.end());
    report_line(10, "PROP-CYCLE/CLAWPAW", merged);
  }

  // 11. COR-CYCLEFOREST: cycles 3 <= n <= 9 match d >= n-2 exactly;
  //     canonical forests n <= 7 match the path-or-small-tree rule.
  report_line(11, "COR-CYCLEFOREST", run_cor_cycle_forest(opts, "both", 9, 7, {1, 2, 3}));

  // 12. Corona: three constructed instances, d in {2,3}, ExhaustedNone.
  report_line(12, "COR-CORONA", run_cor_corona(opts));

  // 13. Engineering: 1000-object seeded round trip; the whole suite stays
  //     under 20 minutes single-process.
  {
    VerificationReport rt = run_roundtrip(opts, 1000);
    auto total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - suite_start)
                        .count();
    bool pass = rt.passed() && total_ms < 20 * 60 * 1000;
    line(13, "ENGINEERING", pass, rt.checked, total_ms,
         pass ? "suite total above" : "round-trip failure or 20 min budget exceeded");
  }

  if (failures_total == 0) std::printf("acceptance: all 13 criteria PASS\n");
  else std::printf("acceptance: %d criteria FAILED\n", failures_total);
  return failures_total;
}
