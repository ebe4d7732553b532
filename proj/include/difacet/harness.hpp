#ifndef DIFACET_HARNESS_HPP
#define DIFACET_HARNESS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "difacet/graphs.hpp"
#include "difacet/sortable.hpp"

namespace difacet {

struct Failure {
  std::string instance;
  std::string labelling;  // empty when not applicable
  std::string witness;
};

struct VerificationReport {
  std::string theorem;
  std::string source;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  std::int64_t millis = 0;

  bool passed() const { return failures.empty(); }
  std::string to_json(int indent = -1) const;
};

VerificationReport report_from_json(const std::string& text);

struct HarnessOptions {
  FieldSpec field = FieldSpec::rationals();
  std::uint64_t perm_budget = 2'000'000;
  std::size_t gb_cap = 10'000;
  int workers = 1;
  std::uint64_t seed = 1;
};

// ---- instance sources ----

enum class EnumMode { Labelled, Canonical };

/// Deterministic graph enumeration. Labelled mode yields all 2^C(n,2)
/// graphs in edge-bitmask order; canonical mode one representative per
/// isomorphism class (minimum adjacency bitstring over all labellings).
std::vector<Graph> enumerate_graphs(int n, EnumMode mode, int labelled_cap = 7,
                                    int canonical_cap = 6);

/// Minimum upper-triangle adjacency bitstring over all vertex labellings.
std::uint64_t canonical_code(const Graph& g);

std::vector<Graph> connected_labelled_graphs_upto(int nmax);
std::vector<Graph> labelled_graphs_upto(int nmax);

/// One representative per isomorphism class of trees on exactly k vertices
/// (Pruefer enumeration plus canonicalization).
std::vector<Graph> canonical_trees(int k);
/// All canonical forests on exactly n vertices, as multisets of canonical
/// tree components.
std::vector<Graph> canonical_forests(int n);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph claw_graph();  // K_{1,3}, center last

/// The eleven-vertex fixture complex with facets 123, 124, 134, 234, 235,
/// 245, 345, 568, 789, 8-10-11.
SimplicialComplex delta_bsv();

Graph random_graph(std::mt19937_64& rng, int n);
SimplicialComplex random_pure_complex(std::mt19937_64& rng, int max_n = 7, int max_d = 2,
                                      int max_facets = 8);

// ---- verification jobs ----

VerificationReport run_lem_det(const HarnessOptions& opts, int t_max = 4, int ncols = 6);
VerificationReport run_thm_gb1(const HarnessOptions& opts,
                               std::vector<std::pair<int, int>> sizes = {
                                   {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
/// parts is any subset of {2, 3, 4}: closed => reduced GB, unit => reduced
/// GB, GB => poor closed, over all connected labelled graphs.
VerificationReport run_thm_gb_parts(const HarnessOptions& opts, std::vector<int> parts,
                                    int nmax = 5, std::vector<int> dset = {1, 2});
VerificationReport run_thm_gb5(const HarnessOptions& opts, int nmax = 5);
VerificationReport run_fixture_bsv(const HarnessOptions& opts);
VerificationReport run_thm_proper_unit(const HarnessOptions& opts, int nmax = 5,
                                       std::vector<int> dset = {1, 2}, int random_count = 500);
VerificationReport run_lem_equiv(const HarnessOptions& opts, int nmax = 5,
                                 std::vector<int> dset = {1, 2}, int random_count = 200);
VerificationReport run_lem_global(const HarnessOptions& opts, int random_count = 100);
VerificationReport run_thm_monotone(const HarnessOptions& opts, int nmax = 5,
                                    std::vector<int> dset = {1, 2, 3}, bool include_strong = true);
VerificationReport run_cor_sort(const HarnessOptions& opts, int nmax = 5,
                                std::vector<int> dset = {1, 2}, int random_n6 = 200,
                                bool include_persistence = true);
VerificationReport run_thm_interval(const HarnessOptions& opts, int nmax = 6);
VerificationReport run_prop_cycle(const HarnessOptions& opts, int nmax = 6,
                                  std::vector<int> dset = {1, 2});
VerificationReport run_prop_clawpaw(const HarnessOptions& opts, int nmax = 6,
                                    std::vector<int> dset = {1, 2});
/// kind: "cycle", "forest" or "both".
VerificationReport run_cor_cycle_forest(const HarnessOptions& opts, const std::string& kind,
                                        int cycle_nmax = 9, int forest_nmax = 7,
                                        std::vector<int> forest_dset = {1, 2, 3});
VerificationReport run_cor_corona(const HarnessOptions& opts);
VerificationReport run_roundtrip(const HarnessOptions& opts, int count = 1000);

std::vector<std::string> known_theorem_ids();

/// Optional per-job source parameters; any field left unset keeps the
/// job's default range.
struct JobParams {
  std::optional<std::vector<std::pair<int, int>>> sizes;  // matrix shapes (THM-GB-1)
  std::optional<int> nmax;                                // exhaustive vertex range
  std::optional<std::vector<int>> dset;                   // dimensions d
  std::optional<int> count;                               // random instance count
  std::optional<int> t_max;                               // identity size sweep (LEM-DET)
  std::optional<std::string> kind;                        // cycle | forest | both
};

VerificationReport run_theorem(const std::string& id, const HarnessOptions& opts,
                               const JobParams& params = {});

// single-line instance descriptions used in failure records
std::string describe_graph(const Graph& g);
std::string describe_complex(const SimplicialComplex& dc);

}  // namespace difacet

#endif
