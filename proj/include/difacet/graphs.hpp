#ifndef DIFACET_GRAPHS_HPP
#define DIFACET_GRAPHS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "difacet/scomplex.hpp"

namespace difacet {

/// Simple undirected graph on [n], adjacency kept as bitmasks.
class Graph {
 public:
  explicit Graph(int n);

  int n() const { return n_; }
  void add_edge(int i, int j);
  bool has_edge(int i, int j) const;
  std::uint64_t neighbors_mask(int v) const { return adj_[static_cast<std::size_t>(v) - 1]; }
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;
  int degree(int v) const;

  /// Vertices of `mask` reachable from the lowest set bit within G[mask].
  bool connected_in_mask(std::uint64_t mask) const;
  std::vector<std::uint64_t> components_in_mask(std::uint64_t mask) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  std::string to_string() const;

 private:
  int n_;
  std::vector<std::uint64_t> adj_;
};

Graph relabel(const Graph& g, const Labelling& pi);
bool is_connected_graph(const Graph& g);
bool is_forest(const Graph& g);

/// The orientation G*: arc (i, j) present iff {i, j} is an edge and i < j.
struct OrientedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;

  bool has_arc(int i, int j) const;
};

OrientedGraph orient_by_labels(const Graph& g);

/// Facets are the (d+1)-subsets inducing a connected subgraph.
SimplicialComplex delta_d(const Graph& g, int d);

/// Every connected component of G[U] has at most d vertices.
bool is_d_independent(const Graph& g, const std::vector<int>& u, int d);
bool is_d_independent_mask(const Graph& g, std::uint64_t mask, int d);

/// Faces of Ind_d(G) grouped by cardinality: by_card[k] holds the masks of
/// the k-element d-independent sets.
struct IndFaces {
  int n = 0;
  std::vector<std::vector<std::uint64_t>> by_card;

  bool has_face(std::uint64_t mask) const;
  std::size_t face_count() const;
  std::vector<std::vector<int>> all_faces() const;
};

IndFaces ind_d(const Graph& g, int d);

/// Disjoint union of G and the H_x, plus all edges from x to V(H_x). The
/// vertices of H_1, H_2, ... are renumbered consecutively after [n].
Graph corona(const Graph& g, const std::vector<Graph>& h);

struct ClawWitness {
  int center = 0;
  std::array<std::vector<int>, 3> branches;  // each includes the center
};

/// Three connected induced branches of 2..d+1 vertices meeting exactly in
/// one vertex, pairwise unions of >= d+1 vertices, with no path between
/// branches avoiding the center inside the induced union.
std::optional<ClawWitness> find_d_claw(const Graph& g, int d);

/// Connected induced subgraph on d+2 vertices with exactly three leaves.
std::optional<std::vector<int>> find_d_paw(const Graph& g, int d);

bool has_induced_cycle_of_length_at_least(const Graph& g, int len);
bool is_chordal(const Graph& g);

std::vector<std::vector<int>> maximal_cliques(const Graph& g);

enum class Cor33 { C12, C14, C15, C16, C17, C18, C19, C20, C22 };

Cor33 cor33_from_string(const std::string& s);
std::string cor33_name(Cor33 c);

/// Literal truth value of the given proper-interval characterization for
/// the current labelling (C22 is labelling-independent).
bool cor33_criterion(const Graph& g, Cor33 criterion);

/// Exists an ordering of the sets such that every element's occurrences
/// are consecutive (consecutive-ones property of the incidence matrix for
/// that side). Backtracking, exact.
bool exists_consecutive_arrangement(const std::vector<std::uint64_t>& sets, int n);

struct IntervalRecognition {
  SearchOutcome outcome;                 // search for a 1-global labelling
  std::optional<Labelling> labelling;    // the found labelling
  std::optional<IntervalRep> rep;        // clique representation for relabel(g)
  bool rep_verified = false;
};

/// Interval-graph recognition through the 1-global labelling search; on
/// success builds the maximal-clique interval representation for the
/// relabelled graph and re-verifies it on Delta_1.
IntervalRecognition is_interval_graph(const Graph& g, std::uint64_t budget = 2'000'000,
                                      std::uint64_t seed = 1);

/// File format: first non-comment line "n", then one edge "i j" per line.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace difacet

#endif
