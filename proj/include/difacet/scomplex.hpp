#ifndef DIFACET_SCOMPLEX_HPP
#define DIFACET_SCOMPLEX_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "difacet/groebner.hpp"
#include "difacet/rational.hpp"

namespace difacet {

/// Vertex relabelling: perm[v-1] is the new label of vertex v.
struct Labelling {
  std::vector<int> perm;

  static Labelling identity(int n);
  int apply(int v) const { return perm.at(static_cast<std::size_t>(v) - 1); }
  Labelling inverse() const;
  int size() const { return static_cast<int>(perm.size()); }
  std::string to_string() const;
};

/// Pure d-dimensional simplicial complex on vertex set [n], stored by its
/// facets (sorted (d+1)-subsets, kept deduplicated in lexicographic order).
class SimplicialComplex {
 public:
  SimplicialComplex(int n, int d, std::vector<std::vector<int>> facets);

  int n() const { return n_; }
  int dim() const { return d_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }

  bool has_facet_mask(std::uint64_t mask) const;
  const std::vector<std::uint64_t>& facet_masks() const { return masks_; }

  bool operator==(const SimplicialComplex& o) const {
    return n_ == o.n_ && d_ == o.d_ && facets_ == o.facets_;
  }

  std::string to_string() const;

 private:
  int n_;
  int d_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::uint64_t> masks_;  // sorted, parallel search structure
};

std::uint64_t vertex_set_mask(const std::vector<int>& vs);

SimplicialComplex relabel(const SimplicialComplex& dc, const Labelling& pi);

/// Pure k-complex whose facets are all (k+1)-subsets of facets (0 <= k <= d;
/// k = d returns the complex itself).
SimplicialComplex skeleton(const SimplicialComplex& dc, int k);

/// Definition: for every two distinct facets F, G (as sorted tuples) that
/// agree at some position, every (d+1)-subset of F u G is a facet.
bool is_closed_lab(const SimplicialComplex& dc);

/// For every facet with vertices i_1 < ... < i_{d+1}, every increasing
/// (d+1)-tuple inside [i_1, i_{d+1}] is a facet.
bool is_unit_interval_lab(const SimplicialComplex& dc);

/// Position-sharing facet pairs always admit a third facet inside their
/// union.
bool is_poor_closed_lab(const SimplicialComplex& dc);

/// Any vertex j strictly inside a facet's span can replace the facet's
/// largest vertex.
bool is_global_interval_lab(const SimplicialComplex& dc);

/// Conditional single-vertex exchange: for facet F, in-span j not in F and
/// position k such that some facet contains both j and i_k, the exchange
/// (F \ {i_k}) u {j} is a facet.
bool is_proper_interval_lab(const SimplicialComplex& dc);

/// Facet-connection condition (existential form): for each facet F and
/// in-span j not in F, some facet contains j together with some vertex of
/// F. Together with the proper-interval predicate this characterizes the
/// unit-interval predicate.
bool lemma_connection_condition(const SimplicialComplex& dc);
/// Universal form: j shares a facet with every vertex of F.
bool lemma_connection_condition_all(const SimplicialComplex& dc);

enum class ComplexClass { Closed, UnitInterval, PoorClosed, GlobalInterval, ProperInterval };

bool evaluate_class(const SimplicialComplex& dc, ComplexClass cls);
std::string class_name(ComplexClass cls);

/// Closed interval [a, b] per vertex (a <= b), rational endpoints.
struct IntervalRep {
  std::vector<std::pair<Rational, Rational>> intervals;  // index v-1

  int size() const { return static_cast<int>(intervals.size()); }
  std::string to_string() const;
};

/// Checks the strong-interval property for a supplied representation: a
/// (d+1)-subset is a facet iff the union of its intervals is connected
/// (touching endpoints count).
bool is_strong_interval_with_rep(const SimplicialComplex& dc, const IntervalRep& rep);

struct SearchOutcome {
  enum class Kind { Found, ExhaustedNone, BudgetExceeded };
  Kind kind = Kind::ExhaustedNone;
  std::optional<Labelling> labelling;
  std::optional<IntervalRep> rep;
  std::uint64_t examined = 0;

  bool found() const { return kind == Kind::Found; }
  std::string kind_name() const;
};

/// Searches for a labelling under which the predicate holds. Exhaustive
/// (with one fixed vertex per automorphism orbit of the facet hypergraph as
/// a symmetry prune) when the pruned permutation count fits the budget;
/// seeded random restarts otherwise.
SearchOutcome exists_labelling(const SimplicialComplex& dc, ComplexClass cls,
                               std::uint64_t budget = 2'000'000, std::uint64_t seed = 1);

/// Orbits of the automorphism group of the facet hypergraph, as the
/// partition's representative (minimum) per vertex. Exact for n <= 9;
/// singleton orbits (no pruning) beyond.
std::vector<int> automorphism_orbit_reps(const SimplicialComplex& dc);

/// Budgeted search for an integer-endpoint interval representation
/// (endpoints in [0, 2n], length <= n) whose (left, right) pairs are
/// nondecreasing in the current vertex labels, i.e. the labelling already
/// matches the sorted (left, right) order under which strong implies
/// global. Found
/// certificates re-verify; ExhaustedNone refers to ordered representations
/// under the current labelling only. Only attempted for n <= 7.
SearchOutcome search_strong_rep(const SimplicialComplex& dc, std::uint64_t budget = 2'000'000);

/// Vertices all covered by facets and the facet-sharing graph connected.
bool is_connected_complex(const SimplicialComplex& dc);

/// Basis {minor(F) | F facet} in the (d+1) x n context, facets in
/// lexicographic order.
Basis determinantal_facet_ideal(const SimplicialComplex& dc,
                                const FieldSpec& field = FieldSpec::rationals());

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

/// File format: first non-comment line "n d", then one facet per line as
/// space-separated vertex labels; '#' starts a comment.
SimplicialComplex read_complex(std::istream& in);
void write_complex(std::ostream& out, const SimplicialComplex& dc);

/// Interval representation file: one "v a b" line per vertex, rational
/// endpoints like "3" or "5/2".
IntervalRep read_interval_rep(std::istream& in, int n);
void write_interval_rep(std::ostream& out, const IntervalRep& rep);

}  // namespace difacet

#endif
