#ifndef DIFACET_SORTABLE_HPP
#define DIFACET_SORTABLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "difacet/graphs.hpp"

namespace difacet {

/// Merge-split sorting operator on equal-cardinality vertex sets: the
/// merged multiset a_1 <= ... <= a_2k splits into F' = {a_1, a_3, ...} and
/// G' = {a_2, a_4, ...}.
std::pair<std::vector<int>, std::vector<int>> sort_pair(const std::vector<int>& f,
                                                        const std::vector<int>& g);

/// The same operator for arbitrary cardinalities: F' takes the odd
/// positions (size ceil(q/2)), G' the even positions.
std::pair<std::vector<int>, std::vector<int>> sort_pair_balanced(const std::vector<int>& f,
                                                                 const std::vector<int>& g);

struct SortFailure {
  std::vector<int> f, g;       // the offending input pair
  std::vector<int> missing;    // a sorted output not in the family
};

/// Family of equal-cardinality sets closed under sort_pair.
bool is_sortable_family(const std::vector<std::vector<int>>& faces,
                        std::optional<SortFailure>* failure = nullptr);

/// A complex (all faces, any cardinalities) is sortable when every pair of
/// faces has both outputs of the merge-split operator inside the complex.
bool is_sortable_complex(const std::vector<std::vector<int>>& faces,
                         std::optional<SortFailure>* failure = nullptr);
bool is_sortable_complex(const IndFaces& ind, std::optional<SortFailure>* failure = nullptr);

}  // namespace difacet

#endif
