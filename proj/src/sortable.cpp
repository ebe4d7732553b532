#include "difacet/sortable.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace difacet {

std::pair<std::vector<int>, std::vector<int>> sort_pair_balanced(const std::vector<int>& f,
                                                                 const std::vector<int>& g) {
  std::vector<int> merged;
  merged.reserve(f.size() + g.size());
  merged.insert(merged.end(), f.begin(), f.end());
  merged.insert(merged.end(), g.begin(), g.end());
  std::sort(merged.begin(), merged.end());
  std::vector<int> fp, gp;
  for (std::size_t i = 0; i < merged.size(); ++i)
    (i % 2 == 0 ? fp : gp).push_back(merged[i]);
  return {fp, gp};
}

std::pair<std::vector<int>, std::vector<int>> sort_pair(const std::vector<int>& f,
                                                        const std::vector<int>& g) {
  if (f.size() != g.size()) throw std::invalid_argument("sort_pair: cardinality mismatch");
  return sort_pair_balanced(f, g);
}

namespace {

bool check_pairs(const std::vector<std::vector<int>>& faces, bool require_equal_cardinality,
                 std::optional<SortFailure>* failure) {
  std::set<std::vector<int>> members(faces.begin(), faces.end());
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t b = a; b < faces.size(); ++b) {
      if (require_equal_cardinality && faces[a].size() != faces[b].size())
        throw std::invalid_argument("is_sortable_family: mixed cardinalities");
      auto [fp, gp] = sort_pair_balanced(faces[a], faces[b]);
      for (const std::vector<int>* out : {&fp, &gp}) {
        if (!members.count(*out)) {
          if (failure) *failure = SortFailure{faces[a], faces[b], *out};
          return false;
        }
      }
    }
  return true;
}

}  // namespace

bool is_sortable_family(const std::vector<std::vector<int>>& faces,
                        std::optional<SortFailure>* failure) {
  std::vector<std::vector<int>> sorted = faces;
  for (auto& f : sorted) std::sort(f.begin(), f.end());
  return check_pairs(sorted, true, failure);
}

bool is_sortable_complex(const std::vector<std::vector<int>>& faces,
                         std::optional<SortFailure>* failure) {
  std::vector<std::vector<int>> sorted = faces;
  for (auto& f : sorted) std::sort(f.begin(), f.end());
  return check_pairs(sorted, false, failure);
}

bool is_sortable_complex(const IndFaces& ind, std::optional<SortFailure>* failure) {
  return is_sortable_complex(ind.all_faces(), failure);
}

}  // namespace difacet
