#pragma once

#include <cstddef>
#include <vector>

namespace gkit {

using Subset = std::vector<size_t>;

size_t binomial(size_t n, size_t k);
// All k-subsets of {0..n-1} in lexicographic order.
const std::vector<Subset>& subsets(size_t n, size_t k);
// Position of a sorted subset in that order.
size_t subset_rank(size_t n, const Subset& s);
Subset complement(size_t n, const Subset& s);
// Sign of the permutation sorting the concatenation a‖b (disjoint sets).
int merge_sign(const Subset& a, const Subset& b);
bool disjoint(const Subset& a, const Subset& b);
Subset set_union(const Subset& a, const Subset& b);

}  // namespace gkit
