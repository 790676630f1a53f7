#ifndef GENHYPER_SUBSETS_HPP
#define GENHYPER_SUBSETS_HPP

#include <numeric>
#include <vector>

namespace genhyper {

// k-subsets of {0..n-1} in colexicographic order: subsets compare by their
// largest differing element. The first subset is {0,1,...,k-1}.

template <typename Int>
void colex_first(unsigned k, std::vector<Int>& c) {
  c.resize(k);
  std::iota(c.begin(), c.end(), Int{0});
}

// Advances c to its colex successor; returns false when exhausted.
template <typename Int>
bool colex_next(unsigned n, std::vector<Int>& c) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    Int limit = (i + 1 < k) ? c[i + 1] : static_cast<Int>(n);
    if (static_cast<Int>(c[i] + 1) < limit) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<Int>(j);
      return true;
    }
  }
  return false;
}

// Colex comparison of two sorted index sets (sizes may differ; the shorter
// set is padded conceptually with -inf, so ties broken by size).
template <typename Int>
bool colex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace genhyper

#endif  // GENHYPER_SUBSETS_HPP
