#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace detideal {

// C(n, k) in 64 bits; throws std::overflow_error when it does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

using IndexSet = std::vector<std::size_t>;

// All k-subsets of {0..n-1} as strictly increasing tuples, lexicographic order.
std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k);

// All exponent vectors of length n and total d, lexicographically descending.
std::vector<std::vector<unsigned>> multidegrees(std::size_t n, unsigned d);

}  // namespace detideal
