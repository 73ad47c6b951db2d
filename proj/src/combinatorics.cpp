#include "detideal/combinatorics.hpp"

#include <stdexcept>

namespace detideal {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient overflow");
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

void fill(std::size_t pos, unsigned remaining, std::vector<unsigned>& cur,
          std::vector<std::vector<unsigned>>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    fill(pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<std::vector<unsigned>> multidegrees(std::size_t n, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(n, 0);
  fill(0, d, cur, out);
  return out;
}

}  // namespace detideal
