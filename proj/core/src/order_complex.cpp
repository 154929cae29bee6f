#include "polytree/order_complex.hpp"

#include <stdexcept>

namespace polytree {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("order_complex: chain count overflow");
  return out;
}

}  // namespace

SimplicialComplexSummary order_complex(const FinitePoset& p) {
  SimplicialComplexSummary s;
  const int n = static_cast<int>(p.size());
  if (n == 0) return s;

  const auto up = p.strict_up_sets();
  const auto heights = p.heights();
  int longest = 0;
  for (int h : heights) longest = std::max(longest, h);

  // ending[x][L]: chains with L+1 elements whose top is x.
  std::vector<std::vector<std::uint64_t>> ending(n, std::vector<std::uint64_t>(longest + 1, 0));
  s.simplex_counts.assign(longest + 1, 0);
  for (int x : p.linear_extension()) {
    ending[x][0] = 1;
    for (int L = 0; L <= heights[x]; ++L) s.simplex_counts[L] = checked_add(s.simplex_counts[L], ending[x][L]);
    for (auto y = up[x].find_first(); y != Bitset::npos; y = up[x].find_next(y))
      for (int L = 0; L < heights[x] + 1 && L + 1 <= longest; ++L)
        ending[y][L + 1] = checked_add(ending[y][L + 1], ending[x][L]);
  }
  while (!s.simplex_counts.empty() && s.simplex_counts.back() == 0) s.simplex_counts.pop_back();
  s.top_dimension = static_cast<int>(s.simplex_counts.size()) - 1;
  return s;
}

std::int64_t euler_characteristic(const SimplicialComplexSummary& s) {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < s.simplex_counts.size(); ++d) {
    const auto c = static_cast<std::int64_t>(s.simplex_counts[d]);
    chi += d % 2 == 0 ? c : -c;
  }
  return chi;
}

}  // namespace polytree
