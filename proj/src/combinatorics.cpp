#include "fluct/combinatorics.hpp"

#include <cstdint>
#include <stdexcept>

namespace fluct {

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step; r <= C(n, k).
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw std::overflow_error("binomial overflows int64");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t catalan(int n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

}  // namespace fluct
