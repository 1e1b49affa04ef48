#pragma once

#include <cstdint>

namespace fluct {

/// C(n, k); zero outside 0 <= k <= n. Throws std::overflow_error if the
/// value does not fit in 64 bits.
std::int64_t binomial(int n, int k);

/// c_n = C(2n, n) / (n + 1).
std::int64_t catalan(int n);

}  // namespace fluct
