#include "surfcoh/bigint.hpp"

namespace surfcoh {

Int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  // Each partial product is itself a binomial, so the division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= Int(n - k + i);
    result /= Int(i);
  }
  return result;
}

Int pow2(std::uint64_t n) { return Int(1) << n; }

}  // namespace surfcoh
