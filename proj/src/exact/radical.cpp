#include "defbose/exact/radical.hpp"

#include <string>

#include "defbose/error.hpp"

namespace defbose {

RadicalForm radical_normalize(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::DomainError, "radical_normalize requires n >= 1");
  std::uint64_t s = 1;
  std::uint64_t r = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    unsigned mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    for (unsigned i = 0; i < mult / 2; ++i) s *= p;
    if (mult % 2 == 1) r *= p;
  }
  // whatever is left is a prime appearing once
  r *= n;
  return {s, r};
}

bool is_square_free(std::uint64_t n) { return n >= 1 && radical_normalize(n).square_root == 1; }

}  // namespace defbose
