#ifndef DEFBOSE_EXACT_RADICAL_HPP
#define DEFBOSE_EXACT_RADICAL_HPP

#include <cstdint>

namespace defbose {

using Radicand = std::uint64_t;

struct RadicalForm {
  std::uint64_t square_root;  // s
  Radicand radicand;          // r, square-free
  friend bool operator==(const RadicalForm&, const RadicalForm&) = default;
};

// Splits n >= 1 as n = s^2 * r with r square-free (trial division).
RadicalForm radical_normalize(std::uint64_t n);

bool is_square_free(std::uint64_t n);

}  // namespace defbose

#endif  // DEFBOSE_EXACT_RADICAL_HPP
