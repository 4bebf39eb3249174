#include "nugatory/pretzel.hpp"

#include "nugatory/branched_cover.hpp"

#include <stdexcept>

namespace nugatory {

Integer pretzel_determinant(Integer p, Integer q, Integer r) {
  if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("pretzel_determinant: p, q, r must be positive");
  return magnitude(Integer(-p * q - p * r + q * r));
}

std::vector<PretzelHit> pretzel_search(Integer n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("pretzel_search: determinant must be odd and at least 3, got " + to_string(n));
  }
  std::vector<PretzelHit> out;
  const bool sf = is_square_free(n);
  for (Integer p = 2;; p += 2) {
    const Integer r = n + p - p * p;
    if (r < 1) break;
    out.push_back({p, p - 1, r, pretzel_determinant(p, p - 1, r), sf});
  }
  return out;
}

}  // namespace nugatory
