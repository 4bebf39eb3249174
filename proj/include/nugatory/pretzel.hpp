#pragma once

#include "nugatory/integer.hpp"

#include <vector>

namespace nugatory {

/// det P(-p, q, r) = |-pq - pr + qr|.
Integer pretzel_determinant(Integer p, Integer q, Integer r);

/// P(-p, p - 1, r) with det = p^2 - p + r.
struct PretzelHit {
  Integer p;
  Integer q;
  Integer r;
  Integer det;
  bool square_free_det = false;

  friend bool operator==(const PretzelHit&, const PretzelHit&) = default;
};

/// Every even p >= 2 with r = n + p - p^2 >= 1, ascending in p. Throws
/// std::invalid_argument unless n is odd and at least 3.
std::vector<PretzelHit> pretzel_search(Integer n);

}  // namespace nugatory
