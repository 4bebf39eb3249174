#pragma once

#include "nugatory/abelian_group.hpp"
#include "nugatory/diagram.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nugatory {

class NotAKnotError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// First homology of the branched double cover presented by `g`.
AbelianGroup branched_homology(const GoeritzMatrix& g);

/// |det| of the Goeritz matrix. Knots have odd determinant; an even value
/// throws NotAKnotError.
Integer knot_determinant(const GoeritzMatrix& g);

struct SquareFreeWitness {
  std::size_t index = 0;  // 1-based position of the factor
  Integer factor;
  Integer prime;          // prime^2 divides factor
  friend bool operator==(const SquareFreeWitness&, const SquareFreeWitness&) = default;
};

struct SquareFreeReport {
  bool all_square_free = true;
  std::optional<SquareFreeWitness> witness;  // first offending factor
};

SquareFreeReport square_free_summands(const AbelianGroup& h);

/// Trial-division factorization into (prime, exponent) pairs, ascending.
/// Throws std::domain_error for n < 1 or n above 10^12 (trial bound 10^6).
std::vector<std::pair<Integer, int>> factorize(Integer n);

/// Smallest prime p with p^2 | n, if any.
std::optional<Integer> repeated_prime(Integer n);

inline bool is_square_free(Integer n) { return !repeated_prime(n).has_value(); }

}  // namespace nugatory
