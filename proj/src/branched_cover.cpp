#include "nugatory/branched_cover.hpp"

namespace nugatory {

namespace {
constexpr long long kTrialCeiling = 1'000'000;
}

AbelianGroup branched_homology(const GoeritzMatrix& g) {
  if (g.matrix.size() == 0) return AbelianGroup();
  return invariant_factors(g.matrix);
}

Integer knot_determinant(const GoeritzMatrix& g) {
  const Integer det = magnitude(determinant(g.matrix));
  if (det % 2 == 0) {
    throw NotAKnotError("input is not a knot: determinant " + to_string(det) + " is even");
  }
  return det;
}

std::vector<std::pair<Integer, int>> factorize(Integer n) {
  if (n < 1) throw std::domain_error("factorize: " + to_string(n) + " is not positive");
  if (n > Integer(kTrialCeiling) * Integer(kTrialCeiling)) {
    throw std::domain_error("factorize: " + to_string(n) + " exceeds the trial-division range");
  }
  std::vector<std::pair<Integer, int>> out;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<Integer> repeated_prime(Integer n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e >= 2) return p;
  }
  return std::nullopt;
}

SquareFreeReport square_free_summands(const AbelianGroup& h) {
  SquareFreeReport out;
  const auto& f = h.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (auto p = repeated_prime(f[i])) {
      out.all_square_free = false;
      out.witness = SquareFreeWitness{i + 1, f[i], *p};
      break;
    }
  }
  return out;
}

}  // namespace nugatory
