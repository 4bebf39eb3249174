#pragma once

#include "nugatory/intlinalg.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nugatory {

/// Boundary slope a*mu + b*lambda up to sign: gcd(|a|, |b|) = 1, a >= 0,
/// and b = 1 when a = 0.
class Slope {
 public:
  /// Normalizes the sign; throws std::invalid_argument for non-primitive pairs.
  Slope(Integer a, Integer b);

  static Slope meridian() { return {1, 0}; }
  static Slope longitude() { return {0, 1}; }
  /// "a/b".
  static Slope parse(std::string_view text);

  Integer a() const { return a_; }
  Integer b() const { return b_; }
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  Integer a_;
  Integer b_;
};

/// Minimal geometric intersection number |a_x b_y - b_x a_y|.
Integer slope_distance(const Slope& x, const Slope& y);

/// Homological data of a knot exterior M with H_1(M) = Z + H: the torsion
/// H = Z/r_1 + ... + Z/r_k, i*(mu) = (ell, u) and i*(lambda_M) = (0, h).
/// Vectors are coordinates in the diagonal presentation diag(r).
struct MData {
  Integer ell = 1;
  std::vector<Integer> r;
  std::vector<Integer> u;
  std::vector<Integer> h;

  friend bool operator==(const MData&, const MData&) = default;
};

/// Order of the element with coordinates `h` in Z/r_1 + ... + Z/r_k.
Integer element_order(const std::vector<Integer>& h, const std::vector<Integer>& r);

/// Throws std::invalid_argument naming the broken invariant.
void validate(const MData& m);

std::string to_string(const MData& m);

/// c_M = ell * r_1 * ... * r_k.
Integer rational_longitude_constant(const MData& m);

/// Presentation of H_1(M(eta)) for eta = a*mu + b*lambda:
///   [ a*ell       0     ]
///   [ a*u + b*h   diag(r) ]
IntMatrix filling_presentation(const MData& m, const Slope& eta);

/// |H_1(M(eta))| = c_M * Delta(eta, lambda_M). Throws InfiniteGroupError
/// when eta is the rational longitude.
Integer filling_order(const MData& m, const Slope& eta);

/// Presentations of the fillings along alpha = mu and beta = mu + 2*sign*lambda.
std::pair<IntMatrix, IntMatrix> cosmetic_pair(const MData& m, int sign);

struct ChainStep {
  std::size_t index = 0;  // 1-based
  Integer g;              // gcd(ell, r_i)
  bool g_divides_u = false;
  bool g_divides_u_plus_2h = false;
  bool g_divides_u_minus_2h = false;
  bool g_divides_h = false;
  bool r_divides_h = false;
};

struct TheoremCheck {
  bool order_odd = false;
  bool square_free = false;        // every invariant factor of A square-free
  bool snf_match_plus = false;     // SNF(A) == SNF(B) for beta = mu + 2 lambda
  bool snf_match_minus = false;    // SNF(A) == SNF(B) for beta = mu - 2 lambda
  bool hypotheses_hold = false;
  std::vector<Integer> snf_a, snf_b_plus, snf_b_minus;
  std::vector<ChainStep> chain_steps;
  bool h_trivial = false;          // h = 0 in H
  bool span_check = false;         // h in the integer column span of diag(r)
};

/// Evaluates the hypotheses of the square-free lifting argument on `m` and
/// records each divisibility step. When the hypotheses hold, h must vanish.
TheoremCheck verify_squarefree_theorem(const MData& m);

struct SearchReport {
  std::vector<MData> counterexamples;
  std::uint64_t instances = 0;  // MData enumerated
};

/// Enumerates every MData of odd order ell * prod(r) <= max_order with
/// 0 <= u_i, h_i < r_i and ord(h) = ell, ordered by (order, k, r, ell, h, u).
/// Keeps instances with h != 0 whose cosmetic pair has matching Smith forms
/// for some sign, and (if require_square_free) square-free factors.
/// `workers` = 0 picks the hardware concurrency; the result does not depend
/// on it.
SearchReport search_counterexamples(std::int64_t max_order, bool require_square_free, unsigned workers = 0);

/// Invariant-factor chains r_1 | ... | r_k (each >= 2) with product n, in
/// lexicographic order. n = 1 gives the single empty chain.
std::vector<std::vector<Integer>> invariant_factor_chains(Integer n);

/// The slopes at distance one from both alpha and beta, where
/// Delta(alpha, beta) = 2. Always two, returned in ascending order.
std::vector<Slope> common_distance_one_slopes(const Slope& alpha, const Slope& beta);

}  // namespace nugatory
