#pragma once

#include "nugatory/integer.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nugatory {

/// Finite abelian group Z/d1 + ... + Z/dn in invariant-factor form:
/// every d_i >= 2 and d_i | d_{i+1}. The empty list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Throws std::invalid_argument unless `factors` is a valid chain.
  explicit AbelianGroup(std::vector<Integer> factors);

  /// Parses the pipe-separated form used in knot tables, e.g. "3|9".
  /// The empty string is the trivial group.
  static AbelianGroup parse(std::string_view text);

  const std::vector<Integer>& factors() const { return factors_; }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  /// "Z/3 + Z/9"; the trivial group prints as "0".
  std::string to_string() const;
  /// "3|9"; the trivial group prints as "".
  std::string to_pipe_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g);

}  // namespace nugatory
