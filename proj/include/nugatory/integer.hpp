#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>

namespace nugatory {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Signed 128-bit integer whose arithmetic throws OverflowError instead of
/// wrapping. Default scalar for every exact matrix in the library.
class Integer {
 public:
  using Rep = __int128;

  constexpr Integer() = default;
  constexpr Integer(int v) : v_(v) {}
  constexpr Integer(long v) : v_(v) {}
  constexpr Integer(long long v) : v_(v) {}
  constexpr Integer(unsigned v) : v_(v) {}
  constexpr Integer(unsigned long v) : v_(v) {}
  constexpr Integer(unsigned long long v) : v_(v) {}

  static constexpr Integer from_rep(Rep v) {
    Integer r;
    r.v_ = v;
    return r;
  }
  constexpr Rep rep() const { return v_; }

  /// Throws OverflowError when the value does not fit.
  std::int64_t to_int64() const;

  friend Integer operator+(Integer a, Integer b) {
    Rep r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("integer overflow in addition");
    return from_rep(r);
  }
  friend Integer operator-(Integer a, Integer b) {
    Rep r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("integer overflow in subtraction");
    return from_rep(r);
  }
  friend Integer operator*(Integer a, Integer b) {
    Rep r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("integer overflow in multiplication");
    return from_rep(r);
  }
  // Truncating division, as for built-in integers.
  friend Integer operator/(Integer a, Integer b) {
    if (b.v_ == 0) throw std::domain_error("integer division by zero");
    if (a.v_ == kMin && b.v_ == -1) throw OverflowError("integer overflow in division");
    return from_rep(a.v_ / b.v_);
  }
  friend Integer operator%(Integer a, Integer b) {
    if (b.v_ == 0) throw std::domain_error("integer division by zero");
    if (b.v_ == -1) return Integer{};
    return from_rep(a.v_ % b.v_);
  }
  Integer operator-() const {
    if (v_ == kMin) throw OverflowError("integer overflow in negation");
    return from_rep(-v_);
  }
  Integer operator+() const { return *this; }

  Integer& operator+=(Integer o) { return *this = *this + o; }
  Integer& operator-=(Integer o) { return *this = *this - o; }
  Integer& operator*=(Integer o) { return *this = *this * o; }
  Integer& operator/=(Integer o) { return *this = *this / o; }
  Integer& operator%=(Integer o) { return *this = *this % o; }

  friend constexpr bool operator==(Integer a, Integer b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Integer a, Integer b) { return a.v_ <=> b.v_; }

  explicit constexpr operator bool() const { return v_ != 0; }

 private:
  static constexpr Rep kMin = static_cast<Rep>(static_cast<unsigned __int128>(1) << 127);
  static constexpr Rep kMax = ~kMin;
  friend struct IntegerLimits;

  Rep v_ = 0;
};

struct IntegerLimits {
  static constexpr Integer max() { return Integer::from_rep(Integer::kMax); }
  static constexpr Integer min() { return Integer::from_rep(Integer::kMin); }
};

std::string to_string(Integer v);
std::ostream& operator<<(std::ostream& os, Integer v);

/// Parses an optional sign followed by decimal digits; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

// Scalar helpers shared by Integer, built-in integers and unbounded types
// (boost::multiprecision::cpp_int). Found by ADL or by qualification.

template <typename Scalar>
Scalar magnitude(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Scalar>
Scalar gcd(Scalar a, Scalar b) {
  a = nugatory::magnitude(a);
  b = nugatory::magnitude(b);
  while (b != Scalar(0)) {
    Scalar t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <typename Scalar>
Scalar lcm(const Scalar& a, const Scalar& b) {
  if (a == Scalar(0) || b == Scalar(0)) return Scalar(0);
  return nugatory::magnitude(Scalar(a / nugatory::gcd(a, b) * b));
}

/// Extended Euclid: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
template <typename Scalar>
Scalar extended_gcd(const Scalar& a, const Scalar& b, Scalar& s, Scalar& t) {
  Scalar old_r = a, r = b;
  Scalar old_s(1), cur_s(0);
  Scalar old_t(0), cur_t(1);
  while (r != Scalar(0)) {
    Scalar q = old_r / r;
    Scalar next = old_r - q * r;
    old_r = r;
    r = next;
    next = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = next;
    next = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = next;
  }
  if (old_r < Scalar(0)) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

/// Floor-style modulus: result lies in [0, |m|).
template <typename Scalar>
Scalar mod_floor(const Scalar& a, const Scalar& m) {
  Scalar r = a % m;
  if (r < Scalar(0)) r += nugatory::magnitude(m);
  return r;
}

}  // namespace nugatory

template <>
struct std::hash<nugatory::Integer> {
  std::size_t operator()(nugatory::Integer v) const noexcept {
    const auto u = static_cast<unsigned __int128>(v.rep());
    return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(u) ^ static_cast<std::uint64_t>(u >> 64));
  }
};

namespace Eigen {

template <>
struct NumTraits<nugatory::Integer> : GenericNumTraits<nugatory::Integer> {
  using Real = nugatory::Integer;
  using NonInteger = nugatory::Integer;
  using Literal = nugatory::Integer;
  using Nested = nugatory::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline Real highest() { return nugatory::IntegerLimits::max(); }
  static inline Real lowest() { return nugatory::IntegerLimits::min(); }
  static inline int digits10() { return 38; }
};

}  // namespace Eigen
