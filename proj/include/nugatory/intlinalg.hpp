#pragma once

#include "nugatory/abelian_group.hpp"
#include "nugatory/integer.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nugatory {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

/// Raised when a presentation matrix is singular, so the presented group has
/// a free part.
class InfiniteGroupError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Smith normal form with unimodular certificates: u * a * v == diag(d).
template <typename Scalar>
struct SnfResult {
  std::vector<Scalar> d;
  Matrix<Scalar> u;
  Matrix<Scalar> v;
};

/// gamma[i-1] is the gcd of all i x i minors.
template <typename Scalar>
struct MinorGcds {
  std::vector<Scalar> gamma;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = a;
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace detail {

// Advances `idx` (strictly increasing, values < n) to the next subset in
// lexicographic order; false when exhausted.
inline bool next_combination(std::vector<Eigen::Index>& idx, Eigen::Index n) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  for (Eigen::Index i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (Eigen::Index j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<Eigen::Index> first_combination(Eigen::Index k) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace detail

/// Brute force over every i x i minor. Exponential; intended for small
/// matrices and as an oracle for smith_normal_form.
template <typename Derived>
MinorGcds<typename Derived::Scalar> minor_gcds(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Matrix<Scalar> m = a;
  const Eigen::Index size = std::min(m.rows(), m.cols());
  MinorGcds<Scalar> out;
  for (Eigen::Index i = 1; i <= size; ++i) {
    Scalar g(0);
    auto rows = detail::first_combination(i);
    do {
      auto cols = detail::first_combination(i);
      do {
        g = nugatory::gcd(g, Scalar(determinant(m(rows, cols))));
      } while (detail::next_combination(cols, m.cols()));
    } while (detail::next_combination(rows, m.rows()));
    out.gamma.push_back(g);
  }
  return out;
}

/// Smith normal form by unimodular row and column operations. Each step pivots
/// on the nonzero entry of least absolute value in the remaining block.
/// Diagonal entries are nonnegative, form a divisibility chain, and zeros
/// (if any) come last.
template <typename Derived>
SnfResult<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Eigen::Index;
  Matrix<Scalar> d = a;
  const Index m = d.rows();
  const Index n = d.cols();
  Matrix<Scalar> u = Matrix<Scalar>::Identity(m, m);
  Matrix<Scalar> v = Matrix<Scalar>::Identity(n, n);
  const Index size = std::min(m, n);

  Index t = 0;
  for (; t < size; ++t) {
    bool exhausted = false;
    for (;;) {
      Index pr = -1, pc = -1;
      Scalar best(0);
      for (Index j = t; j < n; ++j) {
        for (Index i = t; i < m; ++i) {
          if (d(i, j) == Scalar(0)) continue;
          Scalar mag = nugatory::magnitude(Scalar(d(i, j)));
          if (pr < 0 || mag < best) {
            best = mag;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) {
        exhausted = true;
        break;
      }
      if (pr != t) {
        d.row(t).swap(d.row(pr));
        u.row(t).swap(u.row(pr));
      }
      if (pc != t) {
        d.col(t).swap(d.col(pc));
        v.col(t).swap(v.col(pc));
      }

      const Scalar pivot = d(t, t);
      bool residue = false;
      for (Index i = t + 1; i < m; ++i) {
        if (d(i, t) == Scalar(0)) continue;
        const Scalar q = d(i, t) / pivot;
        if (q != Scalar(0)) {
          d.row(i) -= q * d.row(t);
          u.row(i) -= q * u.row(t);
        }
        if (d(i, t) != Scalar(0)) residue = true;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (d(t, j) == Scalar(0)) continue;
        const Scalar q = d(t, j) / pivot;
        if (q != Scalar(0)) {
          d.col(j) -= q * d.col(t);
          v.col(j) -= q * v.col(t);
        }
        if (d(t, j) != Scalar(0)) residue = true;
      }
      if (residue) continue;

      // Pivot row and column are clear; enforce pivot | rest of the block.
      Index bad_row = -1;
      for (Index j = t + 1; j < n && bad_row < 0; ++j) {
        for (Index i = t + 1; i < m; ++i) {
          if (d(i, j) % pivot != Scalar(0)) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      d.row(t) += d.row(bad_row);
      u.row(t) += u.row(bad_row);
    }
    if (exhausted) break;
    if (d(t, t) < Scalar(0)) {
      d.row(t) = -d.row(t);
      u.row(t) = -u.row(t);
    }
  }

  SnfResult<Scalar> out;
  out.d.reserve(static_cast<std::size_t>(size));
  for (Index i = 0; i < size; ++i) out.d.push_back(d(i, i));
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

/// Invariant factors of the group presented by a square nonsingular matrix;
/// unit diagonal entries are dropped.
template <typename Derived>
std::vector<typename Derived::Scalar> invariant_factor_list(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("invariant_factors: matrix is not square");
  auto snf = smith_normal_form(a);
  std::vector<Scalar> out;
  for (const auto& x : snf.d) {
    if (x == Scalar(0)) throw InfiniteGroupError("presentation matrix is singular: group is infinite");
    if (x != Scalar(1)) out.push_back(x);
  }
  return out;
}

inline AbelianGroup invariant_factors(const IntMatrix& a) {
  return AbelianGroup(invariant_factor_list(a));
}

/// Integer solution of a * x = b, if one exists.
template <typename Derived, typename OtherDerived>
std::optional<Vector<typename Derived::Scalar>> solve_integer(const Eigen::MatrixBase<Derived>& a,
                                                              const Eigen::MatrixBase<OtherDerived>& b) {
  using Scalar = typename Derived::Scalar;
  if (b.rows() != a.rows() || b.cols() != 1) throw std::invalid_argument("solve_integer: shape mismatch");
  const auto snf = smith_normal_form(a);
  const Vector<Scalar> c = snf.u * b;
  Vector<Scalar> y = Vector<Scalar>::Zero(a.cols());
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    const bool diagonal = i < static_cast<Eigen::Index>(snf.d.size());
    const Scalar di = diagonal ? snf.d[static_cast<std::size_t>(i)] : Scalar(0);
    if (di == Scalar(0)) {
      if (c(i) != Scalar(0)) return std::nullopt;
      continue;
    }
    if (c(i) % di != Scalar(0)) return std::nullopt;
    y(i) = c(i) / di;
  }
  return Vector<Scalar>(snf.v * y);
}

}  // namespace nugatory
