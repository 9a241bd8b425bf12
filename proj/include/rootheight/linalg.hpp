#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "rootheight/cycnum.hpp"
#include "rootheight/errors.hpp"
#include "rootheight/polynomial.hpp"
#include "rootheight/rat.hpp"

namespace Eigen {

template <>
struct NumTraits<rootheight::Rat> : GenericNumTraits<rootheight::Rat> {
  using Real = rootheight::Rat;
  using NonInteger = rootheight::Rat;
  using Nested = rootheight::Rat;
  // exact scalars: Eigen's stream output must not ask for a precision
  static constexpr int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
};

template <>
struct NumTraits<rootheight::CycNum> : GenericNumTraits<rootheight::CycNum> {
  using Real = rootheight::CycNum;
  using NonInteger = rootheight::CycNum;
  using Nested = rootheight::CycNum;
  // exact scalars: Eigen's stream output must not ask for a precision
  static constexpr int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
};

}  // namespace Eigen

namespace rootheight {

template <class K>
using Matrix = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vector = Eigen::Matrix<K, Eigen::Dynamic, 1>;

using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long, Eigen::Dynamic, 1>;

template <class To, class From>
Matrix<To> to_exact(const Eigen::MatrixBase<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

/// Determinant by exact Gaussian elimination. Zero entries are skipped, so
/// sparse matrices cost roughly their fill-in.
template <class K>
K determinant(Matrix<K> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  K det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return K(0);
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      det = -det;
    }
    det = det * m(c, c);
    const K inv = K(1) / m(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const K f = m(r, c) * inv;
      for (Eigen::Index j = c + 1; j < n; ++j) {
        if (m(c, j).is_zero()) continue;
        m(r, j) = m(r, j) - f * m(c, j);
      }
      m(r, c) = K(0);
    }
  }
  return det;
}

/// Exact PA = LU factorisation for repeated solves against one matrix.
template <class K>
class ExactLU {
 public:
  explicit ExactLU(Matrix<K> a) : lu_(std::move(a)), perm_(static_cast<std::size_t>(lu_.rows())) {
    if (lu_.rows() != lu_.cols()) throw std::invalid_argument("LU of a non-square matrix");
    const Eigen::Index n = lu_.rows();
    for (Eigen::Index i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i;
    for (Eigen::Index c = 0; c < n; ++c) {
      Eigen::Index piv = c;
      while (piv < n && lu_(piv, c).is_zero()) ++piv;
      if (piv == n) {
        singular_ = true;
        return;
      }
      if (piv != c) {
        lu_.row(piv).swap(lu_.row(c));
        std::swap(perm_[static_cast<std::size_t>(piv)], perm_[static_cast<std::size_t>(c)]);
      }
      const K inv = K(1) / lu_(c, c);
      for (Eigen::Index r = c + 1; r < n; ++r) {
        if (lu_(r, c).is_zero()) continue;
        const K f = lu_(r, c) * inv;
        lu_(r, c) = f;
        for (Eigen::Index j = c + 1; j < n; ++j) {
          if (lu_(c, j).is_zero()) continue;
          lu_(r, j) = lu_(r, j) - f * lu_(c, j);
        }
      }
    }
  }

  bool invertible() const { return !singular_; }
  Eigen::Index size() const { return lu_.rows(); }

  /// x with A x = b; throws SingularSystem if A is singular.
  Vector<K> solve(const Vector<K>& b) const {
    if (singular_) throw SingularSystem("solve with a singular matrix");
    const Eigen::Index n = lu_.rows();
    Vector<K> y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      K s = b(perm_[static_cast<std::size_t>(i)]);
      for (Eigen::Index j = 0; j < i; ++j)
        if (!lu_(i, j).is_zero() && !y(j).is_zero()) s = s - lu_(i, j) * y(j);
      y(i) = s;
    }
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      K s = y(i);
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (!lu_(i, j).is_zero() && !y(j).is_zero()) s = s - lu_(i, j) * y(j);
      y(i) = s / lu_(i, i);
    }
    return y;
  }

 private:
  Matrix<K> lu_;
  std::vector<Eigen::Index> perm_;
  bool singular_ = false;
};

/// Determinant of the square matrix whose first row holds the polynomials
/// `top` and whose remaining rows are `rest` (scalar entries). Only the first
/// row depends on q, so the result is the cofactor expansion along it.
template <class K>
Polynomial<K> determinant_with_polynomial_row(const std::vector<Polynomial<K>>& top,
                                              const Matrix<K>& rest) {
  const Eigen::Index n = static_cast<Eigen::Index>(top.size());
  if (rest.rows() != n - 1 || rest.cols() != n)
    throw std::invalid_argument("determinant_with_polynomial_row: shape mismatch");
  Polynomial<K> out;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (top[static_cast<std::size_t>(j)].is_zero()) continue;
    Matrix<K> minor(n - 1, n - 1);
    for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
      if (c == j) continue;
      minor.col(mc++) = rest.col(c);
    }
    K cof = determinant(std::move(minor));
    if (j % 2) cof = -cof;
    out += top[static_cast<std::size_t>(j)] * cof;
  }
  return out;
}

/// Characteristic polynomial det(q I - A) via reduction to upper Hessenberg
/// form by similarity transforms over Q.
Polynomial<Rat> charpoly(const Matrix<Rat>& a);
Polynomial<Rat> charpoly(const IntMatrix& a);

}  // namespace rootheight
