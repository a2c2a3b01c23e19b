#pragma once

// Exact scalar and dense types shared by every module.
//
// All vectors and matrices are Eigen dense objects over an exact scalar. The
// rational scalar is GMP's mpq_class; small integer data (Cartan matrices,
// pairing tables) uses plain int.

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace minuscule {

using Rational = mpq_class;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using QVector = Vector<Rational>;
using QMatrix = Matrix<Rational>;
using IMatrix = Eigen::MatrixXi;

/// Violated precondition on user-supplied data (bad type, non-reduced word, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; indicates a bug or a false theorem.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured brute-force bound was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" in lowest terms, always with a denominator.
inline std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Accepts "p", "p/q" and "-p/q".
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw InputError("malformed rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

/// Lexicographic key used to place exact vectors in ordered containers.
inline std::vector<Rational> key_of(const QVector& v) {
  return std::vector<Rational>(v.data(), v.data() + v.size());
}

/// Exact determinant by Gaussian elimination over the scalar's field.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  Scalar det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index row = col + 1; row < n; ++row) {
      if (m(row, col) == 0) continue;
      Scalar factor = m(row, col) / m(col, col);
      m.row(row) -= factor * m.row(col);
    }
  }
  return det;
}

/// Exact inverse by Gauss-Jordan; throws InvariantViolation when singular.
template <typename Derived>
Matrix<typename Derived::Scalar> exact_inverse(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw InvariantViolation("singular matrix in exact inverse");
    m.row(pivot).swap(m.row(col));
    inv.row(pivot).swap(inv.row(col));
    Scalar scale = m(col, col);
    m.row(col) /= scale;
    inv.row(col) /= scale;
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row == col || m(row, col) == 0) continue;
      Scalar factor = m(row, col);
      m.row(row) -= factor * m.row(col);
      inv.row(row) -= factor * inv.row(col);
    }
  }
  return inv;
}

}  // namespace minuscule
