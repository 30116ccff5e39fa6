#pragma once

// Exact scalar, vector and matrix types. Everything dynamical runs on
// GMP rationals and integers stored in dense Eigen containers; the double
// view is only for sampling and report output.

#include <gmpxx.h>

#include <Eigen/Core>
#include <cmath>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rauzy/errors.hpp"

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace rauzy {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RVector = Vector<Rational>;
using IVector = Vector<Integer>;
using IMatrix = Matrix<Integer>;

namespace detail {
inline double magnitude(double x) { return std::abs(x); }
inline Rational magnitude(const Rational& x) { return abs(x); }
inline Integer magnitude(const Integer& x) { return abs(x); }
}  // namespace detail

/// Sum of absolute values of the entries.
template <typename Derived>
typename Derived::Scalar l1_norm(const Eigen::MatrixBase<Derived>& v) {
  typename Derived::Scalar sum(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) sum += detail::magnitude(v(i));
  return sum;
}

/// Euclidean inner product, exact for exact scalars.
template <typename A, typename B>
typename A::Scalar dot(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  typename A::Scalar sum(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) sum += a(i) * b(i);
  return sum;
}

template <typename Derived>
bool all_nonnegative(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) return false;
  return true;
}

template <typename Derived>
bool all_positive(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) <= 0) return false;
  return true;
}

IMatrix identity(Eigen::Index n);

/// The two generators of SL(2,Z) driving the Euclidean algorithm.
IMatrix elementary_b1();
IMatrix elementary_b2();

IMatrix mat_mul(const IMatrix& a, const IMatrix& b);
RVector apply(const IMatrix& a, const RVector& v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IMatrix& a);

bool is_unimodular(const IMatrix& a);

/// Integer inverse of a matrix with determinant +-1. Throws DomainError
/// otherwise.
IMatrix unimodular_inverse(const IMatrix& a);

RVector make_rvector(std::initializer_list<Rational> entries);
IMatrix make_imatrix(std::initializer_list<std::initializer_list<long>> rows);

Eigen::VectorXd to_double(const RVector& v);
Eigen::MatrixXd to_double(const IMatrix& m);

/// Exact conversion; every finite double is a dyadic rational.
Rational exact_rational(double x);

/// num / den in canonical form; throws DomainError on a zero denominator.
Rational ratio(const Integer& num, const Integer& den);

/// "p/q" always carries the denominator, so the string round-trips
/// unambiguously as an exact rational.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view text);

nlohmann::json to_json(const RVector& v);
nlohmann::json to_json(const IMatrix& m);
RVector rvector_from_json(const nlohmann::json& j);
IMatrix imatrix_from_json(const nlohmann::json& j);

}  // namespace rauzy
