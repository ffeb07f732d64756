#pragma once

#include <Eigen/Core>

#include "latq/int.hpp"

namespace Eigen {

template <>
struct NumTraits<latq::Int> : GenericNumTraits<latq::Int> {
  typedef latq::Int Real;
  typedef latq::Rat NonInteger;
  typedef latq::Int Nested;
  typedef latq::Int Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 80
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<latq::Rat> : GenericNumTraits<latq::Rat> {
  typedef latq::Rat Real;
  typedef latq::Rat NonInteger;
  typedef latq::Rat Nested;
  typedef latq::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 120
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace latq {

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// Entrywise exact cast; throws if any entry is not an integer.
inline IntMat to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      require(m(i, j).is_integer(), "matrix entry is not an integer");
      r(i, j) = m(i, j).num();
    }
  return r;
}

// Exact Gauss-Jordan inverse over the rationals.
RatMat rat_inverse(const RatMat& m);

// Inverse of a unimodular integer matrix, exact.
IntMat unimodular_inverse(const IntMat& m);

// Fraction-free Bareiss determinant.
Int bareiss_det(const IntMat& m);

}  // namespace latq
