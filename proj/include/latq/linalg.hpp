#pragma once

#include <vector>

#include "latq/matrix.hpp"

namespace latq {

// Smith normal form U * M * V = D with U, V unimodular and D diagonal,
// d1 | d2 | ... | dr >= 0, trailing zeros.
struct SmithResult {
  IntMat d;
  IntMat u;
  IntMat v;

  // Nonzero diagonal entries, in divisibility order.
  std::vector<Int> divisors() const;
  int rank() const { return static_cast<int>(divisors().size()); }
};

SmithResult snf(const IntMat& m);

// Inertia of a symmetric matrix, computed by exact rational congruence
// diagonalization (no floating point).
struct Signature {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;

  int rank() const { return n_plus + n_minus; }
  int index() const { return n_plus - n_minus; }
  bool operator==(const Signature&) const = default;
};

Signature signature(const IntMat& gram);
Signature signature(const RatMat& gram);

// Basis (columns) of the saturated integer kernel {x : m x = 0}.
IntMat kernel_basis(const IntMat& m);

// Square basis matrix of the column span of a full-row-rank k x s matrix,
// i.e. a Z-basis of the subgroup of Z^k generated by the columns.
IntMat column_span_basis(const IntMat& m);

// Basis of the saturation (Q-span intersected with Z^n) of the column span.
IntMat saturation_basis(const IntMat& m);

// All divisors of the columns' inclusion are 1, i.e. the column span is a
// primitive (saturated) subgroup of Z^n.
bool columns_primitive(const IntMat& m);

}  // namespace latq
