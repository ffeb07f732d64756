#include "latq/linalg.hpp"

#include <algorithm>

namespace latq {

namespace {

void swap_rows(IntMat& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.row(a).swap(m.row(b));
}

void swap_cols(IntMat& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.col(a).swap(m.col(b));
}

// Position of the nonzero entry of minimal absolute value in m[t:, t:],
// or (-1,-1) if that block is zero. Minimal pivots bound entry growth.
std::pair<Eigen::Index, Eigen::Index> min_abs_pivot(const IntMat& m,
                                                    Eigen::Index t) {
  Eigen::Index bi = -1, bj = -1;
  Int best = 0;
  for (Eigen::Index i = t; i < m.rows(); ++i)
    for (Eigen::Index j = t; j < m.cols(); ++j) {
      const Int& x = m(i, j);
      if (x.is_zero()) continue;
      Int a = abs(x);
      if (bi < 0 || a < best) {
        best = a;
        bi = i;
        bj = j;
        if (best == 1) return {bi, bj};
      }
    }
  return {bi, bj};
}

}  // namespace

std::vector<Int> SmithResult::divisors() const {
  std::vector<Int> out;
  Eigen::Index n = std::min(d.rows(), d.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    if (!d(i, i).is_zero()) out.push_back(d(i, i));
  return out;
}

SmithResult snf(const IntMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithResult r;
  r.d = m;
  r.u = IntMat::Identity(rows, rows);
  r.v = IntMat::Identity(cols, cols);
  IntMat& d = r.d;

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      auto [pi, pj] = min_abs_pivot(d, t);
      if (pi < 0) break;  // remaining block is zero
      swap_rows(d, t, pi);
      swap_rows(r.u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(r.v, t, pj);

      const Int p = d(t, t);
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d(i, t).is_zero()) continue;
        Int q = floor_div(d(i, t), p);
        d.row(i) -= d.row(t) * q;
        r.u.row(i) -= r.u.row(t) * q;
        if (!d(i, t).is_zero()) dirty = true;  // remainder became new minimum
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d(t, j).is_zero()) continue;
        Int q = floor_div(d(t, j), p);
        d.col(j) -= d.col(t) * q;
        r.v.col(j) -= r.v.col(t) * q;
        if (!d(t, j).is_zero()) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce that the pivot divides the rest.
      bool divides = true;
      for (Eigen::Index i = t + 1; i < rows && divides; ++i)
        for (Eigen::Index j = t + 1; j < cols && divides; ++j)
          if (!(d(i, j) % p).is_zero()) {
            d.row(t) += d.row(i);
            r.u.row(t) += r.u.row(i);
            divides = false;
          }
      if (divides) break;
    }
  }

  for (Eigen::Index t = 0; t < steps; ++t) {
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      r.u.row(t) = -r.u.row(t);
    }
  }
  return r;
}

Signature signature(const IntMat& gram) { return signature(to_rat(gram)); }

Signature signature(const RatMat& gram) {
  require(is_symmetric(gram), "signature requires a symmetric matrix");
  RatMat a = gram;
  const Eigen::Index n = a.rows();
  Signature sig;

  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      // Prefer a nonzero diagonal entry further down.
      Eigen::Index pivot = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (!a(i, i).is_zero()) {
          pivot = i;
          break;
        }
      if (pivot >= 0) {
        a.row(k).swap(a.row(pivot));
        a.col(k).swap(a.col(pivot));
      } else {
        // All-zero diagonal on the trailing block: either the block is zero,
        // or some off-diagonal a(i,j) != 0 and x_i -> x_i + x_j produces the
        // diagonal entry 2 a(i,j).
        Eigen::Index bi = -1, bj = -1;
        for (Eigen::Index i = k; i < n && bi < 0; ++i)
          for (Eigen::Index j = i + 1; j < n && bi < 0; ++j)
            if (!a(i, j).is_zero()) {
              bi = i;
              bj = j;
            }
        if (bi < 0) {
          sig.n_zero += static_cast<int>(n - k);
          return sig;
        }
        a.row(bi) += a.row(bj);
        a.col(bi) += a.col(bj);
        a.row(k).swap(a.row(bi));
        a.col(k).swap(a.col(bi));
      }
    }

    const Rat d = a(k, k);
    if (d > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Rat f = a(i, k) / d;
      a.row(i) -= a.row(k) * f;
      a.col(i) -= a.col(k) * f;
    }
  }
  return sig;
}

IntMat kernel_basis(const IntMat& m) {
  // m x = 0  <=>  D y = 0 with x = V y, so the kernel is spanned by the
  // columns of V at zero positions of D. V unimodular keeps it saturated.
  SmithResult s = snf(m);
  const Eigen::Index n = m.cols();
  const Eigen::Index diag = std::min(m.rows(), m.cols());
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index j = 0; j < n; ++j)
    if (j >= diag || s.d(j, j).is_zero()) free_cols.push_back(j);
  IntMat k(n, static_cast<Eigen::Index>(free_cols.size()));
  for (Eigen::Index c = 0; c < k.cols(); ++c) k.col(c) = s.v.col(free_cols[c]);
  return k;
}

IntMat column_span_basis(const IntMat& m) {
  // U m V = D  =>  span(m) = U^{ -1 } span(D); rank must equal row count.
  SmithResult s = snf(m);
  const Eigen::Index k = m.rows();
  require(s.rank() == k, "column span is not of full rank");
  IntMat uinv = unimodular_inverse(s.u);
  IntMat basis(k, k);
  for (Eigen::Index j = 0; j < k; ++j) basis.col(j) = uinv.col(j) * s.d(j, j);
  return basis;
}

IntMat saturation_basis(const IntMat& m) {
  SmithResult s = snf(m);
  const int rank = s.rank();
  IntMat uinv = unimodular_inverse(s.u);
  IntMat basis(m.rows(), rank);
  for (int j = 0; j < rank; ++j) basis.col(j) = uinv.col(j);
  return basis;
}

bool columns_primitive(const IntMat& m) {
  SmithResult s = snf(m);
  auto div = s.divisors();
  if (static_cast<Eigen::Index>(div.size()) != m.cols()) return false;
  return std::all_of(div.begin(), div.end(),
                     [](const Int& d) { return d == 1; });
}

}  // namespace latq
