#pragma once

// Integer normal forms over any exact Euclidean scalar (Integer, or a built-in
// integer type for small experiments):
//
//   smith_normal_form   U * A * V = D with D diagonal, d_i | d_{i+1}, d_i >= 0
//   column_echelon      A * V = [E | 0] with E in column echelon form
//
// The Smith pivot rule is fixed: the nonzero entry of smallest absolute value
// in the active submatrix, ties broken by lowest row, then lowest column.

#include "torus/integer.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace torus {

namespace detail {

template <typename S>
int compare_abs(const S& a, const S& b) {
  using std::abs;
  const S x = abs(a);
  const S y = abs(b);
  return x < y ? -1 : (y < x ? 1 : 0);
}

inline int compare_abs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.backend().data(), b.backend().data());
}

template <typename S>
bool is_zero(const S& a) {
  return a == 0;
}

inline bool is_zero(const Integer& a) { return mpz_sgn(a.backend().data()) == 0; }

// y += a * x
template <typename S>
void axpy(S& y, const S& a, const S& x) {
  y += a * x;
}

inline void axpy(Integer& y, const Integer& a, const Integer& x) {
  mpz_addmul(y.backend().data(), a.backend().data(), x.backend().data());
}

// row(dst) += q * row(src)
template <typename M, typename S>
void add_row_multiple(M& m, Index dst, Index src, const S& q) {
  for (Index j = 0; j < m.cols(); ++j) {
    if (!is_zero(m(src, j))) axpy(m(dst, j), q, m(src, j));
  }
}

// col(dst) += q * col(src), rows from `first` on
template <typename M, typename S>
void add_col_multiple(M& m, Index dst, Index src, const S& q, Index first = 0) {
  for (Index i = first; i < m.rows(); ++i) {
    if (!is_zero(m(i, src))) axpy(m(i, dst), q, m(i, src));
  }
}

template <typename M>
void negate_row(M& m, Index r) {
  for (Index j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

template <typename M>
void negate_col(M& m, Index c) {
  for (Index i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

}  // namespace detail

template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> D;
  Matrix<Scalar> U;
  Matrix<Scalar> V;
  Matrix<Scalar> U_inverse;  // only when SmithOptions::left_inverse is set
  Index rank = 0;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Index i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

struct SmithOptions {
  bool left = true;
  bool right = true;
  bool left_inverse = false;
};

template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& A,
                                                      SmithOptions options = {}) {
  using Scalar = typename Derived::Scalar;
  using detail::compare_abs;
  using detail::is_zero;

  SmithForm<Scalar> out;
  Matrix<Scalar>& D = out.D;
  D = A;
  const Index m = D.rows();
  const Index n = D.cols();
  Matrix<Scalar> U, V, Ui;
  if (options.left) U = Matrix<Scalar>::Identity(m, m);
  if (options.right) V = Matrix<Scalar>::Identity(n, n);
  if (options.left_inverse) Ui = Matrix<Scalar>::Identity(m, m);

  auto swap_rows = [&](Index a, Index b) {
    if (a == b) return;
    D.row(a).swap(D.row(b));
    if (options.left) U.row(a).swap(U.row(b));
    if (options.left_inverse) Ui.col(a).swap(Ui.col(b));
  };
  auto swap_cols = [&](Index a, Index b) {
    if (a == b) return;
    D.col(a).swap(D.col(b));
    if (options.right) V.col(a).swap(V.col(b));
  };
  // row(dst) += q row(src)
  auto row_op = [&](Index dst, Index src, const Scalar& q) {
    detail::add_row_multiple(D, dst, src, q);
    if (options.left) detail::add_row_multiple(U, dst, src, q);
    if (options.left_inverse) detail::add_col_multiple(Ui, src, dst, Scalar(-q));
  };
  auto col_op = [&](Index dst, Index src, const Scalar& q) {
    detail::add_col_multiple(D, dst, src, q);
    if (options.right) detail::add_col_multiple(V, dst, src, q);
  };

  const Index limit = std::min(m, n);
  Index t = 0;
  for (; t < limit; ++t) {
    bool found_any = true;
    for (;;) {
      // pivot search
      Index pi = -1, pj = -1;
      for (Index i = t; i < m; ++i) {
        for (Index j = t; j < n; ++j) {
          if (is_zero(D(i, j))) continue;
          if (pi < 0 || compare_abs(D(i, j), D(pi, pj)) < 0) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) {
        found_any = false;
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (is_zero(D(i, t))) continue;
        const Scalar q = D(i, t) / D(t, t);
        if (!is_zero(q)) row_op(i, t, Scalar(-q));
        if (!is_zero(D(i, t))) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (is_zero(D(t, j))) continue;
        const Scalar q = D(t, j) / D(t, t);
        if (!is_zero(q)) col_op(j, t, Scalar(-q));
        if (!is_zero(D(t, j))) clean = false;
      }
      if (!clean) continue;

      // divisibility of the remaining block by the pivot
      bool divides_all = true;
      if (compare_abs(D(t, t), Scalar(1)) != 0) {
        for (Index i = t + 1; i < m && divides_all; ++i) {
          for (Index j = t + 1; j < n; ++j) {
            if (!is_zero(D(i, j)) && !is_zero(Scalar(D(i, j) % D(t, t)))) {
              row_op(t, i, Scalar(1));
              divides_all = false;
              break;
            }
          }
        }
      }
      if (divides_all) break;
    }
    if (!found_any) break;
    if (D(t, t) < 0) {
      detail::negate_row(D, t);
      if (options.left) detail::negate_row(U, t);
      if (options.left_inverse) detail::negate_col(Ui, t);
    }
  }
  out.rank = t;
  out.U = std::move(U);
  out.V = std::move(V);
  out.U_inverse = std::move(Ui);
  return out;
}

/// A * V = [E | 0]; pivot_rows[k] is the first row where column k of E is
/// nonzero, strictly increasing, and E(pivot_rows[k], l) = 0 for l > k.
template <typename Scalar>
struct ColumnEchelon {
  Matrix<Scalar> E;
  Matrix<Scalar> V;
  std::vector<Index> pivot_rows;

  Index rank() const { return static_cast<Index>(pivot_rows.size()); }
  /// Integer kernel basis of the original matrix.
  Matrix<Scalar> kernel() const { return V.rightCols(V.cols() - rank()); }
};

/// `tracked_rows` < 0 keeps all of V; otherwise only its leading rows are
/// maintained (enough for kernels projected onto the first coordinates).
template <typename Derived>
ColumnEchelon<typename Derived::Scalar> column_echelon(const Eigen::MatrixBase<Derived>& A,
                                                       bool track_transform = true, Index tracked_rows = -1) {
  using Scalar = typename Derived::Scalar;
  using detail::compare_abs;
  using detail::is_zero;

  Matrix<Scalar> W = A;
  const Index m = W.rows();
  const Index n = W.cols();
  Matrix<Scalar> V;
  if (track_transform) V = Matrix<Scalar>::Identity(n, n).topRows(tracked_rows < 0 ? n : std::min(tracked_rows, n));
  std::vector<Index> pivots;

  auto swap_cols = [&](Index a, Index b) {
    if (a == b) return;
    W.col(a).swap(W.col(b));
    if (track_transform) V.col(a).swap(V.col(b));
  };
  // columns from r on vanish above the current row, so operations start there
  Index current_row = 0;
  auto col_op = [&](Index dst, Index src, const Scalar& q) {
    detail::add_col_multiple(W, dst, src, q, current_row);
    if (track_transform) detail::add_col_multiple(V, dst, src, q);
  };

  Index r = 0;
  for (Index i = 0; i < m && r < n; ++i) {
    current_row = i;
    for (;;) {
      Index best = -1;
      for (Index j = r; j < n; ++j) {
        if (is_zero(W(i, j))) continue;
        if (best < 0 || compare_abs(W(i, j), W(i, best)) < 0) best = j;
      }
      if (best < 0) break;
      swap_cols(r, best);
      bool clean = true;
      for (Index j = r + 1; j < n; ++j) {
        if (is_zero(W(i, j))) continue;
        const Scalar q = W(i, j) / W(i, r);
        col_op(j, r, Scalar(-q));
        if (!is_zero(W(i, j))) clean = false;
      }
      if (clean) {
        if (W(i, r) < 0) {
          detail::negate_col(W, r);
          if (track_transform) detail::negate_col(V, r);
        }
        pivots.push_back(i);
        ++r;
        break;
      }
    }
  }

  ColumnEchelon<Scalar> out;
  out.E = W.leftCols(r);
  out.V = std::move(V);
  out.pivot_rows = std::move(pivots);
  return out;
}

/// Solves E c = y for integral c; nullopt when y is outside the column lattice.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_echelon(const ColumnEchelon<Scalar>& ech,
                                            const Vector<Scalar>& y) {
  const Index r = ech.rank();
  Vector<Scalar> residual = y;
  Vector<Scalar> c = Vector<Scalar>::Zero(r);
  for (Index k = 0; k < r; ++k) {
    const Index p = ech.pivot_rows[static_cast<std::size_t>(k)];
    for (Index i = (k == 0 ? 0 : ech.pivot_rows[static_cast<std::size_t>(k - 1)] + 1); i < p; ++i) {
      if (!detail::is_zero(residual(i))) return std::nullopt;
    }
    if (detail::is_zero(residual(p))) continue;
    const Scalar& pivot = ech.E(p, k);
    if (!detail::is_zero(Scalar(residual(p) % pivot))) return std::nullopt;
    c(k) = residual(p) / pivot;
    for (Index i = p; i < residual.size(); ++i) {
      if (!detail::is_zero(ech.E(i, k))) detail::axpy(residual(i), Scalar(-c(k)), ech.E(i, k));
    }
  }
  for (Index i = 0; i < residual.size(); ++i) {
    if (!detail::is_zero(residual(i))) return std::nullopt;
  }
  return c;
}

}  // namespace torus
