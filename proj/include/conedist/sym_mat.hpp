/**
 * Dense real symmetric matrices with packed upper-triangle storage.
 *
 * Symmetry is structural: only entries (i, j) with i <= j are stored, and
 * reads of (j, i) resolve to (i, j). Norms and inner products are computed
 * as if the full matrix were materialized, so off-diagonal terms count
 * twice. All entries are kept finite; constructors and mutators reject
 * NaN/Inf.
 */

#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace conedist {

class SymMat {
 public:
  // Zero matrix of the given order. n >= 1.
  explicit SymMat(Eigen::Index n);

  static SymMat Identity(Eigen::Index n);
  static SymMat Diagonal(const Eigen::VectorXd& diag);

  // Builds from a dense matrix, verifying |m(i,j) - m(j,i)| <= sym_tol
  // (absolute) for all pairs. The stored value is the average of the two
  // mirrored entries.
  static SymMat FromDense(const Eigen::MatrixXd& m, double sym_tol = 1e-12);

  // Builds (m + m^T) / 2 without a symmetry check, for results of
  // numerically symmetric computations.
  static SymMat Symmetrized(const Eigen::MatrixXd& m);

  Eigen::Index order() const { return n_; }

  double operator()(Eigen::Index i, Eigen::Index j) const {
    return data_[pack_index(i, j)];
  }

  // Writes entry (i, j) and, structurally, (j, i). Rejects non-finite v.
  void set(Eigen::Index i, Eigen::Index j, double v);

  Eigen::MatrixXd dense() const;

  // Packed upper triangle, row-major over i <= j.
  const Eigen::VectorXd& packed() const { return data_; }

  SymMat& operator+=(const SymMat& rhs);
  SymMat& operator-=(const SymMat& rhs);
  SymMat& operator*=(double s);

  friend bool operator==(const SymMat& a, const SymMat& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  Eigen::Index pack_index(Eigen::Index i, Eigen::Index j) const;
  void check_finite() const;

  Eigen::Index n_;
  Eigen::VectorXd data_;
};

SymMat operator+(SymMat lhs, const SymMat& rhs);
SymMat operator-(SymMat lhs, const SymMat& rhs);
SymMat operator*(double s, SymMat m);
SymMat operator*(SymMat m, double s);

// Sum of diagonal entries.
double trace(const SymMat& x);

// Frobenius norm over the full (unpacked) matrix.
double fro_norm(const SymMat& x);

// Entrywise product sum over the full matrix. Orders must match.
double inner(const SymMat& x, const SymMat& y);

}  // namespace conedist
