// Test-only oracles and generators. Everything here is deliberately
// independent of the library paths under test: norms are brute-force
// full-matrix sums, the reference eigensolver is Eigen's, and the
// certificate matrices are built by explicit summation of their 2x2
// pieces instead of the closed-form entries.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "conedist/rng.hpp"
#include "conedist/sym_mat.hpp"

namespace conedist_test {

inline double brute_force_fro(const conedist::SymMat& x) {
  const Eigen::MatrixXd m = x.dense();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      sum += m(i, j) * m(i, j);
    }
  }
  return std::sqrt(sum);
}

inline double brute_force_inner(const conedist::SymMat& x,
                                const conedist::SymMat& y) {
  const Eigen::MatrixXd a = x.dense();
  const Eigen::MatrixXd b = y.dense();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      sum += a(i, j) * b(i, j);
    }
  }
  return sum;
}

inline Eigen::VectorXd reference_eigenvalues(const conedist::SymMat& x) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(x.dense());
  return solver.eigenvalues();  // ascending
}

inline double reference_dist_to_psd(const conedist::SymMat& x) {
  const Eigen::VectorXd ev = reference_eigenvalues(x);
  double sq = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < 0.0) sq += ev[i] * ev[i];
  }
  return std::sqrt(sq);
}

// Certificate matrix for sdd-star members by explicit summation: for each
// pair i < j, the n x n piece carrying X_ii, X_jj and X_ij, averaged over
// all C(n,2) pairs.
inline conedist::SymMat pairwise_sdd_certificate(const conedist::SymMat& x) {
  const Eigen::Index n = x.order();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Eigen::MatrixXd piece = Eigen::MatrixXd::Zero(n, n);
      piece(i, i) = x(i, i);
      piece(j, j) = x(j, j);
      piece(i, j) = x(i, j);
      piece(j, i) = x(i, j);
      sum += piece;
    }
  }
  const double pairs = 0.5 * static_cast<double>(n) * (n - 1);
  return conedist::SymMat::FromDense(sum / pairs, 1e-9);
}

// Same for dd-star members, with both diagonal slots of a piece holding
// the pair average (X_ii + X_jj) / 2.
inline conedist::SymMat pairwise_dd_certificate(const conedist::SymMat& x) {
  const Eigen::Index n = x.order();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Eigen::MatrixXd piece = Eigen::MatrixXd::Zero(n, n);
      const double avg = 0.5 * (x(i, i) + x(j, j));
      piece(i, i) = avg;
      piece(j, j) = avg;
      piece(i, j) = x(i, j);
      piece(j, i) = x(i, j);
      sum += piece;
    }
  }
  const double pairs = 0.5 * static_cast<double>(n) * (n - 1);
  return conedist::SymMat::FromDense(sum / pairs, 1e-9);
}

inline conedist::SymMat random_symmetric(conedist::SplitMix64& rng,
                                         Eigen::Index n, double scale = 1.0) {
  conedist::SymMat m(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      m.set(i, j, scale * (2.0 * rng.next_double() - 1.0));
    }
  }
  return m;
}

// A = B^T B with B standard normal: PSD, full rank almost surely.
inline conedist::SymMat random_psd(conedist::SplitMix64& rng, Eigen::Index n) {
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      b(i, j) = rng.next_gaussian();
    }
  }
  Eigen::MatrixXd a = b.transpose() * b;
  return conedist::SymMat::Symmetrized(a);
}

// Diagonally dominant member: random off-diagonals, each diagonal set to
// its absolute row sum plus a nonnegative slack.
inline conedist::SymMat random_dd_primal(conedist::SplitMix64& rng,
                                         Eigen::Index n) {
  conedist::SymMat m(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      m.set(i, j, 2.0 * rng.next_double() - 1.0);
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    double off = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i) off += std::abs(m(i, j));
    }
    m.set(i, i, off + rng.next_double());
  }
  return m;
}

}  // namespace conedist_test
