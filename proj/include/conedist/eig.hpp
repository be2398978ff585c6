/**
 * Symmetric eigendecomposition and Euclidean projection onto the PSD cone.
 *
 * The eigensolver runs cyclic Jacobi rotations on a dense copy of the
 * matrix. Convergence: off-diagonal Frobenius mass <= 1e-13 * max(1, |X|_F),
 * hard cap of 100 sweeps, after which it throws. This keeps the solver
 * self-contained and near machine precision for the orders this library
 * targets (n up to ~100).
 */

#pragma once

#include <Eigen/Dense>

#include <stdexcept>

#include "conedist/sym_mat.hpp"

namespace conedist {

// Jacobi sweeps exhausted without reaching the off-diagonal tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EigDecomp {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // column k pairs with eigenvalues[k]
};

EigDecomp eig(const SymMat& x);

// Q diag(max(lambda, 0)) Q^T. Negative eigenvalues clip to exactly 0.
SymMat psd_project(const SymMat& x);

struct PsdDistance {
  double distance;                      // sqrt(sum of squared negative eigenvalues)
  Eigen::VectorXd negative_eigenvalues; // ascending
  SymMat projection;
};

PsdDistance dist_to_psd(const SymMat& x);

}  // namespace conedist
