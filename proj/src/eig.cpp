#include "conedist/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace conedist {

namespace {

constexpr int kSweepCap = 100;
constexpr double kOffTolFactor = 1e-13;

double offdiag_mass(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(2.0 * sum);
}

// One Jacobi rotation zeroing a(p, q), accumulated into q_mat.
void rotate(Eigen::MatrixXd& a, Eigen::MatrixXd& q_mat, Eigen::Index p,
            Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(tau) > 1e150) {
    t = 1.0 / (2.0 * tau);  // sqrt(1 + tau^2) would overflow
  } else if (tau >= 0.0) {
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  } else {
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Eigen::Index n = a.rows();
  const double app = a(p, p);
  const double aqq = a(q, q);
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(p, k) = a(k, p);
    a(k, q) = s * akp + c * akq;
    a(q, k) = a(k, q);
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double qkp = q_mat(k, p);
    const double qkq = q_mat(k, q);
    q_mat(k, p) = c * qkp - s * qkq;
    q_mat(k, q) = s * qkp + c * qkq;
  }
}

}  // namespace

EigDecomp eig(const SymMat& x) {
  const Eigen::Index n = x.order();
  Eigen::MatrixXd a = x.dense();
  Eigen::MatrixXd q_mat = Eigen::MatrixXd::Identity(n, n);
  const double tol = kOffTolFactor * std::max(1.0, fro_norm(x));

  int sweep = 0;
  while (offdiag_mass(a) > tol) {
    if (sweep == kSweepCap) {
      throw ConvergenceError("eig: Jacobi sweeps exhausted (cap " +
                             std::to_string(kSweepCap) + ")");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        rotate(a, q_mat, p, q);
      }
    }
    ++sweep;
  }

  std::vector<Eigen::Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&a](Eigen::Index i, Eigen::Index j) {
                     return a(i, i) < a(j, j);
                   });

  EigDecomp out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(perm[k], perm[k]);
    out.eigenvectors.col(k) = q_mat.col(perm[k]);
  }
  return out;
}

SymMat psd_project(const SymMat& x) {
  const EigDecomp d = eig(x);
  Eigen::VectorXd clipped = d.eigenvalues.cwiseMax(0.0);
  Eigen::MatrixXd m = d.eigenvectors * clipped.asDiagonal() *
                      d.eigenvectors.transpose();
  // Reconstruction is symmetric only to rounding; average the mirror pair.
  return SymMat::Symmetrized(m);
}

PsdDistance dist_to_psd(const SymMat& x) {
  const EigDecomp d = eig(x);
  const Eigen::Index n = x.order();

  Eigen::Index neg = 0;
  while (neg < n && d.eigenvalues[neg] < 0.0) ++neg;

  double sq = 0.0;
  for (Eigen::Index k = 0; k < neg; ++k) {
    sq += d.eigenvalues[k] * d.eigenvalues[k];
  }

  Eigen::VectorXd clipped = d.eigenvalues.cwiseMax(0.0);
  Eigen::MatrixXd m = d.eigenvectors * clipped.asDiagonal() *
                      d.eigenvectors.transpose();

  PsdDistance out{std::sqrt(sq), d.eigenvalues.head(neg),
                  SymMat::Symmetrized(m)};
  return out;
}

}  // namespace conedist
