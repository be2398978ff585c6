#include "conedist/sym_mat.hpp"

#include <cmath>
#include <string>

namespace conedist {

SymMat::SymMat(Eigen::Index n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("SymMat: order must be >= 1, got " +
                                std::to_string(n));
  }
  data_ = Eigen::VectorXd::Zero(n * (n + 1) / 2);
}

SymMat SymMat::Identity(Eigen::Index n) {
  SymMat m(n);
  for (Eigen::Index i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymMat SymMat::Diagonal(const Eigen::VectorXd& diag) {
  SymMat m(diag.size());
  for (Eigen::Index i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

SymMat SymMat::FromDense(const Eigen::MatrixXd& m, double sym_tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("SymMat::FromDense: matrix is not square");
  }
  SymMat out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (!(std::abs(m(i, j) - m(j, i)) <= sym_tol)) {
        throw std::invalid_argument(
            "SymMat::FromDense: asymmetry at (" + std::to_string(i + 1) + "," +
            std::to_string(j + 1) + ") exceeds tolerance");
      }
      out.set(i, j, 0.5 * (m(i, j) + m(j, i)));
    }
  }
  return out;
}

SymMat SymMat::Symmetrized(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("SymMat::Symmetrized: matrix is not square");
  }
  SymMat out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      out.set(i, j, 0.5 * (m(i, j) + m(j, i)));
    }
  }
  return out;
}

Eigen::Index SymMat::pack_index(Eigen::Index i, Eigen::Index j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n_) {
    throw std::out_of_range("SymMat: index out of range");
  }
  return i * n_ - i * (i - 1) / 2 + (j - i);
}

void SymMat::set(Eigen::Index i, Eigen::Index j, double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("SymMat: non-finite entry rejected");
  }
  data_[pack_index(i, j)] = v;
}

Eigen::MatrixXd SymMat::dense() const {
  Eigen::MatrixXd m(n_, n_);
  for (Eigen::Index i = 0; i < n_; ++i) {
    for (Eigen::Index j = i; j < n_; ++j) {
      m(i, j) = (*this)(i, j);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

void SymMat::check_finite() const {
  if (!data_.allFinite()) {
    throw std::invalid_argument("SymMat: non-finite entry rejected");
  }
}

SymMat& SymMat::operator+=(const SymMat& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("SymMat: order mismatch");
  data_ += rhs.data_;
  check_finite();
  return *this;
}

SymMat& SymMat::operator-=(const SymMat& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("SymMat: order mismatch");
  data_ -= rhs.data_;
  check_finite();
  return *this;
}

SymMat& SymMat::operator*=(double s) {
  data_ *= s;
  check_finite();
  return *this;
}

SymMat operator+(SymMat lhs, const SymMat& rhs) { return lhs += rhs; }
SymMat operator-(SymMat lhs, const SymMat& rhs) { return lhs -= rhs; }
SymMat operator*(double s, SymMat m) { return m *= s; }
SymMat operator*(SymMat m, double s) { return m *= s; }

double trace(const SymMat& x) {
  double t = 0.0;
  for (Eigen::Index i = 0; i < x.order(); ++i) t += x(i, i);
  return t;
}

double fro_norm(const SymMat& x) { return std::sqrt(inner(x, x)); }

double inner(const SymMat& x, const SymMat& y) {
  if (x.order() != y.order()) {
    throw std::invalid_argument("inner: order mismatch");
  }
  double diag = 0.0;
  double off = 0.0;
  for (Eigen::Index i = 0; i < x.order(); ++i) {
    diag += x(i, i) * y(i, i);
    for (Eigen::Index j = i + 1; j < x.order(); ++j) {
      off += x(i, j) * y(i, j);
    }
  }
  return diag + 2.0 * off;
}

}  // namespace conedist
