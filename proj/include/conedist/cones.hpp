/**
 * Membership tests for the PSD cone and its polyhedral / second-order
 * outer approximations:
 *
 *   psd       all eigenvalues >= 0
 *   dd-star   X_ii + X_jj +/- 2 X_ij >= 0 for all i <= j
 *   sdd-star  X_ii >= 0 and X_ii X_jj >= X_ij^2 (every 2x2 principal
 *             submatrix PSD)
 *   k-psd     every k x k principal submatrix PSD
 *   dd        primal diagonal dominance, X_ii >= sum_{j != i} |X_ij|
 *
 * Residual convention: each constraint is written as r >= 0 and the report
 * carries r itself; a constraint is violated when r < -tol. The worst-case
 * witness families sit exactly on boundaries, so the default tolerance is
 * relative: 1e-9 * max(1, |X|_F). Constraint descriptors print 1-based
 * indices.
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "conedist/sym_mat.hpp"

namespace conedist {

enum class Cone { kPsd, kDdStar, kSddStar, kKPsd, kDd };

std::string_view cone_name(Cone c);

struct Violation {
  std::string constraint;
  double residual;
};

struct MembershipReport {
  Cone cone;
  bool verdict;  // true iff violations is empty
  std::vector<Violation> violations;
};

double default_tol(const SymMat& x);

MembershipReport psd_contains(const SymMat& x, double tol);
MembershipReport dd_star_contains(const SymMat& x, double tol);
MembershipReport sdd_star_contains(const SymMat& x, double tol);
MembershipReport k_psd_contains(const SymMat& x, int k, double tol);
MembershipReport dd_primal_contains(const SymMat& x, double tol);

MembershipReport psd_contains(const SymMat& x);
MembershipReport dd_star_contains(const SymMat& x);
MembershipReport sdd_star_contains(const SymMat& x);
MembershipReport k_psd_contains(const SymMat& x, int k);
MembershipReport dd_primal_contains(const SymMat& x);

// <X, Y>; nonnegative whenever X is in dd-star and Y is diagonally dominant.
double duality_pairing(const SymMat& x, const SymMat& y);

// Principal submatrices enumerated per k-psd check are capped at this count;
// beyond it the operation refuses rather than sampling.
inline constexpr long long kKPsdEnumerationCap = 200000;

}  // namespace conedist
