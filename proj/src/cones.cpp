#include "conedist/cones.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "conedist/eig.hpp"

namespace conedist {

namespace {

void check_tol(double tol) {
  if (!(tol >= 0.0)) {
    throw std::invalid_argument("membership: tol must be >= 0");
  }
}

std::string pair_desc(Eigen::Index i, Eigen::Index j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// C(n, k), clamped to cap + 1 to avoid overflow.
long long binomial_capped(int n, int k, long long cap) {
  long long c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;  // exact: product of i consecutive ints is divisible by i!
    if (c > cap) return cap + 1;
  }
  return c;
}

}  // namespace

std::string_view cone_name(Cone c) {
  switch (c) {
    case Cone::kPsd: return "psd";
    case Cone::kDdStar: return "dd-star";
    case Cone::kSddStar: return "sdd-star";
    case Cone::kKPsd: return "k-psd";
    case Cone::kDd: return "dd";
  }
  return "?";
}

double default_tol(const SymMat& x) {
  return 1e-9 * std::max(1.0, fro_norm(x));
}

MembershipReport psd_contains(const SymMat& x, double tol) {
  check_tol(tol);
  MembershipReport r{Cone::kPsd, true, {}};
  const double lambda_min = eig(x).eigenvalues[0];
  if (lambda_min < -tol) {
    r.verdict = false;
    r.violations.push_back({"lambda_min", lambda_min});
  }
  return r;
}

MembershipReport dd_star_contains(const SymMat& x, double tol) {
  check_tol(tol);
  MembershipReport r{Cone::kDdStar, true, {}};
  const Eigen::Index n = x.order();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x(i, i) < -tol) {
      r.violations.push_back({pair_desc(i, i), x(i, i)});
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double plus = x(i, i) + x(j, j) + 2.0 * x(i, j);
      const double minus = x(i, i) + x(j, j) - 2.0 * x(i, j);
      if (plus < -tol) r.violations.push_back({pair_desc(i, j) + "+", plus});
      if (minus < -tol) r.violations.push_back({pair_desc(i, j) + "-", minus});
    }
  }
  r.verdict = r.violations.empty();
  return r;
}

MembershipReport sdd_star_contains(const SymMat& x, double tol) {
  check_tol(tol);
  MembershipReport r{Cone::kSddStar, true, {}};
  const Eigen::Index n = x.order();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x(i, i) < -tol) {
      r.violations.push_back({pair_desc(i, i), x(i, i)});
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double det = x(i, i) * x(j, j) - x(i, j) * x(i, j);
      if (det < -tol) r.violations.push_back({pair_desc(i, j), det});
    }
  }
  r.verdict = r.violations.empty();
  return r;
}

MembershipReport k_psd_contains(const SymMat& x, int k, double tol) {
  check_tol(tol);
  const Eigen::Index n = x.order();
  if (k < 2 || k > n) {
    throw std::invalid_argument("k_psd: requires 2 <= k <= n");
  }
  if (binomial_capped(static_cast<int>(n), k, kKPsdEnumerationCap) >
      kKPsdEnumerationCap) {
    throw std::invalid_argument(
        "k_psd: C(n,k) exceeds the enumeration cap of " +
        std::to_string(kKPsdEnumerationCap) + " submatrices");
  }

  MembershipReport r{Cone::kKPsd, true, {}};
  std::vector<Eigen::Index> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    SymMat sub(k);
    for (int a = 0; a < k; ++a) {
      for (int b = a; b < k; ++b) {
        sub.set(a, b, x(idx[a], idx[b]));
      }
    }
    const double lambda_min = eig(sub).eigenvalues[0];
    if (lambda_min < -tol) {
      std::string desc = "{";
      for (int a = 0; a < k; ++a) {
        if (a > 0) desc += ",";
        desc += std::to_string(idx[a] + 1);
      }
      desc += "}";
      r.violations.push_back({desc, lambda_min});
    }

    // next combination, lexicographic
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int a = pos + 1; a < k; ++a) idx[a] = idx[a - 1] + 1;
  }
  r.verdict = r.violations.empty();
  return r;
}

MembershipReport dd_primal_contains(const SymMat& x, double tol) {
  check_tol(tol);
  MembershipReport r{Cone::kDd, true, {}};
  const Eigen::Index n = x.order();
  for (Eigen::Index i = 0; i < n; ++i) {
    double off = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i) off += std::abs(x(i, j));
    }
    const double residual = x(i, i) - off;
    if (residual < -tol) {
      r.violations.push_back({"row(" + std::to_string(i + 1) + ")", residual});
    }
  }
  r.verdict = r.violations.empty();
  return r;
}

MembershipReport psd_contains(const SymMat& x) {
  return psd_contains(x, default_tol(x));
}
MembershipReport dd_star_contains(const SymMat& x) {
  return dd_star_contains(x, default_tol(x));
}
MembershipReport sdd_star_contains(const SymMat& x) {
  return sdd_star_contains(x, default_tol(x));
}
MembershipReport k_psd_contains(const SymMat& x, int k) {
  return k_psd_contains(x, k, default_tol(x));
}
MembershipReport dd_primal_contains(const SymMat& x) {
  return dd_primal_contains(x, default_tol(x));
}

double duality_pairing(const SymMat& x, const SymMat& y) {
  return inner(x, y);
}

}  // namespace conedist
