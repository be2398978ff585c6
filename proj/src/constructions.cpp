#include "conedist/constructions.hpp"

#include <stdexcept>
#include <string>

namespace conedist {

SymMat make_g(double a, double b, int n) {
  if (n < 1) throw std::invalid_argument("make_g: n must be >= 1");
  SymMat m(n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, b);
    for (int j = i + 1; j < n; ++j) m.set(i, j, -a);
  }
  return m;
}

std::vector<EigenvalueMultiplicity> g_spectrum(double a, double b, int n) {
  if (n < 2) throw std::invalid_argument("g_spectrum: n must be >= 2");
  const double bulk = a + b;
  const double low = b - (n - 1) * a;
  if (low == bulk) return {{bulk, n}};
  if (low < bulk) return {{low, 1}, {bulk, n - 1}};
  return {{bulk, n - 1}, {low, 1}};
}

SymMat sdd_trace_worst(int n) {
  if (n < 2) throw std::invalid_argument("sdd_trace_worst: n must be >= 2");
  return make_g(1.0 / n, 1.0 / n, n);
}

SymMat ExtremeCandidate::realize() const {
  SymMat m(n);
  m.set(q, q, 1.0);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (i == q) continue;
    m.set(i, q, signs[k] * 0.5);
    ++k;
  }
  return m;
}

std::int64_t candidate_count(int n) {
  return static_cast<std::int64_t>(n) << (n - 1);
}

CandidateList::CandidateList(int n) : n_(n) {
  if (n < 2 || n > 20) {
    throw std::invalid_argument(
        "enumerate_candidates: n must be in [2, 20], got " + std::to_string(n));
  }
  size_ = candidate_count(n);
}

ExtremeCandidate CandidateList::operator[](std::int64_t index) const {
  if (index < 0 || index >= size_) {
    throw std::out_of_range("CandidateList: index out of range");
  }
  const std::int64_t per_q = std::int64_t{1} << (n_ - 1);
  const int q = static_cast<int>(index / per_q);
  const std::int64_t counter = index % per_q;
  ExtremeCandidate c{n_, q, std::vector<int>(n_ - 1)};
  for (int k = 0; k < n_ - 1; ++k) {
    c.signs[k] = (counter >> k) & 1 ? -1 : 1;
  }
  return c;
}

SymMat make_star(int n, const std::vector<int>& signs) {
  if (n < 2) throw std::invalid_argument("make_star: n must be >= 2");
  if (static_cast<int>(signs.size()) != n - 1) {
    throw std::invalid_argument("make_star: need exactly n-1 signs");
  }
  ExtremeCandidate c{n, n - 1, signs};
  return c.realize();
}

SymMat sdd_tilde(const SymMat& x) {
  const int n = static_cast<int>(x.order());
  if (n < 3) throw std::invalid_argument("sdd_tilde: n must be >= 3");
  SymMat t(n);
  for (int i = 0; i < n; ++i) {
    t.set(i, i, 2.0 / n * x(i, i));
    for (int j = i + 1; j < n; ++j) {
      t.set(i, j, 2.0 * x(i, j) / (static_cast<double>(n) * (n - 1)));
    }
  }
  return t;
}

SymMat dd_bar(const SymMat& x) {
  const int n = static_cast<int>(x.order());
  if (n < 3) throw std::invalid_argument("dd_bar: n must be >= 3");
  const double pairs = 0.5 * n * (n - 1);  // C(n,2)
  const double tr = trace(x);
  SymMat b(n);
  for (int i = 0; i < n; ++i) {
    b.set(i, i, (0.5 * (n - 2) * x(i, i) + 0.5 * tr) / pairs);
    for (int j = i + 1; j < n; ++j) {
      b.set(i, j, x(i, j) / pairs);
    }
  }
  return b;
}

}  // namespace conedist
