/**
 * Constructors for the worst-case matrix families used by the distance
 * analysis, with closed-form spectra where they are known:
 *
 *   make_g(a, b, n)      (a+b) I - a ee^T: diagonal b, off-diagonal -a.
 *                        Spectrum: a+b (multiplicity n-1), b-(n-1)a.
 *   sdd_trace_worst(n)   G(1/n, 1/n, n), the trace-1 member of sdd-star
 *                        farthest from the PSD cone.
 *   make_star(n, signs)  arrowhead matrix with 1 in the last diagonal
 *                        entry and +/- 1/2 down the last row/column.
 *                        Spectrum: (1 +/- sqrt(n))/2 and n-2 zeros.
 *
 * ExtremeCandidate enumerates the vertex candidates of the trace-1 slice
 * of dd-star: one distinguished diagonal entry q equal to 1, +/- 1/2 in
 * row/column q, zeros elsewhere. All n * 2^(n-1) candidates realize to
 * members of that slice and share the same distance to the PSD cone.
 */

#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "conedist/sym_mat.hpp"

namespace conedist {

SymMat make_g(double a, double b, int n);

struct EigenvalueMultiplicity {
  double value;
  int multiplicity;
};

// Closed-form spectrum of make_g(a, b, n), ascending; coincident values
// merge into one entry. n >= 2.
std::vector<EigenvalueMultiplicity> g_spectrum(double a, double b, int n);

SymMat sdd_trace_worst(int n);

struct ExtremeCandidate {
  int n;
  int q;                   // 0-based distinguished diagonal index
  std::vector<int> signs;  // n-1 entries in {+1,-1}; position k maps to the
                           // k-th row index != q, in increasing order

  SymMat realize() const;
};

std::int64_t candidate_count(int n);  // n * 2^(n-1)

// Index-addressable enumeration of all candidates. Order is deterministic:
// q ascending; for each q the sign vector runs as a little-endian binary
// counter (bit k of the counter set means signs[k] = -1). Splitting by
// index range is safe for parallel consumption.
class CandidateList {
 public:
  explicit CandidateList(int n);  // requires 2 <= n <= 20

  std::int64_t size() const { return size_; }
  ExtremeCandidate operator[](std::int64_t index) const;

  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ExtremeCandidate;
    using difference_type = std::ptrdiff_t;

    Iterator(const CandidateList* list, std::int64_t index)
        : list_(list), index_(index) {}
    ExtremeCandidate operator*() const { return (*list_)[index_]; }
    Iterator& operator++() { ++index_; return *this; }
    Iterator operator++(int) { Iterator t = *this; ++index_; return t; }
    friend bool operator==(const Iterator& a, const Iterator& b) {
      return a.index_ == b.index_;
    }

   private:
    const CandidateList* list_;
    std::int64_t index_;
  };

  Iterator begin() const { return Iterator(this, 0); }
  Iterator end() const { return Iterator(this, size_); }

 private:
  int n_;
  std::int64_t size_;
};

inline CandidateList enumerate_candidates(int n) { return CandidateList(n); }

SymMat make_star(int n, const std::vector<int>& signs);

// Scaled PSD certificate matrices built from 2x2 pieces of X. Both require
// n >= 3; membership of X in the matching cone is the caller's contract.
//   sdd_tilde: T_ii = (2/n) X_ii,            T_ij = 2 X_ij / (n(n-1))
//   dd_bar:    B_ii = ((n-2) X_ii + Tr X) / (2 C(n,2)),  B_ij = X_ij / C(n,2)
SymMat sdd_tilde(const SymMat& x);
SymMat dd_bar(const SymMat& x);

}  // namespace conedist
