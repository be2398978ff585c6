/**
 * Distance analysis between the PSD cone and its dd-star / sdd-star outer
 * approximations.
 *
 * Exact values come from proof-backed routes only: a closed-form witness
 * family for the trace-normalized sdd-star distance and the Frobenius-
 * normalized distances, and finite enumeration of the trace-1 dd-star
 * vertex candidates for the trace-normalized dd-star distance (the
 * distance function is convex and continuous, the slice is a compact
 * polytope, so the maximum is attained at an extreme point). Sampling is
 * reported alongside as an upper-bound sanity check, never as the value.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conedist/samplers.hpp"
#include "conedist/sym_mat.hpp"

namespace conedist {

// Threshold for every comparison against a closed-form value: comfortably
// above eigensolver error, far below any real discrepancy.
inline constexpr double kValueTol = 1e-9;

enum class Method { kEnumeration, kWitness, kSampling };

std::string_view method_name(Method m);

struct SampleStats {
  std::int64_t count;
  double max;
  std::int64_t argmax_index;
};

struct DistanceReport {
  SetId set;
  Normalization normalization;
  double value;
  Method method;
  std::optional<SymMat> witness;     // achieves value for enumeration/witness
  std::optional<SampleStats> stats;  // present when method is sampling
};

// Trace-normalized distance of dd-star by enumerating all n * 2^(n-1)
// vertex candidates of the trace-1 slice. Value is the computed maximum,
// equal to (sqrt(n) - 1)/2 within kValueTol. 2 <= n <= 20.
DistanceReport dd_star_trace_distance_exact(int n);

// Trace-normalized distance of sdd-star: (n-2)/n, achieved by
// sdd_trace_worst(n). n >= 2.
DistanceReport sdd_star_trace_distance_exact(int n);

// Frobenius-normalized distances for n >= 4: (n-2)/n for both sets, with
// the unit-norm witness G(1/n, 1/n, n). Refuses n < 4.
struct NormDistancePair {
  DistanceReport dd_star;
  DistanceReport sdd_star;
};
NormDistancePair norm_distance_exact(int n);

// Sampling-only estimate (a lower bound on the supremum) for any slice,
// including those without a closed-form reference. 2 <= n <= 20 for
// dd-star slices, n >= 2 for sdd-star.
DistanceReport sampled_distance(SetId set, Normalization normalization, int n,
                                const SamplerConfig& cfg);

// Closed-form bounds on the Frobenius-normalized distance between the
// k-PSD closure and the PSD cone. 2 <= k <= n.
struct SnkBounds {
  double lower;  // (n-k) / sqrt((k-1)^2 n + n(n-1))
  double upper;  // (n-k) / (n+k-2)
};
SnkBounds snk_bounds(int n, int k);

// Scaled-certificate checks. Each computes the PSD matrix C built from 2x2
// pieces of X, the bound |X - (n-1) C|_F, and verifies that it dominates
// the true distance and stays within (n-2)/n.
struct CertificateRecord {
  double distance;
  double bound;
  bool holds;  // distance <= bound + kValueTol and bound <= (n-2)/n + kValueTol
};

// Requires X in sdd-star, Tr(X) = 1 (within kValueTol), n >= 3.
CertificateRecord verify_sdd_certificate(const SymMat& x);

// Requires X in dd-star, |X|_F = 1 (within kValueTol), n >= 4.
CertificateRecord verify_dd_certificate(const SymMat& x);

// One verification row: closed-form value, the value achieved by the
// proof-backed witness route, the seeded sampling maximum, and the
// fraction of samples whose per-sample check passed.
struct TheoremRow {
  int n;
  SetId set;
  Normalization normalization;
  double theory;
  double witness;
  double sampled_max;
  double cert_pass_rate;
  bool violation;
};

struct TheoremReport {
  int theorem;
  std::vector<TheoremRow> rows;
  bool any_violation() const;
};

// theorem 1: Frobenius-normalized distance of both sets is (n-2)/n, n >= 4
//            (two rows per n; per-sample check is the dd-star certificate).
// theorem 2: trace-normalized sdd-star distance is (n-2)/n, n >= 2
//            (per-sample check is the sdd-star certificate for n >= 3 and
//            the bare distance bound for n = 2).
// theorem 3: trace-normalized dd-star distance is (sqrt(n)-1)/2, n >= 2,
//            witnessed by candidate enumeration (per-sample check is the
//            distance bound itself).
TheoremReport verify_theorem(int theorem, int n_lo, int n_hi,
                             const SamplerConfig& cfg);

// CSV with header n,set,normalization,theory,witness,sampled_max,
// cert_pass_rate,violation; reals printed with 15 significant digits.
std::string to_csv(const TheoremReport& report);

// JSON array of row objects with the same field names.
std::string to_json(const TheoremReport& report);

}  // namespace conedist
