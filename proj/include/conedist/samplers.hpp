/**
 * Seeded samplers for the approximating sets, normalized slices included.
 * Every sampler is a pure function of (seed, index): sample i may be
 * generated on any worker, and identical configs yield identical streams.
 */

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "conedist/constructions.hpp"
#include "conedist/rng.hpp"
#include "conedist/sym_mat.hpp"

namespace conedist {

enum class SetId { kDdStar, kSddStar };
enum class Normalization { kTrace, kFrobenius };

std::string_view set_name(SetId s);
std::string_view normalization_name(Normalization n);

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::int64_t count = 0;
  SetId set = SetId::kDdStar;
  Normalization normalization = Normalization::kTrace;
  int mixture = 4;  // candidates combined per dd-star trace sample
};

// Trace-1 slice of dd-star: convex combination of `mixture` uniformly
// chosen vertex candidates with simplex-uniform weights. 2 <= n <= 20.
class DdtSampler {
 public:
  DdtSampler(std::uint64_t seed, int n, int mixture = 4);
  SymMat at(std::int64_t index) const;

 private:
  std::uint64_t seed_;
  CandidateList candidates_;
  int n_;
  int mixture_;
};

// Trace-1 slice of sdd-star: simplex-uniform diagonal, then each
// off-diagonal uniform in [-sqrt(X_ii X_jj), +sqrt(X_ii X_jj)], nudged
// downward by ulps if rounding ever lands the square above the product, so
// samples satisfy the defining inequalities with zero tolerance. n >= 2.
class SddTraceSampler {
 public:
  SddTraceSampler(std::uint64_t seed, int n);
  SymMat at(std::int64_t index) const;

 private:
  std::uint64_t seed_;
  int n_;
};

// Unit-Frobenius slice of dd-star: a DdtSampler draw rescaled. Valid
// because dd-star is a cone and nonzero members have positive trace, so
// every ray meets the trace-1 slice.
class DdFrobeniusSampler {
 public:
  DdFrobeniusSampler(std::uint64_t seed, int n, int mixture = 4);
  SymMat at(std::int64_t index) const;

 private:
  DdtSampler inner_;
};

// Unit-Frobenius slice of sdd-star: a SddTraceSampler draw rescaled.
class SddFrobeniusSampler {
 public:
  SddFrobeniusSampler(std::uint64_t seed, int n);
  SymMat at(std::int64_t index) const;

 private:
  SddTraceSampler inner_;
};

std::vector<SymMat> sample_ddt(const SamplerConfig& cfg, int n);
std::vector<SymMat> sample_sdd_trace(const SamplerConfig& cfg, int n);
std::vector<SymMat> sample_dd_frobenius(const SamplerConfig& cfg, int n);

}  // namespace conedist
