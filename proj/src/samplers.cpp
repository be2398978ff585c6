#include "conedist/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace conedist {

std::string_view set_name(SetId s) {
  switch (s) {
    case SetId::kDdStar: return "dd-star";
    case SetId::kSddStar: return "sdd-star";
  }
  return "?";
}

std::string_view normalization_name(Normalization n) {
  switch (n) {
    case Normalization::kTrace: return "trace";
    case Normalization::kFrobenius: return "frobenius";
  }
  return "?";
}

DdtSampler::DdtSampler(std::uint64_t seed, int n, int mixture)
    : seed_(seed), candidates_(n), n_(n), mixture_(mixture) {
  if (mixture < 1) {
    throw std::invalid_argument("DdtSampler: mixture must be >= 1");
  }
}

SymMat DdtSampler::at(std::int64_t index) const {
  SplitMix64 rng = SplitMix64::for_sample(seed_, static_cast<std::uint64_t>(index));
  std::vector<std::int64_t> picks(mixture_);
  for (int j = 0; j < mixture_; ++j) {
    picks[j] = static_cast<std::int64_t>(
        rng.next_below(static_cast<std::uint64_t>(candidates_.size())));
  }
  const Eigen::VectorXd w = simplex_uniform(rng, mixture_);
  SymMat sample(n_);
  for (int j = 0; j < mixture_; ++j) {
    sample += w[j] * candidates_[picks[j]].realize();
  }
  return sample;
}

SddTraceSampler::SddTraceSampler(std::uint64_t seed, int n)
    : seed_(seed), n_(n) {
  if (n < 2) throw std::invalid_argument("SddTraceSampler: n must be >= 2");
}

SymMat SddTraceSampler::at(std::int64_t index) const {
  SplitMix64 rng = SplitMix64::for_sample(seed_, static_cast<std::uint64_t>(index));
  const Eigen::VectorXd diag = simplex_uniform(rng, n_);
  SymMat sample(n_);
  for (int i = 0; i < n_; ++i) sample.set(i, i, diag[i]);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const double product = diag[i] * diag[j];
      const double bound = std::sqrt(product);
      double v = (2.0 * rng.next_double() - 1.0) * bound;
      while (v * v > product) v = std::nextafter(v, 0.0);
      sample.set(i, j, v);
    }
  }
  return sample;
}

DdFrobeniusSampler::DdFrobeniusSampler(std::uint64_t seed, int n, int mixture)
    : inner_(seed, n, mixture) {}

SymMat DdFrobeniusSampler::at(std::int64_t index) const {
  SymMat sample = inner_.at(index);
  return (1.0 / fro_norm(sample)) * sample;
}

SddFrobeniusSampler::SddFrobeniusSampler(std::uint64_t seed, int n)
    : inner_(seed, n) {}

SymMat SddFrobeniusSampler::at(std::int64_t index) const {
  SymMat sample = inner_.at(index);
  return (1.0 / fro_norm(sample)) * sample;
}

namespace {

template <typename Sampler>
std::vector<SymMat> materialize(const Sampler& sampler, std::int64_t count) {
  std::vector<SymMat> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.push_back(sampler.at(i));
  return out;
}

}  // namespace

std::vector<SymMat> sample_ddt(const SamplerConfig& cfg, int n) {
  return materialize(DdtSampler(cfg.seed, n, cfg.mixture), cfg.count);
}

std::vector<SymMat> sample_sdd_trace(const SamplerConfig& cfg, int n) {
  return materialize(SddTraceSampler(cfg.seed, n), cfg.count);
}

std::vector<SymMat> sample_dd_frobenius(const SamplerConfig& cfg, int n) {
  return materialize(DdFrobeniusSampler(cfg.seed, n, cfg.mixture), cfg.count);
}

}  // namespace conedist
