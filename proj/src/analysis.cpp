#include "conedist/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "conedist/cones.hpp"
#include "conedist/constructions.hpp"
#include "conedist/eig.hpp"
#include "conedist/matrix_io.hpp"

namespace conedist {

namespace {

double closed_form_trace_dd(int n) { return (std::sqrt(n) - 1.0) / 2.0; }
double closed_form_frac(int n) { return (n - 2.0) / n; }

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kEnumeration: return "enumeration";
    case Method::kWitness: return "witness";
    case Method::kSampling: return "sampling";
  }
  return "?";
}

DistanceReport dd_star_trace_distance_exact(int n) {
  CandidateList candidates(n);
  double best = -1.0;
  std::int64_t best_index = 0;
  for (std::int64_t i = 0; i < candidates.size(); ++i) {
    const double d = dist_to_psd(candidates[i].realize()).distance;
    if (d > best) {
      best = d;
      best_index = i;
    }
  }
  return DistanceReport{SetId::kDdStar, Normalization::kTrace, best,
                        Method::kEnumeration,
                        candidates[best_index].realize(), std::nullopt};
}

DistanceReport sdd_star_trace_distance_exact(int n) {
  if (n < 2) {
    throw std::invalid_argument(
        "sdd_star_trace_distance_exact: n must be >= 2");
  }
  return DistanceReport{SetId::kSddStar, Normalization::kTrace,
                        closed_form_frac(n), Method::kWitness,
                        sdd_trace_worst(n), std::nullopt};
}

NormDistancePair norm_distance_exact(int n) {
  if (n < 4) {
    throw std::invalid_argument(
        "norm_distance_exact: closed form requires n >= 4");
  }
  const SymMat witness = make_g(1.0 / n, 1.0 / n, n);
  const double value = closed_form_frac(n);
  return NormDistancePair{
      DistanceReport{SetId::kDdStar, Normalization::kFrobenius, value,
                     Method::kWitness, witness, std::nullopt},
      DistanceReport{SetId::kSddStar, Normalization::kFrobenius, value,
                     Method::kWitness, witness, std::nullopt}};
}

DistanceReport sampled_distance(SetId set, Normalization normalization, int n,
                                const SamplerConfig& cfg) {
  if (cfg.count < 1) {
    throw std::invalid_argument("sampled_distance: count must be >= 1");
  }
  auto sample_at = [&](std::int64_t i) -> SymMat {
    if (set == SetId::kDdStar && normalization == Normalization::kTrace) {
      return DdtSampler(cfg.seed, n, cfg.mixture).at(i);
    }
    if (set == SetId::kDdStar) {
      return DdFrobeniusSampler(cfg.seed, n, cfg.mixture).at(i);
    }
    if (normalization == Normalization::kTrace) {
      return SddTraceSampler(cfg.seed, n).at(i);
    }
    return SddFrobeniusSampler(cfg.seed, n).at(i);
  };

  double best = -1.0;
  std::int64_t best_index = 0;
  for (std::int64_t i = 0; i < cfg.count; ++i) {
    const double d = dist_to_psd(sample_at(i)).distance;
    if (d > best) {
      best = d;
      best_index = i;
    }
  }
  return DistanceReport{set, normalization, best, Method::kSampling,
                        sample_at(best_index),
                        SampleStats{cfg.count, best, best_index}};
}

SnkBounds snk_bounds(int n, int k) {
  if (k < 2 || k > n) {
    throw std::invalid_argument("snk_bounds: requires 2 <= k <= n");
  }
  const double nk = n - k;
  const double lower =
      nk / std::sqrt(static_cast<double>(k - 1) * (k - 1) * n +
                     static_cast<double>(n) * (n - 1));
  const double upper = nk / (n + k - 2.0);
  return SnkBounds{lower, upper};
}

namespace {

void require_membership(const MembershipReport& report, const char* which) {
  if (!report.verdict) {
    throw std::invalid_argument(std::string("certificate: input is not in ") +
                                which);
  }
}

}  // namespace

CertificateRecord verify_sdd_certificate(const SymMat& x) {
  const int n = static_cast<int>(x.order());
  if (n < 3) {
    throw std::invalid_argument("sdd certificate: requires n >= 3");
  }
  if (std::abs(trace(x) - 1.0) > kValueTol) {
    throw std::invalid_argument("sdd certificate: requires Tr(X) = 1");
  }
  require_membership(sdd_star_contains(x), "sdd-star");

  const double bound = fro_norm(x - (n - 1.0) * sdd_tilde(x));
  const double distance = dist_to_psd(x).distance;
  const bool holds = distance <= bound + kValueTol &&
                     bound <= closed_form_frac(n) + kValueTol;
  return CertificateRecord{distance, bound, holds};
}

CertificateRecord verify_dd_certificate(const SymMat& x) {
  const int n = static_cast<int>(x.order());
  if (n < 4) {
    throw std::invalid_argument("dd certificate: requires n >= 4");
  }
  if (std::abs(fro_norm(x) - 1.0) > kValueTol) {
    throw std::invalid_argument("dd certificate: requires |X|_F = 1");
  }
  require_membership(dd_star_contains(x), "dd-star");

  const double bound = fro_norm(x - (n - 1.0) * dd_bar(x));
  const double distance = dist_to_psd(x).distance;
  const bool holds = distance <= bound + kValueTol &&
                     bound <= closed_form_frac(n) + kValueTol;
  return CertificateRecord{distance, bound, holds};
}

bool TheoremReport::any_violation() const {
  for (const auto& row : rows) {
    if (row.violation) return true;
  }
  return false;
}

namespace {

struct SampleSummary {
  double max = 0.0;
  double pass_rate = 1.0;
};

// Reduces a seeded sample stream to (max distance, per-sample check rate).
template <typename SampleAt, typename Check>
SampleSummary reduce_samples(std::int64_t count, SampleAt&& sample_at,
                             Check&& check) {
  SampleSummary s;
  if (count <= 0) return s;
  std::int64_t passed = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    const SymMat x = sample_at(i);
    double distance = 0.0;
    if (check(x, distance)) ++passed;
    if (distance > s.max) s.max = distance;
  }
  s.pass_rate = static_cast<double>(passed) / static_cast<double>(count);
  return s;
}

TheoremRow finish_row(int n, SetId set, Normalization normalization,
                      double theory, double witness,
                      const SampleSummary& s) {
  const bool violation = std::abs(witness - theory) > kValueTol ||
                         s.max > theory + kValueTol || s.pass_rate < 1.0;
  return TheoremRow{n,     set,   normalization,  theory,
                    witness, s.max, s.pass_rate, violation};
}

}  // namespace

TheoremReport verify_theorem(int theorem, int n_lo, int n_hi,
                             const SamplerConfig& cfg) {
  if (theorem < 1 || theorem > 3) {
    throw std::invalid_argument("verify_theorem: theorem must be 1, 2 or 3");
  }
  const int min_n = theorem == 1 ? 4 : 2;
  if (n_lo < min_n) {
    throw std::invalid_argument("verify_theorem: theorem " +
                                std::to_string(theorem) + " requires n >= " +
                                std::to_string(min_n));
  }
  if (n_hi < n_lo) {
    throw std::invalid_argument("verify_theorem: empty n range");
  }
  if (theorem != 2 && n_hi > 20) {
    throw std::invalid_argument(
        "verify_theorem: dd-star sampling/enumeration is capped at n = 20");
  }

  TheoremReport report{theorem, {}};
  for (int n = n_lo; n <= n_hi; ++n) {
    switch (theorem) {
      case 1: {
        const double theory = closed_form_frac(n);
        const double witness =
            dist_to_psd(make_g(1.0 / n, 1.0 / n, n)).distance;
        const DdFrobeniusSampler dd(cfg.seed, n, cfg.mixture);
        const auto dd_summary = reduce_samples(
            cfg.count, [&](std::int64_t i) { return dd.at(i); },
            [&](const SymMat& x, double& distance) {
              const CertificateRecord c = verify_dd_certificate(x);
              distance = c.distance;
              return c.holds;
            });
        report.rows.push_back(finish_row(n, SetId::kDdStar,
                                         Normalization::kFrobenius, theory,
                                         witness, dd_summary));
        // sdd-star members are dd-star members, so the same certificate
        // applies to the rescaled sdd-star stream.
        const SddFrobeniusSampler sdd(cfg.seed, n);
        const auto sdd_summary = reduce_samples(
            cfg.count, [&](std::int64_t i) { return sdd.at(i); },
            [&](const SymMat& x, double& distance) {
              const CertificateRecord c = verify_dd_certificate(x);
              distance = c.distance;
              return c.holds;
            });
        report.rows.push_back(finish_row(n, SetId::kSddStar,
                                         Normalization::kFrobenius, theory,
                                         witness, sdd_summary));
        break;
      }
      case 2: {
        const double theory = closed_form_frac(n);
        const double witness = dist_to_psd(sdd_trace_worst(n)).distance;
        const SddTraceSampler sampler(cfg.seed, n);
        const auto summary = reduce_samples(
            cfg.count, [&](std::int64_t i) { return sampler.at(i); },
            [&](const SymMat& x, double& distance) {
              if (n >= 3) {
                const CertificateRecord c = verify_sdd_certificate(x);
                distance = c.distance;
                return c.holds;
              }
              distance = dist_to_psd(x).distance;
              return distance <= theory + kValueTol;
            });
        report.rows.push_back(finish_row(
            n, SetId::kSddStar, Normalization::kTrace, theory, witness,
            summary));
        break;
      }
      case 3: {
        const double theory = closed_form_trace_dd(n);
        const double witness = dd_star_trace_distance_exact(n).value;
        const DdtSampler sampler(cfg.seed, n, cfg.mixture);
        const auto summary = reduce_samples(
            cfg.count, [&](std::int64_t i) { return sampler.at(i); },
            [&](const SymMat& x, double& distance) {
              distance = dist_to_psd(x).distance;
              return distance <= theory + kValueTol;
            });
        report.rows.push_back(finish_row(
            n, SetId::kDdStar, Normalization::kTrace, theory, witness,
            summary));
        break;
      }
    }
  }
  return report;
}

std::string to_csv(const TheoremReport& report) {
  std::ostringstream out;
  out << "n,set,normalization,theory,witness,sampled_max,cert_pass_rate,"
         "violation\n";
  for (const auto& row : report.rows) {
    out << row.n << ',' << set_name(row.set) << ','
        << normalization_name(row.normalization) << ','
        << format_double(row.theory) << ',' << format_double(row.witness)
        << ',' << format_double(row.sampled_max) << ','
        << format_double(row.cert_pass_rate) << ','
        << (row.violation ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_json(const TheoremReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"n", row.n},
                    {"set", std::string(set_name(row.set))},
                    {"normalization",
                     std::string(normalization_name(row.normalization))},
                    {"theory", row.theory},
                    {"witness", row.witness},
                    {"sampled_max", row.sampled_max},
                    {"cert_pass_rate", row.cert_pass_rate},
                    {"violation", row.violation}});
  }
  nlohmann::ordered_json doc{{"theorem", report.theorem}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

}  // namespace conedist
