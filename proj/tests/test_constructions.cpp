#include <doctest.h>

#include <cmath>
#include <set>

#include "conedist/cones.hpp"
#include "conedist/constructions.hpp"
#include "conedist/eig.hpp"
#include "conedist/samplers.hpp"
#include "test_support.hpp"

using conedist::SymMat;

TEST_CASE("make_g entries") {
  const SymMat g = conedist::make_g(1.0, 1.0, 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(g(i, i) == 1.0);
    for (int j = i + 1; j < 3; ++j) CHECK(g(i, j) == -1.0);
  }
  CHECK(conedist::make_g(0.0, 1.0, 4) == SymMat::Identity(4));

  conedist::SplitMix64 rng(31);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 + static_cast<int>(rng.next_below(9));
    const double a = rng.next_double();
    const double b = rng.next_double();
    CHECK(conedist::trace(conedist::make_g(a, b, n)) ==
          doctest::Approx(n * b).epsilon(1e-13));
  }
}

TEST_CASE("g_spectrum closed form") {
  const auto s = conedist::g_spectrum(1.0, 1.0, 3);
  REQUIRE(s.size() == 2);
  CHECK(s[0].value == -1.0);
  CHECK(s[0].multiplicity == 1);
  CHECK(s[1].value == 2.0);
  CHECK(s[1].multiplicity == 2);

  const auto merged = conedist::g_spectrum(0.0, 0.75, 5);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].value == 0.75);
  CHECK(merged[0].multiplicity == 5);
}

TEST_CASE("g_spectrum matches the eigensolver on random parameters") {
  conedist::SplitMix64 rng(37);
  for (int round = 0; round < 1000; ++round) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    const double a = 4.0 * rng.next_double() - 2.0;
    const double b = 4.0 * rng.next_double() - 2.0;
    const auto closed = conedist::g_spectrum(a, b, n);
    Eigen::VectorXd expanded(n);
    int pos = 0;
    for (const auto& em : closed) {
      for (int m = 0; m < em.multiplicity; ++m) expanded[pos++] = em.value;
    }
    REQUIRE(pos == n);
    const auto numeric = conedist::eig(conedist::make_g(a, b, n));
    for (int k = 0; k < n; ++k) {
      CHECK(numeric.eigenvalues[k] ==
            doctest::Approx(expanded[k]).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("sdd_trace_worst") {
  CHECK(conedist::dist_to_psd(conedist::sdd_trace_worst(4)).distance ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(conedist::dist_to_psd(conedist::sdd_trace_worst(2)).distance ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  for (int n = 2; n <= 12; ++n) {
    const SymMat w = conedist::sdd_trace_worst(n);
    CHECK(conedist::trace(w) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(conedist_test::brute_force_fro(w) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(conedist::sdd_star_contains(w).verdict);
  }
}

TEST_CASE("candidate enumeration is complete, exact and deterministic") {
  CHECK(conedist::CandidateList(3).size() == 12);
  CHECK(conedist::CandidateList(2).size() == 4);
  CHECK_THROWS_AS(conedist::CandidateList(1), std::invalid_argument);
  CHECK_THROWS_AS(conedist::CandidateList(21), std::invalid_argument);

  // q ascending, sign vector as a little-endian counter.
  const conedist::CandidateList list(3);
  CHECK(list[0].q == 0);
  CHECK(list[0].signs == std::vector<int>{1, 1});
  CHECK(list[1].signs == std::vector<int>{-1, 1});
  CHECK(list[2].signs == std::vector<int>{1, -1});
  CHECK(list[4].q == 1);

  for (int n : {2, 3, 4, 5}) {
    std::set<std::pair<int, std::vector<int>>> seen;
    for (const auto& c : conedist::enumerate_candidates(n)) {
      seen.insert({c.q, c.signs});
      const SymMat x = c.realize();
      CHECK(conedist::trace(x) == 1.0);
      CHECK(conedist::dd_star_contains(x, 0.0).verdict);
      CHECK(x(c.q, c.q) == 1.0);
    }
    CHECK(static_cast<std::int64_t>(seen.size()) ==
          conedist::candidate_count(n));
  }
}

TEST_CASE("every candidate reaches the same distance") {
  for (int n = 2; n <= 10; ++n) {
    const double expected = (std::sqrt(n) - 1.0) / 2.0;
    for (const auto& c : conedist::enumerate_candidates(n)) {
      const double d = conedist::dist_to_psd(c.realize()).distance;
      CHECK(std::abs(d - expected) <= 1e-9);
    }
  }
}

TEST_CASE("make_star") {
  const auto spec4 = conedist::eig(conedist::make_star(4, {1, 1, 1}));
  CHECK(spec4.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(spec4.eigenvalues[3] == doctest::Approx(1.5).epsilon(1e-12));

  const auto spec2 = conedist::eig(conedist::make_star(2, {1}));
  CHECK(spec2.eigenvalues[0] ==
        doctest::Approx((1.0 - std::sqrt(2.0)) / 2.0).epsilon(1e-12));
  CHECK(spec2.eigenvalues[1] ==
        doctest::Approx((1.0 + std::sqrt(2.0)) / 2.0).epsilon(1e-12));

  // make_star is the q = n candidate.
  const conedist::CandidateList list(4);
  bool matched = false;
  for (const auto& c : list) {
    if (c.q == 3 && c.signs == std::vector<int>{-1, 1, -1}) {
      matched = true;
      CHECK(c.realize() == conedist::make_star(4, {-1, 1, -1}));
    }
  }
  CHECK(matched);

  CHECK_THROWS_AS(conedist::make_star(4, {1, 1}), std::invalid_argument);
}

TEST_CASE("sdd_tilde closed form vs explicit pairwise summation") {
  const SymMat t = conedist::sdd_tilde(SymMat::Identity(3));
  for (int i = 0; i < 3; ++i) {
    CHECK(t(i, i) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  }

  const conedist::SddTraceSampler sampler(101, 5);
  for (int i = 0; i < 100; ++i) {
    const SymMat x = sampler.at(i);
    const SymMat closed = conedist::sdd_tilde(x);
    const SymMat explicit_sum = conedist_test::pairwise_sdd_certificate(x);
    CHECK(conedist::fro_norm(closed - explicit_sum) <= 1e-13);
    CHECK(conedist::psd_contains(closed).verdict);
  }

  CHECK_THROWS_AS(conedist::sdd_tilde(SymMat::Identity(2)),
                  std::invalid_argument);
}

TEST_CASE("dd_bar closed form vs explicit pairwise summation") {
  const SymMat b = conedist::dd_bar(SymMat::Identity(3));
  for (int i = 0; i < 3; ++i) {
    CHECK(b(i, i) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  }

  const conedist::DdtSampler sampler(103, 5);
  for (int i = 0; i < 100; ++i) {
    const SymMat x = sampler.at(i);
    const SymMat closed = conedist::dd_bar(x);
    const SymMat explicit_sum = conedist_test::pairwise_dd_certificate(x);
    CHECK(conedist::fro_norm(closed - explicit_sum) <= 1e-13);
    CHECK(conedist::psd_contains(closed).verdict);
    // Off-diagonal scaling is 1 / C(n,2).
    for (int p = 0; p < 5; ++p) {
      for (int q = p + 1; q < 5; ++q) {
        CHECK(closed(p, q) == doctest::Approx(x(p, q) / 10.0).epsilon(1e-14));
      }
    }
  }

  CHECK_THROWS_AS(conedist::dd_bar(SymMat::Identity(2)), std::invalid_argument);
}

TEST_CASE("scaled certificates dominate within the closed-form budget") {
  // Trace-1 sdd-star members against (n-1) * sdd_tilde.
  for (int n = 3; n <= 8; ++n) {
    const conedist::SddTraceSampler sampler(107, n);
    for (int i = 0; i < 200; ++i) {
      const SymMat x = sampler.at(i);
      const double bound = conedist::fro_norm(x - (n - 1.0) * conedist::sdd_tilde(x));
      CHECK(bound <= (n - 2.0) / n + 1e-9);
    }
  }
  // Unit-Frobenius dd-star members against (n-1) * dd_bar, n >= 4.
  for (int n = 4; n <= 8; ++n) {
    const conedist::DdFrobeniusSampler sampler(109, n);
    for (int i = 0; i < 200; ++i) {
      const SymMat x = sampler.at(i);
      const double bound = conedist::fro_norm(x - (n - 1.0) * conedist::dd_bar(x));
      CHECK(bound <= (n - 2.0) / n + 1e-9);
    }
  }
}
