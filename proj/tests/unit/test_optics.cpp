#include <doctest.h>

#include <cmath>

#include "muteqkd/optics.hpp"
#include "oracles/closed_form_oracle.hpp"
#include "unit/stats.hpp"

using namespace muteqkd;

TEST_CASE("bases and orthogonality") {
  CHECK(basis_of(Polarization::H) == Basis::Z);
  CHECK(basis_of(Polarization::V) == Basis::Z);
  CHECK(basis_of(Polarization::A) == Basis::X);
  CHECK(basis_of(Polarization::D) == Basis::X);
  for (auto s : kAllPolarizations) {
    CHECK(orthogonal(orthogonal(s)) == s);
    CHECK(orthogonal(s) != s);
    CHECK(basis_of(orthogonal(s)) == basis_of(s));
    CHECK(bit_value(orthogonal(s)) != bit_value(s));
    CHECK(state_for(basis_of(s), bit_value(s)) == s);
    CHECK(polarization_of_detector(detector_index(s)) == s);
    CHECK(parse_polarization(to_string(s)) == s);
  }
  CHECK(detector_index(Polarization::H) == 0);
  CHECK(detector_index(Polarization::D) == 3);
  CHECK_THROWS_AS(parse_polarization("Q"), std::invalid_argument);
  CHECK(parse_basis("X") == Basis::X);
}

TEST_CASE("project_probability") {
  auto p = project_probability(Polarization::H, Basis::Z, INFINITY);
  CHECK(p.correct == 1.0);
  CHECK(p.wrong == 0.0);

  p = project_probability(Polarization::H, Basis::X, 43.0);
  CHECK(p.correct == 0.5);
  CHECK(p.wrong == 0.5);

  p = project_probability(Polarization::V, Basis::Z, 43.0);
  CHECK(testutil::rel_err(p.wrong, oracle::kLeakage43dB) < 1e-14);
  CHECK(p.correct + p.wrong == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ReceiverConfig{}.leakage() == doctest::Approx(5.01187e-5).epsilon(1e-5));
}

TEST_CASE("receiver config validation") {
  CHECK_NOTHROW(ReceiverConfig{}.validate());
  CHECK_THROWS(ReceiverConfig{0.0, 43.0}.validate());
  CHECK_THROWS(ReceiverConfig{1.0, 43.0}.validate());
  CHECK_THROWS(ReceiverConfig{0.5, 0.0}.validate());
}

TEST_CASE("route_photons conserves photons") {
  Rng rng(11);
  ReceiverConfig cfg;
  CHECK(route_photons(0, Polarization::H, cfg, rng) == DetectorCounts{0, 0, 0, 0});
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t n = static_cast<std::int64_t>(rng() % 5000);
    const auto s = kAllPolarizations[rng() % 4];
    const auto c = route_photons(n, s, cfg, rng);
    CHECK(c[0] + c[1] + c[2] + c[3] == n);
    for (auto x : c) CHECK(x >= 0);
  }
}

TEST_CASE("600 V photons split 0/300/150/150 under ideal extinction") {
  Rng rng(5);
  ReceiverConfig cfg{0.5, INFINITY};
  const int draws = 10000;
  std::array<double, 4> sum{}, sum2{};
  for (int i = 0; i < draws; ++i) {
    const auto c = route_photons(600, Polarization::V, cfg, rng);
    for (int d = 0; d < 4; ++d) {
      sum[d] += static_cast<double>(c[d]);
      sum2[d] += static_cast<double>(c[d]) * static_cast<double>(c[d]);
    }
  }
  const std::array<double, 4> expected{0.0, 300.0, 150.0, 150.0};
  CHECK(sum[0] == 0.0);
  for (int d = 1; d < 4; ++d) {
    const double mean = sum[d] / draws;
    const double var = sum2[d] / draws - mean * mean;
    CHECK(std::abs(mean - expected[d]) <= 3.0 * std::sqrt(var / draws));
  }
}

TEST_CASE("43 dB leaks about 0.015 photons to the orthogonal detector") {
  Rng rng(6);
  ReceiverConfig cfg;
  const int draws = 100000;
  std::int64_t leaked = 0;
  for (int i = 0; i < draws; ++i) leaked += route_photons(600, Polarization::V, cfg, rng)[0];
  const double expected = 600.0 * 0.5 * oracle::kLeakage43dB;
  const double mean = static_cast<double>(leaked) / draws;
  CHECK(std::abs(mean - expected) <= 3.0 * std::sqrt(expected / draws));
}

TEST_CASE("single-photon port frequencies follow the projection probabilities") {
  // A low extinction ratio makes the leakage port visible at 1e5 draws.
  ReceiverConfig cfg{0.5, 10.0};
  const double eps = cfg.leakage();
  Rng rng(17);
  for (auto s : kAllPolarizations) {
    std::array<std::int64_t, 4> hits{};
    for (int i = 0; i < 100000; ++i) {
      const auto c = route_photons(1, s, cfg, rng);
      for (int d = 0; d < 4; ++d) hits[d] += c[d];
    }
    std::array<double, 4> p{};
    for (auto m : {Basis::Z, Basis::X}) {
      const auto pp = project_probability(s, m, cfg.extinction_ratio_db);
      if (m == basis_of(s)) {
        p[detector_index(s)] += 0.5 * pp.correct;
        p[detector_index(orthogonal(s))] += 0.5 * pp.wrong;
      } else {
        p[detector_index(state_for(m, 0))] += 0.5 * 0.5;
        p[detector_index(state_for(m, 1))] += 0.5 * 0.5;
      }
    }
    CHECK(p[detector_index(orthogonal(s))] == doctest::Approx(0.5 * eps));
    CHECK(testutil::chi_square_pvalue(hits, p) > 0.001);
  }
}
