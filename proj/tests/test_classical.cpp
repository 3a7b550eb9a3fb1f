#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "dimwit/classical.hpp"
#include "dimwit/witness.hpp"

#include <json.hpp>

using namespace dimwit;

TEST_CASE("classical probability matrix is q*r with the ones row") {
  ClassicalModel m;
  m.d = 2;
  m.r = Mat::from_rows({{1, 0, 0.5}, {0, 1, 0.5}});
  m.q = Mat::from_rows({{1, 0}, {0, 1}});
  const auto pm = classical_probability_matrix(m);
  CHECK(pm.at(0, 0) == 1.0);
  CHECK(pm.at(0, 1) == 0.0);
  CHECK(pm.at(0, 2) == doctest::Approx(0.5));
  CHECK(pm.at(1, 2) == doctest::Approx(0.5));
  CHECK(pm.at(2, 0) == 1.0);
}

TEST_CASE("deterministic classical models reach |W| = 1") {
  // register permutation with identity readout for k = 2, d = 3
  ClassicalModel m;
  m.d = 3;
  m.r = Mat::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  m.q = Mat::from_rows({{1, 0, 0}, {0, 1, 0}});
  CHECK(std::abs(witness(classical_probability_matrix(m))) == doctest::Approx(1.0));
}

TEST_CASE("single register state forces zero witness") {
  ClassicalModel m;
  m.d = 1;
  m.r = Mat(1, 3, 1.0);
  m.q = Mat::from_rows({{0.3}, {0.9}});
  CHECK(std::abs(witness(classical_probability_matrix(m))) < 1e-12);
}

TEST_CASE("classical model validation") {
  ClassicalModel m;
  m.d = 2;
  m.r = Mat::from_rows({{0.6, 0}, {0.6, 1}});  // column sums 1.2, 1
  m.q = Mat::from_rows({{1, 0}});
  CHECK_THROWS_AS(classical_probability_matrix(m), StructuralError);
}

TEST_CASE("embedded certificate reproduces its value through a model") {
  for (const int k : {3, 4}) {
    const auto& certs = extremal_certificates();
    for (const auto& c : certs) {
      if (c.k != k) continue;
      const auto model = classical_model_from_bits(c.matrix);
      const double w = std::abs(witness(classical_probability_matrix(model)));
      CHECK(w == doctest::Approx(static_cast<double>(c.value)).epsilon(1e-12));
    }
  }
}

TEST_CASE("bareiss integer determinant agrees with LU") {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    Mat d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = static_cast<std::int64_t>(rng() % 5) - 2;
        d(i, j) = static_cast<double>(a[i][j]);
      }
    CHECK(static_cast<double>(bareiss_det(a)) == doctest::Approx(lu_det(d)).epsilon(1e-9));
  }
}

TEST_CASE("exhaustive maxima match the known classical values for k <= 4") {
  for (int k = 1; k <= 4; ++k) {
    const auto res = exhaustive_binary_max(k);
    CHECK(res.value == known_classical_max(k));
    CHECK(binary_witness_det(res.matrix) == res.value);
    CHECK(res.value == verify_certificate(k).computed);
  }
  CHECK_THROWS_AS(exhaustive_binary_max(5), CapabilityError);
}

TEST_CASE("stored certificates reproduce the known maxima exactly") {
  for (int k = 1; k <= 9; ++k) {
    const auto chk = verify_certificate(k);
    CHECK(chk.pass);
    CHECK(chk.computed == chk.expected);
  }
}

TEST_CASE("hadamard bound dominates every certificate and search result") {
  for (int k = 1; k <= 9; ++k)
    CHECK(hadamard_bound(k) + 1e-9 >= static_cast<double>(known_classical_max(k)));
}

TEST_CASE("binary annealing reaches the known maxima up to k = 9") {
  for (const int k : {2, 5, 6, 7, 8, 9}) {
    BinaryAnnealSchedule sched;
    sched.seed = 7;
    const auto res = binary_anneal_max(k, sched);
    CHECK(res.value >= known_classical_max(k));
    CHECK(binary_witness_det(res.matrix) == res.value);
  }
  CHECK_THROWS_AS(binary_anneal_max(13), CapabilityError);
}

TEST_CASE("random classical models with d <= k have zero witness") {
  Rng rng(37);
  for (const int d : {1, 2, 3}) {
    for (int k = d; k <= d + 2; ++k) {
      for (int t = 0; t < 350; ++t) {
        const auto m = random_classical_model(d, k, rng);
        CHECK(std::abs(witness(classical_probability_matrix(m))) < 1e-9);
      }
    }
  }
}

TEST_CASE("shipped data file matches the embedded certificates") {
  std::ifstream in(std::string(DIMWIT_DATA_DIR) + "/binary_certificates.json", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  CHECK(os.str() == certificates_json());
}

TEST_CASE("certificates JSON parses and matches the embedded data") {
  const auto doc = nlohmann::json::parse(certificates_json());
  CHECK(doc.at("version").get<int>() == 1);
  const auto& entries = doc.at("entries");
  CHECK(entries.size() == 9);
  for (const auto& e : entries) {
    const int k = e.at("k").get<int>();
    CHECK(e.at("max_witness").get<std::int64_t>() == known_classical_max(k));
    BinaryWitnessMatrix m;
    m.k = k;
    for (const auto& row : e.at("bits"))
      m.bits.push_back(row.get<std::vector<int>>());
    CHECK(binary_witness_det(m) == known_classical_max(k));
  }
}
