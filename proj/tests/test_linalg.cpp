#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dimwit/linalg.hpp"
#include "dimwit/rng.hpp"

using namespace dimwit;

namespace {

// Independent oracle: Laplace cofactor expansion along the first row.
double cofactor_det(const Mat& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  double det = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    Mat sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = a(r, c);
      }
    }
    det += ((j % 2) ? -1.0 : 1.0) * a(0, j) * cofactor_det(sub);
  }
  return det;
}

Mat random_mat(std::size_t n, Rng& rng) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, -1.0, 1.0);
  return m;
}

}  // namespace

TEST_CASE("lu_det matches cofactor expansion on random matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Mat m = random_mat(n, rng);
    CHECK(lu_det(m) == doctest::Approx(cofactor_det(m)).epsilon(1e-10));
  }
}

TEST_CASE("lu_det handles singular and identity cases") {
  Mat id = Mat::identity(5);
  CHECK(lu_det(id) == doctest::Approx(1.0));
  Mat sing(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    sing(0, j) = 1.0;
    sing(1, j) = 2.0;
    sing(2, j) = j;
  }
  CHECK(lu_det(sing) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("adjugate identity Adj(A) * A = det(A) * I") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const Mat a = random_mat(n, rng);
    const Mat adj = adjugate_mat(a);
    const Mat prod = adj * a;
    const double det = lu_det(a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(prod(i, j) == doctest::Approx(i == j ? det : 0.0).epsilon(1e-9));
  }
}

TEST_CASE("minor2_det equals determinant of the stripped matrix") {
  Rng rng(13);
  const Mat a = random_mat(5, rng);
  Mat sub(3, 3);
  std::size_t ri = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    if (i == 1 || i == 3) continue;
    std::size_t cj = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      if (j == 0 || j == 4) continue;
      sub(ri, cj++) = a(i, j);
    }
    ++ri;
  }
  CHECK(minor2_det(a, 1, 3, 0, 4) == doctest::Approx(cofactor_det(sub)).epsilon(1e-12));
  CHECK_THROWS_AS(minor2_det(a, 1, 1, 0, 4), StructuralError);
  CHECK_THROWS_AS(minor2_det(a, 1, 5, 0, 4), StructuralError);
}

TEST_CASE("gram_schmidt orthonormalizes and keeps the first direction") {
  std::vector<std::vector<cplx>> vs = {
      {cplx(1, 0), cplx(0, 0)}, {cplx(1, 0), cplx(1, 0)}};
  auto out = gram_schmidt_vectors(vs);
  CHECK(std::abs(out[0][0] - cplx(1, 0)) < 1e-14);
  CHECK(std::abs(out[1][0]) < 1e-14);
  CHECK(std::abs(out[1][1] - cplx(1, 0)) < 1e-14);

  // already orthonormal stays put
  auto again = gram_schmidt_vectors(out);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(again[i][j] - out[i][j]) < 1e-12);
}

TEST_CASE("gram_schmidt rejects dependent vectors") {
  std::vector<std::vector<cplx>> vs = {
      {cplx(1, 0), cplx(2, 0)}, {cplx(2, 0), cplx(4, 0)}};
  CHECK_THROWS_AS(gram_schmidt_vectors(vs), DegenerateInputError);
}

TEST_CASE("gram_schmidt random vectors are pairwise orthogonal") {
  Rng rng(17);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<cplx>> vs;
    for (int v = 0; v < 3; ++v) {
      std::vector<cplx> x(4);
      for (auto& c : x) c = cplx(g(rng), g(rng));
      vs.push_back(std::move(x));
    }
    auto out = gram_schmidt_vectors(vs);
    for (int i = 0; i < 3; ++i) {
      CHECK(norm(out[i]) == doctest::Approx(1.0).epsilon(1e-12));
      for (int j = 0; j < i; ++j) CHECK(std::abs(inner(out[i], out[j])) < 1e-10);
    }
  }
}

TEST_CASE("hermitian_eigenvalues on known matrices") {
  CMat pauli_x(2, 2);
  pauli_x(0, 1) = cplx(1, 0);
  pauli_x(1, 0) = cplx(1, 0);
  auto ev = hermitian_eigenvalues(pauli_x);
  CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-12));

  CMat pauli_y(2, 2);
  pauli_y(0, 1) = cplx(0, -1);
  pauli_y(1, 0) = cplx(0, 1);
  ev = hermitian_eigenvalues(pauli_y);
  CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-12));

  // projector onto a ray: eigenvalues {0, 0, 1}
  CMat proj(3, 3);
  const cplx v[3] = {cplx(0.5, 0), cplx(0, 0.5), cplx(std::sqrt(0.5), 0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) proj(i, j) = v[i] * std::conj(v[j]);
  ev = hermitian_eigenvalues(proj);
  CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("binomial sampler mean and variance") {
  Rng rng(23);
  const std::int64_t n = 1000;
  const double p = 0.3;
  double sum = 0.0, sum2 = 0.0;
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    const double x = static_cast<double>(binomial_sample(n, p, rng));
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / trials;
  const double var = sum2 / trials - mean * mean;
  CHECK(mean == doctest::Approx(n * p).epsilon(0.01));
  CHECK(var == doctest::Approx(n * p * (1 - p)).epsilon(0.05));
  CHECK(binomial_sample(10, 0.0, rng) == 0);
  CHECK(binomial_sample(10, 1.0, rng) == 10);
}

TEST_CASE("binomial sampler works at large n without underflow") {
  Rng rng(29);
  const std::int64_t n = 1000000;
  const std::int64_t x = binomial_sample(n, 0.5, rng);
  CHECK(x > 495000);
  CHECK(x < 505000);
}
