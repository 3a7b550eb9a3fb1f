#pragma once

#include <cstdint>
#include <string>

#include "dimwit/rng.hpp"
#include "dimwit/types.hpp"

namespace dimwit {

// Stochastic-register model: r maps preparations into a d-state register
// (column-stochastic), q maps register states to outcome probabilities.
struct ClassicalModel {
  int d = 0;
  Mat r;  // d x (k+1)
  Mat q;  // k x d
  void validate() const;
};

ProbabilityMatrix classical_probability_matrix(const ClassicalModel& model);

ClassicalModel random_classical_model(int d, int k, Rng& rng);

// k x (k+1) matrix of {0,1}; the all-ones last row is implicit.
struct BinaryWitnessMatrix {
  int k = 0;
  std::vector<std::vector<int>> bits;
  void validate() const;
};

// Exact integer determinant (Bareiss fraction-free elimination).
std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> a);

// |det| of the binary matrix with the ones row appended.
std::int64_t binary_witness_det(const BinaryWitnessMatrix& m);

struct BinarySearchResult {
  std::int64_t value = 0;
  BinaryWitnessMatrix matrix;
};

// Exact maximum over all k x (k+1) bit matrices; k <= 4 only.
BinarySearchResult exhaustive_binary_max(int k);

// Known classical maxima of the witness for k = 1..9.
std::int64_t known_classical_max(int k);

// Shipped extremal matrices attaining the known maxima, k = 1..9.
struct BinaryCertificate {
  int k = 0;
  std::int64_t value = 0;
  BinaryWitnessMatrix matrix;
};
const std::vector<BinaryCertificate>& extremal_certificates();

struct CertificateCheck {
  std::int64_t computed = 0;
  std::int64_t expected = 0;
  bool pass = false;
};
CertificateCheck verify_certificate(int k);

// JSON document with all certificates (the shipped data file's content).
std::string certificates_json();

// Single-bit-flip Metropolis search over bit matrices; heuristic companion
// to the exhaustive path for k up to 12.
struct BinaryAnnealSchedule {
  double t0 = 3.0;
  double ratio = 0.92;
  double t_min = 0.02;
  int sweeps_per_stage = 40;  // flips per bit per stage
  int restarts = 20;
  std::uint64_t seed = 1;
};
BinarySearchResult binary_anneal_max(int k, const BinaryAnnealSchedule& schedule = {});

// Deterministic embedding of a bit matrix as a classical model with
// d = k+1 register states: r selects register j, q outputs the bits.
ClassicalModel classical_model_from_bits(const BinaryWitnessMatrix& m);

}  // namespace dimwit
