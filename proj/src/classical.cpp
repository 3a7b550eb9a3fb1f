#include "dimwit/classical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dimwit/witness.hpp"

namespace dimwit {

void ClassicalModel::validate() const {
  if (d <= 0) throw StructuralError("register size must be positive");
  if (static_cast<int>(r.rows()) != d || static_cast<int>(q.cols()) != d)
    throw StructuralError("classical model shape mismatch");
  if (r.cols() != q.rows() + 1)
    throw StructuralError("classical model needs k+1 preparations for k measurements");
  for (std::size_t j = 0; j < r.cols(); ++j) {
    double colsum = 0.0;
    for (std::size_t a = 0; a < r.rows(); ++a) {
      if (r(a, j) < -1e-12 || r(a, j) > 1.0 + 1e-12)
        throw StructuralError("transfer probabilities must lie in [0,1]");
      colsum += r(a, j);
    }
    if (std::abs(colsum - 1.0) > 1e-12)
      throw StructuralError("transfer matrix must be column-stochastic");
  }
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t a = 0; a < q.cols(); ++a)
      if (q(i, a) < -1e-12 || q(i, a) > 1.0 + 1e-12)
        throw StructuralError("outcome probabilities must lie in [0,1]");
}

ProbabilityMatrix classical_probability_matrix(const ClassicalModel& model) {
  model.validate();
  const std::size_t k = model.q.rows();
  Mat p(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= k; ++j) {
      double s = 0.0;
      for (std::size_t a = 0; a < static_cast<std::size_t>(model.d); ++a)
        s += model.q(i, a) * model.r(a, j);
      p(i, j) = std::min(1.0, std::max(0.0, s));
    }
  for (std::size_t j = 0; j <= k; ++j) p(k, j) = 1.0;
  return ProbabilityMatrix(std::move(p));
}

ClassicalModel random_classical_model(int d, int k, Rng& rng) {
  ClassicalModel m;
  m.d = d;
  m.r = Mat(d, k + 1);
  m.q = Mat(k, d);
  for (std::size_t j = 0; j <= static_cast<std::size_t>(k); ++j) {
    double colsum = 0.0;
    for (std::size_t a = 0; a < static_cast<std::size_t>(d); ++a) {
      m.r(a, j) = -std::log(1.0 - uniform01(rng));  // exponential, then normalize
      colsum += m.r(a, j);
    }
    for (std::size_t a = 0; a < static_cast<std::size_t>(d); ++a) m.r(a, j) /= colsum;
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
    for (std::size_t a = 0; a < static_cast<std::size_t>(d); ++a)
      m.q(i, a) = uniform01(rng);
  return m;
}

void BinaryWitnessMatrix::validate() const {
  if (k < 1) throw StructuralError("binary matrix needs k >= 1");
  if (static_cast<int>(bits.size()) != k)
    throw StructuralError("binary matrix needs k rows");
  for (const auto& row : bits) {
    if (static_cast<int>(row.size()) != k + 1)
      throw StructuralError("binary matrix rows need k+1 entries");
    for (int b : row)
      if (b != 0 && b != 1) throw StructuralError("binary matrix entries must be 0 or 1");
  }
}

std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw StructuralError("determinant needs a square matrix");
  std::int64_t sign = 1, prev = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      for (std::size_t j = c + 1; j < n; ++j)
        a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) / prev;
      a[r][c] = 0;
    }
    prev = a[c][c];
  }
  return n ? sign * a[n - 1][n - 1] : 1;
}

std::int64_t binary_witness_det(const BinaryWitnessMatrix& m) {
  m.validate();
  const std::size_t n = static_cast<std::size_t>(m.k) + 1;
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 1));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.bits[i][j];
  return std::llabs(bareiss_det(std::move(a)));
}

BinarySearchResult exhaustive_binary_max(int k) {
  if (k < 1) throw StructuralError("k must be at least 1");
  if (k > 4)
    throw CapabilityError("exhaustive search supports k <= 4; use the annealing path");
  const int nbits = k * (k + 1);
  BinarySearchResult best;
  best.matrix.k = k;
  best.matrix.bits.assign(k, std::vector<int>(k + 1, 0));
  BinaryWitnessMatrix cand = best.matrix;
  for (std::uint64_t code = 0; code < (1ull << nbits); ++code) {
    // Row i holds bits [i*(k+1), (i+1)*(k+1)).
    for (int i = 0; i < k; ++i)
      for (int j = 0; j <= k; ++j)
        cand.bits[i][j] = static_cast<int>((code >> (i * (k + 1) + j)) & 1ull);
    // Duplicate columns force a zero determinant; skip them early.
    bool dup = false;
    for (int j = 0; j <= k && !dup; ++j)
      for (int j2 = j + 1; j2 <= k && !dup; ++j2) {
        bool same = true;
        for (int i = 0; i < k; ++i)
          if (cand.bits[i][j] != cand.bits[i][j2]) {
            same = false;
            break;
          }
        dup = same;
      }
    if (dup) continue;
    const std::int64_t v = binary_witness_det(cand);
    if (v > best.value) {
      best.value = v;
      best.matrix = cand;
    }
  }
  return best;
}

std::int64_t known_classical_max(int k) {
  static const std::int64_t table[] = {1, 1, 2, 3, 5, 9, 32, 56, 144};
  if (k < 1 || k > 9) throw CapabilityError("known maxima cover k = 1..9");
  return table[k - 1];
}

const std::vector<BinaryCertificate>& extremal_certificates() {
  static const std::vector<BinaryCertificate> certs = [] {
    std::vector<BinaryCertificate> v;
    auto add = [&v](int k, std::int64_t value, std::vector<std::vector<int>> bits) {
      BinaryCertificate c;
      c.k = k;
      c.value = value;
      c.matrix = BinaryWitnessMatrix{k, std::move(bits)};
      c.matrix.validate();
      v.push_back(std::move(c));
    };
    add(1, 1, {{1, 0}});
    add(2, 1, {{1, 0, 0}, {0, 1, 0}});
    add(3, 2, {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    add(4, 3,
        {{1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}});
    add(5, 5,
        {{1, 0, 0, 1, 1, 0},
         {0, 1, 0, 1, 1, 0},
         {0, 0, 1, 1, 1, 0},
         {0, 0, 0, 1, 0, 1},
         {0, 0, 0, 0, 1, 1}});
    add(6, 9,
        {{1, 1, 0, 1, 0, 0, 0},
         {0, 1, 1, 0, 1, 0, 0},
         {0, 0, 1, 1, 0, 1, 0},
         {1, 0, 0, 1, 1, 0, 0},
         {0, 1, 0, 0, 1, 1, 0},
         {1, 0, 1, 0, 0, 1, 0}});
    add(7, 32,
        {{1, 0, 1, 0, 1, 0, 1, 0},
         {1, 1, 0, 0, 1, 1, 0, 0},
         {1, 0, 0, 1, 1, 0, 0, 1},
         {1, 1, 1, 1, 0, 0, 0, 0},
         {1, 0, 1, 0, 0, 1, 0, 1},
         {1, 1, 0, 0, 0, 0, 1, 1},
         {1, 0, 0, 1, 0, 1, 1, 0}});
    add(8, 56,
        {{1, 0, 1, 0, 0, 1, 1, 0, 0},
         {1, 1, 0, 1, 0, 0, 1, 1, 0},
         {1, 1, 1, 0, 1, 0, 0, 1, 0},
         {0, 1, 1, 1, 0, 1, 0, 0, 0},
         {0, 0, 1, 1, 1, 0, 1, 0, 0},
         {1, 0, 0, 1, 1, 1, 0, 1, 0},
         {0, 1, 0, 0, 1, 1, 1, 0, 0},
         {0, 0, 1, 0, 0, 1, 1, 1, 0}});
    add(9, 144,
        {{1, 1, 0, 0, 0, 0, 0, 0, 1, 1},
         {1, 0, 1, 0, 0, 0, 0, 1, 0, 1},
         {1, 0, 0, 1, 0, 0, 1, 0, 0, 1},
         {1, 0, 0, 0, 1, 1, 0, 0, 0, 1},
         {1, 0, 0, 0, 1, 0, 1, 1, 1, 0},
         {1, 0, 0, 1, 0, 1, 0, 1, 1, 0},
         {1, 0, 1, 0, 0, 1, 1, 0, 1, 0},
         {1, 1, 0, 0, 0, 1, 1, 1, 0, 0},
         {1, 1, 1, 1, 1, 0, 0, 0, 0, 0}});
    return v;
  }();
  return certs;
}

CertificateCheck verify_certificate(int k) {
  for (const auto& c : extremal_certificates())
    if (c.k == k) {
      CertificateCheck chk;
      chk.computed = binary_witness_det(c.matrix);
      chk.expected = known_classical_max(k);
      chk.pass = chk.computed == chk.expected;
      return chk;
    }
  throw CapabilityError("no stored certificate for this k");
}

std::string certificates_json() {
  std::ostringstream os;
  os << "{\n  \"version\": 1,\n  \"entries\": [\n";
  const auto& certs = extremal_certificates();
  for (std::size_t n = 0; n < certs.size(); ++n) {
    const auto& c = certs[n];
    os << "    {\"k\": " << c.k << ", \"max_witness\": " << c.value << ", \"bits\": [";
    for (int i = 0; i < c.k; ++i) {
      os << "[";
      for (int j = 0; j <= c.k; ++j)
        os << c.matrix.bits[i][j] << (j < c.k ? "," : "");
      os << "]" << (i + 1 < c.k ? "," : "");
    }
    os << "]}" << (n + 1 < certs.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

BinarySearchResult binary_anneal_max(int k, const BinaryAnnealSchedule& schedule) {
  if (k < 1 || k > 12) throw CapabilityError("binary annealing supports k = 1..12");
  if (schedule.ratio <= 0.0 || schedule.ratio >= 1.0 || schedule.t0 <= 0.0)
    throw StructuralError("bad annealing schedule");
  const int nbits = k * (k + 1);
  BinarySearchResult best;
  best.matrix.k = k;
  best.matrix.bits.assign(k, std::vector<int>(k + 1, 0));
  for (int restart = 0; restart < schedule.restarts; ++restart) {
    Rng rng(derive_seed(schedule.seed, static_cast<std::uint64_t>(restart)));
    BinaryWitnessMatrix cur;
    cur.k = k;
    cur.bits.assign(k, std::vector<int>(k + 1, 0));
    for (auto& row : cur.bits)
      for (auto& b : row) b = static_cast<int>(rng() & 1ull);
    std::int64_t cur_v = binary_witness_det(cur);
    if (cur_v > best.value) {
      best.value = cur_v;
      best.matrix = cur;
    }
    for (double t = schedule.t0; t >= schedule.t_min; t *= schedule.ratio) {
      for (int flip = 0; flip < schedule.sweeps_per_stage * nbits; ++flip) {
        const int pos = static_cast<int>(rng() % static_cast<std::uint64_t>(nbits));
        const int i = pos / (k + 1), j = pos % (k + 1);
        cur.bits[i][j] ^= 1;
        const std::int64_t cand_v = binary_witness_det(cur);
        const double delta = static_cast<double>(cur_v - cand_v);  // minimize -|det|
        if (delta <= 0.0 || uniform01(rng) < std::exp(-delta / t)) {
          cur_v = cand_v;
          if (cur_v > best.value) {
            best.value = cur_v;
            best.matrix = cur;
          }
        } else {
          cur.bits[i][j] ^= 1;
        }
      }
    }
  }
  return best;
}

ClassicalModel classical_model_from_bits(const BinaryWitnessMatrix& m) {
  m.validate();
  ClassicalModel model;
  model.d = m.k + 1;
  model.r = Mat(m.k + 1, m.k + 1);
  for (int j = 0; j <= m.k; ++j) model.r(j, j) = 1.0;
  model.q = Mat(m.k, m.k + 1);
  for (int i = 0; i < m.k; ++i)
    for (int a = 0; a <= m.k; ++a) model.q(i, a) = static_cast<double>(m.bits[i][a]);
  return model;
}

}  // namespace dimwit
