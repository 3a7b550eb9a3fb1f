#include "dimwit/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace dimwit {

double lu_det(Mat a) {
  if (a.rows() != a.cols()) throw StructuralError("determinant needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1.0;
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (a(piv, c) == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const double inv = 1.0 / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a(r, c) * inv;
      if (f == 0.0) continue;
      for (std::size_t j = c + 1; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

namespace {

Mat drop_rows_cols(const Mat& a, std::size_t r0, std::size_t r1, std::size_t c0,
                   std::size_t c1, bool two) {
  Mat m(a.rows() - (two ? 2 : 1), a.cols() - (two ? 2 : 1));
  std::size_t ri = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i == r0 || (two && i == r1)) continue;
    std::size_t cj = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j == c0 || (two && j == c1)) continue;
      m(ri, cj++) = a(i, j);
    }
    ++ri;
  }
  return m;
}

}  // namespace

double minor2_det(const Mat& a, std::size_t r0, std::size_t r1, std::size_t c0,
                  std::size_t c1) {
  if (r0 == r1 || c0 == c1) throw StructuralError("minor rows/cols must be distinct");
  if (r0 >= a.rows() || r1 >= a.rows() || c0 >= a.cols() || c1 >= a.cols())
    throw StructuralError("minor index out of range");
  return lu_det(drop_rows_cols(a, r0, r1, c0, c1, true));
}

double minor1_det(const Mat& a, std::size_t r, std::size_t c) {
  if (r >= a.rows() || c >= a.cols()) throw StructuralError("minor index out of range");
  return lu_det(drop_rows_cols(a, r, 0, c, 0, false));
}

Mat adjugate_mat(const Mat& a) {
  if (a.rows() != a.cols()) throw StructuralError("adjugate needs a square matrix");
  const std::size_t n = a.rows();
  Mat adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1.0;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double cof = ((i + j) % 2 ? -1.0 : 1.0) * minor1_det(a, i, j);
      adj(j, i) = cof;  // transpose of the cofactor matrix
    }
  return adj;
}

CMat dagger(const CMat& a) {
  CMat d(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d(j, i) = std::conj(a(i, j));
  return d;
}

std::vector<double> hermitian_eigenvalues(CMat a) {
  if (a.rows() != a.cols()) throw StructuralError("eigenvalues need a square matrix");
  const std::size_t n = a.rows();
  // Cyclic Jacobi: annihilate a(p,q) with a unitary plane rotation.
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double abs_apq = std::abs(apq);
        const cplx phase = apq / abs_apq;
        const double tau = (aqq - app) / (2.0 * abs_apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(sp) * akq;
          a(k, q) = sp * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sp * aqk;
          a(q, k) = std::conj(sp) * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) throw StructuralError("inner product dimension mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const std::vector<cplx>& a) {
  double s = 0.0;
  for (const cplx& v : a) s += std::norm(v);
  return std::sqrt(s);
}

std::vector<std::vector<cplx>> gram_schmidt_vectors(std::vector<std::vector<cplx>> vs,
                                                    double dep_tol) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto& v = vs[i];
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < i; ++j) {
        const cplx c = inner(vs[j], v);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * vs[j][k];
      }
    }
    const double nv = norm(v);
    if (nv <= dep_tol)
      throw DegenerateInputError("gram_schmidt: vectors are linearly dependent");
    for (auto& x : v) x /= nv;
  }
  return vs;
}

}  // namespace dimwit
