#pragma once

// Internal constructions behind the analytic registry: each family builds a
// concrete scenario from its free parameters. Shared by registry.cpp and by
// the parameter-search utilities.

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "dimwit/types.hpp"
#include "dimwit/witness.hpp"

namespace dimwit::families {

inline constexpr double kPi = std::numbers::pi;

inline StateVector rsv(std::vector<double> comps) {
  std::vector<cplx> a;
  a.reserve(comps.size());
  for (double c : comps) a.emplace_back(c, 0.0);
  return StateVector::normalized(std::move(a), Field::Real);
}

inline StateVector csv(std::vector<cplx> comps) {
  return StateVector::normalized(std::move(comps), Field::Complex);
}

inline Effect r1(const StateVector& v) { return Effect::projector({v}); }

inline Scenario make_scenario(int dim, Field f, std::vector<StateVector> xs,
                              std::vector<Effect> ys) {
  Scenario s;
  s.dim = dim;
  s.field = f;
  for (auto& x : xs) s.preparations.push_back(Preparation::pure(x));
  s.effects = std::move(ys);
  s.validate();
  return s;
}

inline double abs_witness(const Scenario& s) { return std::abs(witness(s)); }

// --- generic small numeric utilities -------------------------------------

// Compass/pattern ascent: cycle the coordinates, try +-step, halve the step
// when a full sweep yields no improvement. Good enough to polish a family
// maximum to ~step_tol^2 in value.
inline double pattern_maximize(const std::function<double(const std::vector<double>&)>& f,
                               std::vector<double>& x, double step0, double step_tol) {
  double best = f(x);
  for (double step = step0; step >= step_tol;) {
    bool improved = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (double d : {step, -step}) {
        x[i] += d;
        const double v = f(x);
        if (v > best) {
          best = v;
          improved = true;
        } else {
          x[i] -= d;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

inline double golden_maximize(const std::function<double(double)>& f, double lo,
                              double hi, double tol) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

inline double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw StructuralError("bisection bracket does not change sign");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// --- qubit families --------------------------------------------------------

inline Scenario qubit_triangle() {
  const double h = std::sqrt(3.0) / 2.0;
  return make_scenario(
      2, Field::Real,
      {bloch_vector_state({0, 0, 1}), bloch_vector_state({h, 0, -0.5}),
       bloch_vector_state({-h, 0, -0.5})},
      {bloch_effect({0, 0, 1}), bloch_effect({1, 0, 0})});
}

inline Scenario qubit_tetrahedron() {
  const double r = 1.0 / std::sqrt(3.0);
  Scenario s = make_scenario(
      2, Field::Complex,
      {bloch_vector_state({r, r, r}), bloch_vector_state({r, -r, -r}),
       bloch_vector_state({-r, -r, r}), bloch_vector_state({-r, r, -r})},
      {bloch_effect({1, 0, 0}), bloch_effect({0, 1, 0}), bloch_effect({0, 0, 1})});
  return s;
}

// Variance-saturating qubit configuration at k = 4 (clean qubit, W = 0).
inline Scenario variance_saturating_qubit() {
  const double s2 = std::sqrt(2.0);
  const double s23 = std::sqrt(2.0 / 3.0);
  const double h3 = std::sqrt(3.0) / 2.0;
  return make_scenario(
      2, Field::Complex,
      {bloch_vector_state({0, 0, -1}), bloch_vector_state({0, 0, -1}),
       bloch_vector_state({2.0 * s2 / 3.0, 0, 1.0 / 3.0}),
       bloch_vector_state({-s2 / 3.0, s23, 1.0 / 3.0}),
       bloch_vector_state({-s2 / 3.0, -s23, 1.0 / 3.0})},
      {bloch_effect({0, 0, 1}), bloch_effect({1, 0, 0}),
       bloch_effect({-0.5, h3, 0}), bloch_effect({-0.5, -h3, 0})});
}

// Axes test: preparations along +-x, y, +-z; measurements reuse the first
// four preparations.
inline Scenario qubit_axes() {
  return make_scenario(
      2, Field::Complex,
      {bloch_vector_state({1, 0, 0}), bloch_vector_state({-1, 0, 0}),
       bloch_vector_state({0, 1, 0}), bloch_vector_state({0, 0, 1}),
       bloch_vector_state({0, 0, -1})},
      {bloch_effect({1, 0, 0}), bloch_effect({-1, 0, 0}), bloch_effect({0, 1, 0}),
       bloch_effect({0, 0, 1})});
}

// --- qutrit families -------------------------------------------------------

// Trine preparations with an apex against a rotated trine of measurements;
// a = sin(u), q = sin(v).
inline Scenario qutrit_k3(double u, double v) {
  const double a = std::sin(u), b = std::cos(u);
  const double q = std::sin(v), r = std::cos(v);
  std::vector<StateVector> xs, ys;
  std::vector<Effect> effs;
  for (int j = 1; j <= 3; ++j) {
    const double t = 2.0 * kPi * j / 3.0;
    xs.push_back(rsv({a * std::cos(t), a * std::sin(t), b}));
    effs.push_back(r1(rsv({q * std::cos(t), q * std::sin(t), r})));
  }
  xs.push_back(rsv({0, 0, 1}));
  return make_scenario(3, Field::Real, std::move(xs), std::move(effs));
}

// Real qutrit at k = 4: two orthogonal trine pairs with split measurements.
inline Scenario real_qutrit_k4() {
  const double s17 = std::sqrt(17.0);
  const double a = std::sqrt((9.0 + s17) / 16.0), b = std::sqrt(1.0 - a * a);
  const double q = std::sqrt((9.0 - s17) / 16.0), r = std::sqrt(1.0 - q * q);
  const double h = std::sqrt(3.0);
  return make_scenario(
      3, Field::Real,
      {rsv({1, 0, 0}), rsv({-0.5, h / 2.0, 0}), rsv({-0.5, -h / 2.0, 0}),
       rsv({-0.5, 0, h / 2.0}), rsv({-0.5, 0, -h / 2.0})},
      {r1(rsv({a, b, 0})), r1(rsv({a, -b, 0})), r1(rsv({q, 0, r})),
       r1(rsv({q, 0, -r}))});
}

// Complex qutrit at k = 4: third-root-of-unity orbits on two spheres.
// (a,b,c) = (cos u1, sin u1 cos v1, sin u1 sin v1), likewise (q,r,s).
inline Scenario complex_qutrit_k4(double u1, double v1, double u2, double v2) {
  const double a = std::cos(u1), b = std::sin(u1) * std::cos(v1),
               c = std::sin(u1) * std::sin(v1);
  const double q = std::cos(u2), r = std::sin(u2) * std::cos(v2),
               s = std::sin(u2) * std::sin(v2);
  std::vector<StateVector> xs;
  std::vector<Effect> effs;
  for (int j = 1; j <= 3; ++j) {
    const cplx wj = std::polar(1.0, 2.0 * kPi * j / 3.0);
    const cplx w2j = std::polar(1.0, 2.0 * kPi * 2 * j / 3.0);
    xs.push_back(csv({a, b * wj, c * w2j}));
    effs.push_back(r1(csv({q, r * wj, s * w2j})));
  }
  xs.push_back(csv({1, 0, 0}));
  xs.push_back(csv({0, 1, 0}));
  effs.push_back(r1(csv({1, 0, 0})));
  return make_scenario(3, Field::Complex, std::move(xs), std::move(effs));
}

// Real qutrit at k = 5: icosahedral preparation pairs, pentagonal
// measurement fan with apex height alpha = sin(w).
inline Scenario icosahedron_k5(double w) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double nrm = std::sqrt(phi + 2.0);
  std::vector<StateVector> xs;
  // pairs (|3>, |1>), (|1>, |2>), (|2>, |3>) with +-phi on the partner
  const int base[3] = {2, 0, 1};   // 0-based index of |a| for a = 0,1,2
  const int next[3] = {0, 1, 2};   // 0-based index of |a+1|
  for (int a = 0; a < 3; ++a)
    for (int bsign = 0; bsign < 2; ++bsign) {
      std::vector<double> v(3, 0.0);
      v[base[a]] = 1.0 / nrm;
      v[next[a]] = (bsign == 0 ? -phi : phi) / nrm;
      xs.push_back(rsv(std::move(v)));
    }
  const double alpha = std::sin(w), h = std::cos(w);
  std::vector<Effect> effs;
  for (int j = 1; j <= 5; ++j) {
    const double t = 2.0 * kPi * j / 5.0;
    effs.push_back(r1(rsv({alpha * std::cos(t), alpha * std::sin(t), h})));
  }
  return make_scenario(3, Field::Real, std::move(xs), std::move(effs));
}

// Complex qutrit at k = 5: ten-parameter family of planar preparations and
// split sphere pairs (the second pair of each kind carries an imaginary
// third component).
inline Scenario complex_qutrit_k5(const std::array<double, 10>& t) {
  const double a1 = std::cos(t[0]), b1 = std::sin(t[0]);
  const double a2 = std::cos(t[1]), b2 = std::sin(t[1]);
  const double f = std::cos(t[2]), g = std::sin(t[2]) * std::cos(t[3]),
               h = std::sin(t[2]) * std::sin(t[3]);
  const double f2 = std::cos(t[4]), g2 = std::sin(t[4]) * std::cos(t[5]),
               h2 = std::sin(t[4]) * std::sin(t[5]);
  const double q = std::cos(t[6]), r = std::sin(t[6]) * std::cos(t[7]),
               s = std::sin(t[6]) * std::sin(t[7]);
  const double q2 = std::cos(t[8]), r2 = std::sin(t[8]) * std::cos(t[9]),
               s2 = std::sin(t[8]) * std::sin(t[9]);
  const cplx im(0.0, 1.0);
  std::vector<StateVector> xs = {
      csv({a1, b1, 0}),
      csv({a2, b2, 0}),
      csv({f, g, h}),
      csv({f, g, -h}),
      csv({f2, g2, im * h2}),
      csv({f2, g2, -im * h2}),
  };
  std::vector<Effect> effs = {
      r1(csv({1, 0, 0})),
      r1(csv({q, r, s})),
      r1(csv({q, r, -s})),
      r1(csv({q2, r2, im * s2})),
      r1(csv({q2, r2, -im * s2})),
  };
  return make_scenario(3, Field::Complex, std::move(xs), std::move(effs));
}

// Complex qutrit at k = 8: nine overlap states on consecutive basis pairs
// (third-root phases), eight tilted measurement rays.
inline Scenario qutrit_k8(double alpha0, double alpha1, double alpha2) {
  const double inv2 = 1.0 / std::sqrt(2.0);
  const double alphas[3] = {alpha0, alpha1, alpha2};
  std::vector<StateVector> xs;
  for (int a = 0; a < 3; ++a) {
    const int lo = (a + 2) % 3;  // |0> means |3>: 0-based index 2
    const int hi = a % 3;
    const cplx ph = std::polar(1.0, alphas[a]);
    for (int b = 1; b <= 3; ++b) {
      std::vector<cplx> v(3, cplx(0, 0));
      v[static_cast<std::size_t>(lo)] = inv2;
      v[static_cast<std::size_t>(hi)] =
          ph * std::polar(1.0, 2.0 * kPi * b / 3.0) * inv2;
      xs.push_back(csv(std::move(v)));
    }
  }
  const cplx im(0.0, 1.0);
  const double c56 = std::sqrt(5.0 / 6.0), c16 = std::sqrt(1.0 / 6.0);
  const double c13 = std::sqrt(1.0 / 3.0), c23 = std::sqrt(2.0 / 3.0);
  auto yprime = [&](int j) -> std::vector<cplx> {
    if (j == 4) return {1, 0, 0};
    return {im * c13, std::polar(1.0, 2.0 * kPi * j / 3.0) * c23, 0};
  };
  std::vector<Effect> effs;
  for (int j = 1; j <= 8; ++j) {
    const int base = (j - 1) % 4 + 1;
    std::vector<cplx> yp = yprime(base);
    const double sign = j > 4 ? -1.0 : 1.0;
    std::vector<cplx> y = {sign * c56 * yp[0], sign * c56 * yp[1], c16};
    effs.push_back(r1(csv(std::move(y))));
  }
  return make_scenario(3, Field::Complex, std::move(xs), std::move(effs));
}

// --- ququart families ------------------------------------------------------

// Tetrahedral preparations in the first three levels plus the fourth basis
// state; measurements reuse the tetrahedron, optionally padded with |4><4|.
inline Scenario ququart_k4(bool rank2) {
  const double r = 1.0 / std::sqrt(3.0);
  const std::array<std::array<double, 3>, 4> tetra = {
      {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  std::vector<StateVector> xs;
  std::vector<Effect> effs;
  for (const auto& t : tetra) {
    StateVector v = rsv({t[0] * r, t[1] * r, t[2] * r, 0});
    xs.push_back(v);
    if (rank2)
      effs.push_back(Effect::projector({v, rsv({0, 0, 0, 1})}));
    else
      effs.push_back(r1(v));
  }
  xs.push_back(rsv({0, 0, 0, 1}));
  return make_scenario(4, Field::Real, std::move(xs), std::move(effs));
}

// Ququart at k = 5 with two-dimensional measurements; golden-ratio weights.
// The first preparation pair splits levels 1,2 so the combined (1+2)-columns
// of the measurements see the sign (a 1,3 split would make the pair
// indistinguishable and the witness identically zero).
inline Scenario ququart_k5_rank2() {
  const double s5 = std::sqrt(5.0);
  const double a = std::sqrt((5.0 + s5) / 10.0), b = std::sqrt((5.0 - s5) / 10.0);
  const double c = (1.0 + s5) / 4.0;  // cos(pi/5)
  const double s = std::sqrt((5.0 - s5) / 8.0);  // sin(pi/5)
  const double i2 = 1.0 / std::sqrt(2.0);
  std::vector<StateVector> xs = {
      rsv({a, b, 0, 0}),  rsv({a, -b, 0, 0}), rsv({0, 0, a, b}),
      rsv({0, 0, a, -b}), rsv({0, i2, 0, i2}), rsv({0, i2, 0, -i2}),
  };
  const StateVector y12 = rsv({i2, i2, 0, 0});
  std::vector<Effect> effs = {
      Effect::projector({y12, rsv({0, 0, i2, i2})}),
      Effect::projector({y12, rsv({0, 0, i2, -i2})}),
      Effect::projector({rsv({1, 0, 0, 0}), rsv({0, 0, 1, 0})}),
      Effect::projector({rsv({0, s, 0, c}), rsv({0, 0, 1, 0})}),
      Effect::projector({rsv({0, s, 0, -c}), rsv({0, 0, 1, 0})}),
  };
  return make_scenario(4, Field::Real, std::move(xs), std::move(effs));
}

// Ququart at k = 9: computational basis, two orthogonal conjugate pairs of
// quarter-phase rays, and two real sign vectors; measurements reuse
// preparations 2..10. Gives exactly 1/8. (A full Fourier quartet in place of
// the quarter-phase pairs makes the preparation projectors linearly
// dependent, which forces the determinant to zero.)
inline Scenario ququart_k9() {
  const cplx i1(0.0, 0.5);
  std::vector<StateVector> xs;
  for (int j = 0; j < 4; ++j) {
    std::vector<cplx> v(4, cplx(0, 0));
    v[static_cast<std::size_t>(j)] = 1.0;
    xs.push_back(csv(std::move(v)));
  }
  xs.push_back(csv({0.5, 0.5, i1, -i1}));
  xs.push_back(csv({0.5, 0.5, -i1, i1}));
  xs.push_back(csv({0.5, i1, 0.5, -i1}));
  xs.push_back(csv({0.5, i1, -0.5, i1}));
  xs.push_back(csv({0.5, 0.5, -0.5, -0.5}));
  xs.push_back(csv({0.5, -0.5, -0.5, 0.5}));
  std::vector<Effect> effs;
  for (int i = 1; i <= 9; ++i) effs.push_back(r1(xs[static_cast<std::size_t>(i)]));
  return make_scenario(4, Field::Complex, std::move(xs), std::move(effs));
}

// --- ququint and d = 6 families ---------------------------------------------

// Five-cell (4-simplex) preparations with measurements equal to the first
// five preparations; rank-1 effects.
inline Scenario ququint_5cell() {
  const double s5 = std::sqrt(5.0);
  std::vector<StateVector> xs = {
      rsv({0, 0, 0, 1, 0}),
      rsv({s5 / 4.0, s5 / 4.0, s5 / 4.0, -0.25, 0}),
      rsv({s5 / 4.0, -s5 / 4.0, -s5 / 4.0, -0.25, 0}),
      rsv({-s5 / 4.0, s5 / 4.0, -s5 / 4.0, -0.25, 0}),
      rsv({-s5 / 4.0, -s5 / 4.0, s5 / 4.0, -0.25, 0}),
      rsv({0, 0, 0, 0, 1}),
  };
  std::vector<Effect> effs;
  for (int i = 0; i < 5; ++i) effs.push_back(r1(xs[static_cast<std::size_t>(i)]));
  return make_scenario(5, Field::Real, std::move(xs), std::move(effs));
}

// Ququint at k = 5 with two-dimensional measurements: trine cone over |1>
// with apex weight b, measurement cones with weight q plus tangent columns.
inline Scenario ququint_k5_rank2(double b, double q) {
  const double a = std::sqrt(std::max(0.0, 1.0 - b * b));
  const double r = std::sqrt(std::max(0.0, 1.0 - q * q));
  std::vector<StateVector> xs;
  std::vector<Effect> effs;
  for (int j = 1; j <= 3; ++j) {
    const double t = 2.0 * kPi * j / 3.0;
    xs.push_back(rsv({a, b * std::cos(t), b * std::sin(t), 0, 0}));
    const StateVector y = rsv({q, -r * std::cos(t), -r * std::sin(t), 0, 0});
    const StateVector yp = rsv({0, std::sin(t), -std::cos(t), 0, 0});
    effs.push_back(Effect::projector({y, yp}));
  }
  xs.push_back(rsv({0, 0, 0, 1, 0}));
  xs.push_back(rsv({0, 0, 0, 0, 1}));
  xs.push_back(rsv({1, 0, 0, 0, 0}));
  effs.push_back(Effect::projector({rsv({0, 0, 0, 1, 0}), rsv({1, 0, 0, 0, 0})}));
  effs.push_back(Effect::projector({rsv({0, 0, 0, 0, 1}), rsv({1, 0, 0, 0, 0})}));
  return make_scenario(5, Field::Real, std::move(xs), std::move(effs));
}

// Ququint at k = 6: three +- pairs over |1> against split two-dimensional
// measurements.
inline Scenario d5_k6(double a, double c) {
  const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
  const double d = std::sqrt(std::max(0.0, 1.0 - c * c));
  std::vector<StateVector> xs = {
      rsv({a, b, 0, 0, 0}),  rsv({a, -b, 0, 0, 0}), rsv({a, 0, b, 0, 0}),
      rsv({a, 0, -b, 0, 0}), rsv({a, 0, 0, b, 0}),  rsv({a, 0, 0, -b, 0}),
      rsv({0, 0, 0, 0, 1}),
  };
  std::vector<Effect> effs = {
      Effect::projector({rsv({c, d, 0, 0, 0}), rsv({0, 0, 1, 0, 0})}),
      Effect::projector({rsv({c, -d, 0, 0, 0}), rsv({0, 0, 1, 0, 0})}),
      Effect::projector({rsv({c, 0, d, 0, 0}), rsv({0, 0, 0, 1, 0})}),
      Effect::projector({rsv({c, 0, -d, 0, 0}), rsv({0, 0, 0, 1, 0})}),
      Effect::projector({rsv({c, 0, 0, d, 0}), rsv({0, 1, 0, 0, 0})}),
      Effect::projector({rsv({c, 0, 0, -d, 0}), rsv({0, 1, 0, 0, 0})}),
  };
  return make_scenario(5, Field::Real, std::move(xs), std::move(effs));
}

// d = 6 at k = 6: stored numeric optimum (stationary to ~5e-14 of the
// recorded maximum) found by the in-repo annealer plus coordinate refiner.
inline Scenario d6_k6_numeric() {
  static const double xs_raw[7][6] = {
      {0.99999414828082944, 0.003339020900153609, 1.7166138353061964e-07,
       0.00047952772584115128, -0.00023373559552570947, -0.00051938841815235158},
      {0.15377646105905218, 0.98810174566414077, -5.7220433092492922e-08,
       -0.00090434747413152485, 9.441380886522522e-07, 0.0026310443522026741},
      {-9.598269763350234e-08, -1.0868399184313596e-07, 0.99999994674267689,
       0.00012213618111888002, 0.00027968057900830488, 0.00011565530513897305},
      {-0.2290595937579219, 0.26616497831973912, 0.00011453157539251508,
       -0.93631548145603205, -0.00010619513254406234, -0.0010961817275098869},
      {-0.22986418019344645, 0.26742410564402574, 0.00021140993131410393,
       0.3001129670388214, -0.88632745912957378, -0.0016136599387044383},
      {-0.15732435329494296, 0.18166512925928346, -0.00026141560538330211,
       0.33332618721825474, 0.46498941541352135, 0.78417170109699186},
      {0.22996949917900772, -0.26950869235674607, 6.4728455284986003e-05,
       -0.30149230717303899, -0.42167891680034808, 0.77831122942130504}};
  static const double ys_raw[18][6] = {
      {-2.5507116265890661e-05, -0.00052525427517892496, -0.99999974262643876,
       -0.00018418065167532757, -0.00036686244598928931, -0.00026399587711791427},
      {0.02943748541078129, -0.62726779592591619, 0.00068054512704455485,
       -0.26650986495553941, -0.37237674737662124, -0.6292663453577122},
      {-0.13304353696688642, -0.77411264689370685, 0.00012983128080425204,
       0.21396730423399726, 0.29725031744188396, 0.49890805949987793},
      {0.63831377522669985, 0.75636370336855141, 1.5588029754967808e-05,
       0.071635458604555127, -0.11000207873231072, 0.056897944466799841},
      {0.52728031283596344, -0.30649237415801633, -0.0001647168040873631,
       -0.28545492766704994, 0.73712828885878889, -0.056526446745562689},
      {-0.40710822691646908, 0.36252082550603848, -0.00024775350982128954,
       0.1834414238591521, 0.55879753396572029, 0.59744124507427832},
      {0.0039717209489124605, -0.00023309284757940966, 0.999991932244643,
       0.00021171445978249219, 0.000400560321299555, 0.00031823650048680473},
      {-0.24030710813273526, -0.086508095215143757, 0.0014386874753832676,
       -0.33239810923410024, -0.4632002896314642, -0.78084810436114949},
      {-0.96851800927583176, 0.087937137918895514, 0.003745780214365052,
       0.079321358376285886, 0.11156123904302342, 0.18838287252859612},
      {0.7298130364529879, 0.66630310144711258, -1.9114606801494028e-05,
       0.00299706163057119, 0.0043761952074556371, 0.15292146676300633},
      {-0.26886880666666974, 0.074103907609236519, -0.00013095021324566886,
       0.039449636066074621, 0.054828905280966005, 0.9579434617401329},
      {0.49633023659842862, -0.59098867336856142, 0.00015109095633683225,
       -0.34540304773991354, -0.48331840330969628, 0.22691125356377437},
      {-0.058861281287547973, -0.054191479601194262, -0.99679416963607259,
       3.0373477949193917e-06, -0.0001283487885358602, 8.4678772342768888e-07},
      {-0.81270644179813789, -0.57714661524594868, 0.07936836881360361,
       -0.0031508138636339583, -0.0044641499437585415, -0.008990536085196326},
      {0.57567551037444553, -0.81111243062654781, 0.010096519155412329,
       0.037059257976791028, 0.049982132913254013, 0.081980422826497382},
      {-0.53396484273747025, 0.34099232108795802, 6.8035422298317946e-05,
       -0.76647551669431435, 0.054007043075087614, 0.090577594674657924},
      {0.65163751096680755, 0.74759647308201305, -6.0880427925054987e-07,
       -0.11300371370521148, 0.030292260967731535, 0.052731464518270682},
      {0.37554696871787735, -0.34857244294988909, 0.0002293785153687757,
       -0.51159595637907929, -0.3513260593134046, -0.5935497040283535}};
  std::vector<StateVector> xs;
  for (const auto& row : xs_raw)
    xs.push_back(rsv({row[0], row[1], row[2], row[3], row[4], row[5]}));
  std::vector<Effect> effs;
  for (int i = 0; i < 6; ++i) {
    std::vector<StateVector> cols;
    for (int t = 0; t < 3; ++t) {
      const auto& row = ys_raw[3 * i + t];
      cols.push_back(rsv({row[0], row[1], row[2], row[3], row[4], row[5]}));
    }
    effs.push_back(Effect::projector(std::move(cols)));
  }
  return make_scenario(6, Field::Real, std::move(xs), std::move(effs));
}

// d = 5 at k = 7: heptagonal phase orbit of a fixed rank-2 projector.
inline Scenario heptagonal_d5_k7() {
  const cplx xi = cplx(0.0, 1.0) / (2.0 * std::sqrt(3.0));
  // Sign pattern of the antisymmetric part.
  const int sgn[4][4] = {
      {0, 1, 1, 1}, {-1, 0, 1, -1}, {-1, -1, 0, 1}, {-1, 1, -1, 0}};
  CMat m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          (i == j) ? cplx(0.5, 0.0) : xi * static_cast<double>(sgn[i][j]);
  // Two orthonormal columns spanning the projector's range.
  std::vector<std::vector<cplx>> range;
  for (int ccol = 0; ccol < 4 && range.size() < 2; ++ccol) {
    std::vector<cplx> v(4);
    for (int rrow = 0; rrow < 4; ++rrow)
      v[static_cast<std::size_t>(rrow)] =
          m(static_cast<std::size_t>(rrow), static_cast<std::size_t>(ccol));
    for (const auto& u : range) {
      const cplx ov = inner(u, v);
      for (std::size_t t = 0; t < v.size(); ++t) v[t] -= ov * u[t];
    }
    const double nv = norm(v);
    if (nv > 1e-8) {
      for (auto& e : v) e /= nv;
      range.push_back(std::move(v));
    }
  }
  if (range.size() != 2)
    throw NumericIntegrityError("heptagonal projector is not rank 2");

  const int uexp[4] = {0, 1, 2, 4};
  auto apply_u = [&](const std::vector<cplx>& v, int j) {
    std::vector<cplx> out(5, cplx(0, 0));
    for (int c = 0; c < 4; ++c)
      out[static_cast<std::size_t>(c)] =
          std::polar(1.0, 2.0 * kPi * uexp[c] * j / 7.0) * v[static_cast<std::size_t>(c)];
    return out;
  };

  std::vector<StateVector> xs;
  std::vector<Effect> effs;
  const std::vector<cplx> seed = {0.5, 0.5, 0.5, 0.5};
  for (int j = 1; j <= 7; ++j) {
    xs.push_back(csv(apply_u(seed, j)));
    effs.push_back(
        Effect::projector({csv(apply_u(range[0], j)), csv(apply_u(range[1], j))}));
  }
  xs.push_back(csv({0, 0, 0, 0, 1}));
  return make_scenario(5, Field::Complex, std::move(xs), std::move(effs));
}

}  // namespace dimwit::families
