#include "dimwit/rng.hpp"

#include <cmath>

namespace dimwit {

std::int64_t binomial_sample(std::int64_t n, double p, Rng& rng) {
  if (n < 0) throw StructuralError("binomial needs n >= 0");
  if (p < 0.0 || p > 1.0) throw StructuralError("binomial needs p in [0,1]");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;

  const double u = uniform01(rng);
  std::int64_t mode = static_cast<std::int64_t>(std::floor((n + 1) * p));
  if (mode > n) mode = n;
  const double log_pm = std::lgamma(n + 1.0) - std::lgamma(mode + 1.0) -
                        std::lgamma(n - mode + 1.0) + mode * std::log(p) +
                        (n - mode) * std::log1p(-p);
  const double odds = p / (1.0 - p);

  double cum = std::exp(log_pm);
  if (u < cum) return mode;
  double f_up = cum, f_dn = cum;
  std::int64_t up = mode, dn = mode;
  while (up < n || dn > 0) {
    if (up < n) {
      f_up *= static_cast<double>(n - up) / static_cast<double>(up + 1) * odds;
      ++up;
      cum += f_up;
      if (u < cum) return up;
    }
    if (dn > 0) {
      f_dn *= static_cast<double>(dn) / static_cast<double>(n - dn + 1) / odds;
      --dn;
      cum += f_dn;
      if (u < cum) return dn;
    }
  }
  // u fell into the last sliver of rounding residue.
  return mode;
}

}  // namespace dimwit
