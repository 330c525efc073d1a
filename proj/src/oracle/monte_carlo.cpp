#include "polboost/monte_carlo.hpp"

#include "polboost/errors.hpp"

#include <cmath>
#include <random>

namespace polboost::oracle {

namespace {

// Running sums for one real component of a ratio estimator sum(wX)/sum(wY).
struct RatioSums {
  double wx{0.0}, w2x2{0.0}, w2xy{0.0};

  void add(double w, double x, double y) {
    wx += w * x;
    w2x2 += w * w * x * x;
    w2xy += w * w * x * y;
  }
};

} // namespace

double MonteCarloEstimate::max_standard_score(const CMat3 &other, double floor) const {
  double worst = 0.0;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      const double dr = std::abs(other(m, n).real() - mean(m, n).real());
      const double di = std::abs(other(m, n).imag() - mean(m, n).imag());
      const double sr = stderr_real(m, n), si = stderr_imag(m, n);
      worst = std::max(worst, sr > floor ? dr / sr : dr / floor);
      worst = std::max(worst, si > floor ? di / si : di / floor);
    }
  }
  return worst;
}

MonteCarloEstimate monte_carlo_density(int helicity, double v, const PacketSpec &spec,
                                       std::size_t samples, std::uint64_t seed, BasisMode mode) {
  if (helicity != 1 && helicity != -1)
    throw DomainError("helicity must be +1 or -1");
  if (!(std::abs(v) < 1.0))
    throw DomainError("superluminal velocity");
  spec.validate();
  if (samples < 2)
    throw DomainError("Monte Carlo oracle needs at least two samples");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, spec.sigma);
  const double gamma = 1.0 / std::sqrt(1.0 - v * v);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  RatioSums re[3][3], im[3][3];
  double wy = 0.0, w2y2 = 0.0;

  for (std::size_t s = 0; s < samples; ++s) {
    const double kx = gauss(rng), ky = gauss(rng), kz = spec.k0;
    const double energy = std::sqrt(kx * kx + ky * ky + kz * kz);
    const double w = 1.0 / (2.0 * energy);

    // Detector frame momentum.
    const double kz_b = gamma * (kz - v * energy);
    const double kt = std::hypot(kx, ky);
    const double kn_b = std::hypot(kt, kz_b);
    const double st = kt / kn_b, ct = kz_b / kn_b;
    const double cp = kt > 0.0 ? kx / kt : 1.0, sp = kt > 0.0 ? ky / kt : 0.0;

    // (e_theta + i sigma e_phi)/sqrt(2) at the boosted direction.
    const double e_theta[3] = {ct * cp, ct * sp, -st};
    const double e_phi[3] = {-sp, cp, 0.0};
    std::complex<double> alpha[3];
    for (int m = 0; m < 3; ++m)
      alpha[m] = inv_sqrt2 * std::complex<double>(e_theta[m], helicity * e_phi[m]);

    double khat[3];
    if (mode == BasisMode::boosted_basis) {
      khat[0] = st * cp;
      khat[1] = st * sp;
      khat[2] = ct;
    } else {
      khat[0] = kx / energy;
      khat[1] = ky / energy;
      khat[2] = kz / energy;
    }
    // <alpha|b_m> with b_m = e_m - khat_m khat
    std::complex<double> amp[3];
    std::complex<double> alpha_dot_k = 0.0;
    for (int m = 0; m < 3; ++m)
      alpha_dot_k += std::conj(alpha[m]) * khat[m];
    double y = 0.0;
    for (int m = 0; m < 3; ++m) {
      amp[m] = std::conj(alpha[m]) - alpha_dot_k * khat[m];
      y += std::norm(amp[m]);
    }
    if (mode == BasisMode::boosted_basis)
      y = 1.0;

    for (int m = 0; m < 3; ++m) {
      for (int n = 0; n < 3; ++n) {
        const std::complex<double> x = amp[m] * std::conj(amp[n]);
        re[m][n].add(w, x.real(), y);
        im[m][n].add(w, x.imag(), y);
      }
    }
    wy += w * y;
    w2y2 += w * w * y * y;
  }

  MonteCarloEstimate out;
  out.samples = samples;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      const double r_re = re[m][n].wx / wy, r_im = im[m][n].wx / wy;
      out.mean(m, n) = {r_re, r_im};
      const auto spread = [&](const RatioSums &rs, double r) {
        const double ss = rs.w2x2 - 2.0 * r * rs.w2xy + r * r * w2y2;
        return std::sqrt(std::max(ss, 0.0)) / wy;
      };
      out.stderr_real(m, n) = spread(re[m][n], r_re);
      out.stderr_imag(m, n) = spread(im[m][n], r_im);
    }
  }
  return out;
}

} // namespace polboost::oracle
