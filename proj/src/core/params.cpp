#include "core/params.hpp"

#include <cmath>
#include <stdexcept>

#include "core/constants.hpp"
#include "core/special.hpp"

namespace kinpol {

namespace {

void validate(const PhysicalConfig& cfg) {
  if (cfg.n_sites < 4) throw std::invalid_argument("n_sites must be >= 4");
  if (cfg.n_sites % 2 != 0) throw std::invalid_argument("n_sites must be even");
  if (!(cfg.lattice_constant > 0)) throw std::invalid_argument("lattice_constant must be positive");
  if (!(cfg.fiber_radius > 0)) throw std::invalid_argument("fiber_radius must be positive");
  if (!(cfg.transition_freq > 0)) throw std::invalid_argument("transition_freq must be positive");
  if (cfg.dipole < 0) throw std::invalid_argument("dipole must be non-negative");
}

}  // namespace

ModelParams derive_params(const PhysicalConfig& cfg) {
  using namespace constants;
  validate(cfg);

  ModelParams p;
  p.n_sites = cfg.n_sites;
  p.lattice_constant = cfg.lattice_constant;
  p.e0 = two_pi * cfg.transition_freq;

  const double j01 = bessel_j0_first_zero();
  if (cfg.detuning_target) {
    // The detuning is the carrier-scale difference c*q_perp - E0; carrying it
    // through a double-rounded radius would lose ~eps*E0 ~ 0.3 rad/s.  When a
    // target is requested we treat it as exact and recompute q_perp from it.
    p.delta = two_pi * *cfg.detuning_target;
    if (p.e0 + p.delta <= 0) throw std::domain_error("target mode frequency must be positive");
    p.q_perp = (p.e0 + p.delta) / speed_of_light;
  } else {
    p.q_perp = j01 / cfg.fiber_radius;
    // 80-bit arithmetic keeps the cancellation error of c*q_perp - E0 far
    // below the GHz detuning scale.
    const long double cq = static_cast<long double>(speed_of_light) * static_cast<long double>(j01) /
                           static_cast<long double>(cfg.fiber_radius);
    p.delta = static_cast<double>(cq - static_cast<long double>(p.e0));
  }

  const double radius = j01 / p.q_perp;
  p.mode_volume = M_PI * radius * radius * cfg.n_sites * cfg.lattice_constant;

  const double d_si = cfg.dipole * dipole_au;
  // SI equivalent of the Gaussian-units g = d sqrt(2 pi E0 / V).
  p.g = d_si * std::sqrt(p.e0 / (2.0 * vacuum_permittivity * hbar_si * p.mode_volume));
  p.big_g = p.g * std::sqrt(static_cast<double>(cfg.n_sites));
  if (cfg.coupling_override) {
    p.big_g = two_pi * *cfg.coupling_override;
    p.g = p.big_g / std::sqrt(static_cast<double>(cfg.n_sites));
  }
  p.t = cfg.hopping ? two_pi * *cfg.hopping : 0.0;
  p.k_sc = 2.0 * std::sqrt(p.e0 * p.big_g) / speed_of_light;
  return p;
}

PhysicalConfig retune_radius(const PhysicalConfig& cfg, double delta_target_hz) {
  using namespace constants;
  const double e0 = two_pi * cfg.transition_freq;
  const double delta = two_pi * delta_target_hz;
  if (e0 + delta <= 0) throw std::domain_error("target mode frequency must be positive");
  PhysicalConfig out = cfg;
  out.fiber_radius = speed_of_light * bessel_j0_first_zero() / (e0 + delta);
  out.detuning_target = delta_target_hz;
  return out;
}

double hopping_estimate(double dipole_au_value, double lattice_constant_m) {
  using namespace constants;
  const double d_si = dipole_au_value * dipole_au;
  const double a3 = lattice_constant_m * lattice_constant_m * lattice_constant_m;
  return d_si * d_si / (4.0 * M_PI * vacuum_permittivity * hbar_si * a3);
}

}  // namespace kinpol
