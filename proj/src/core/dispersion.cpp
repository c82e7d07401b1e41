#include "core/dispersion.hpp"

#include <cmath>

#include "core/constants.hpp"

namespace kinpol {

using constants::speed_of_light;

double photon_offset(double k, const ModelParams& p) {
  const double q = p.q_perp;
  return speed_of_light * k * k / (std::sqrt(k * k + q * q) + q) + p.delta;
}

double exciton_offset(double k, const ModelParams& p) {
  return 2.0 * p.t * std::cos(p.lattice_constant * k);
}

std::pair<double, double> polariton_offsets(double k, const ModelParams& p) {
  const double ee = exciton_offset(k, p);
  const double ep = photon_offset(k, p);
  const double r = std::sqrt((ee - ep) * (ee - ep) + 4.0 * p.big_g * p.big_g);
  return {0.5 * (ee + ep - r), 0.5 * (ee + ep + r)};
}

double photon_energy(double k, const ModelParams& p) { return p.e0 + photon_offset(k, p); }

double exciton_energy(double k, const ModelParams& p) { return p.e0 + exciton_offset(k, p); }

std::pair<double, double> polariton_energies(double k, const ModelParams& p) {
  auto [lo, hi] = polariton_offsets(k, p);
  return {p.e0 + lo, p.e0 + hi};
}

double delta_product_offset(double eps, double k, const ModelParams& p) {
  auto [el, eu] = polariton_offsets(k, p);
  return (eps - 2.0 * el) * (eps - el - eu) * (eps - 2.0 * eu);
}

double phi_offset(double eps, double k, const ModelParams& p) {
  const double ep = photon_offset(k, p);
  const double ee = exciton_offset(k, p);
  return (eps - 2.0 * ep) * (eps - ep - ee) - 2.0 * p.big_g * p.big_g;
}

double delta_product(double energy, double k, const ModelParams& p) {
  return delta_product_offset(energy - 2.0 * p.e0, k, p);
}

double phi_aux(double energy, double k, const ModelParams& p) {
  return phi_offset(energy - 2.0 * p.e0, k, p);
}

BandEdges band_edges(const ModelParams& p) {
  const double kz = M_PI / p.lattice_constant;
  auto [el0, eu0] = polariton_offsets(0.0, p);
  auto [elz, euz] = polariton_offsets(kz, p);
  BandEdges e;
  e.ll_bottom_off = 2.0 * el0;
  e.ll_top_off = 2.0 * elz;
  e.lu_bottom_off = el0 + eu0;
  e.lu_top_off = elz + euz;
  e.uu_bottom_off = 2.0 * eu0;
  e.gap = e.lu_bottom_off - e.ll_top_off;
  e.ll_top = 2.0 * p.e0 + e.ll_top_off;
  e.lu_bottom = 2.0 * p.e0 + e.lu_bottom_off;
  e.uu_bottom = 2.0 * p.e0 + e.uu_bottom_off;
  return e;
}

double lower_photon_weight(double k, const ModelParams& p) {
  const double ee = exciton_offset(k, p);
  const double ep = photon_offset(k, p);
  const double el = 0.5 * (ee + ep - std::sqrt((ee - ep) * (ee - ep) + 4.0 * p.big_g * p.big_g));
  const double d = el - ee;  // photon component of ((ep,G),(G,ee)) eigenvector
  return d * d / (p.big_g * p.big_g + d * d);
}

}  // namespace kinpol
