#pragma once

#include <utility>

#include "core/params.hpp"

namespace kinpol {

// Single-particle curves.  The *_offset forms return E - E0 and are exact at
// the GHz scale: the photon offset is computed as
//   c*sqrt(k^2+q^2) - c*q + (c*q - E0) = c k^2/(sqrt(k^2+q^2)+q) + delta,
// which never subtracts two ~1e15 rad/s carriers.  All two-particle internal
// work uses eps = E - 2E0 built from these.
double photon_offset(double k, const ModelParams& p);
double exciton_offset(double k, const ModelParams& p);
std::pair<double, double> polariton_offsets(double k, const ModelParams& p);  // (E_L-E0, E_U-E0)

// Absolute curves (rad/s), as exposed publicly.
double photon_energy(double k, const ModelParams& p);
double exciton_energy(double k, const ModelParams& p);
std::pair<double, double> polariton_energies(double k, const ModelParams& p);

// Two-particle auxiliaries in offset coordinates, eps = E - 2E0.
// delta_product = [E-2E_L][E-E_L-E_U][E-2E_U]; phi = [E-2E_p][E-E_p-E_e]-2G^2.
double delta_product_offset(double eps, double k, const ModelParams& p);
double phi_offset(double eps, double k, const ModelParams& p);

// Absolute-energy wrappers of the same quantities.
double delta_product(double energy, double k, const ModelParams& p);
double phi_aux(double energy, double k, const ModelParams& p);

// Band edges of the two-polariton spectrum (offset and absolute energies).
struct BandEdges {
  double ll_bottom_off = 0;  // 2E_L(0) - 2E0
  double ll_top_off = 0;     // 2E_L(pi/a) - 2E0
  double lu_bottom_off = 0;  // E_L(0)+E_U(0) - 2E0
  double lu_top_off = 0;     // E_L(pi/a)+E_U(pi/a) - 2E0
  double uu_bottom_off = 0;  // 2E_U(0) - 2E0
  double gap = 0;            // lu_bottom - ll_top
  double ll_top = 0, lu_bottom = 0, uu_bottom = 0;  // absolute, rad/s
};

BandEdges band_edges(const ModelParams& p);

// Single-polariton Hopfield photon amplitude squared for the lower branch.
double lower_photon_weight(double k, const ModelParams& p);

inline double strong_coupling_k(const ModelParams& p) { return p.k_sc; }

}  // namespace kinpol
