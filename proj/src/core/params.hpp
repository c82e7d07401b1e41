#pragma once

#include <optional>

namespace kinpol {

// Physical inputs describing the atom chain and the fiber.
// Frequencies are ordinary frequencies in Hz at this level; the derived
// ModelParams switches to angular frequencies.
struct PhysicalConfig {
  int n_sites = 40;
  double lattice_constant = 5.32e-6;   // m
  double fiber_radius = 0.299e-6;      // m
  double transition_freq = 384e12;     // Hz
  double dipole = 4.22;                // atomic units
  std::optional<double> coupling_override;  // collective G, Hz
  std::optional<double> hopping;            // exciton hopping t, Hz
  std::optional<double> detuning_target;    // delta, Hz; retunes the radius
};

// Model parameters of the lattice Hamiltonian in internal units
// (angular frequencies, rad/s; wave vectors 1/m).
struct ModelParams {
  int n_sites = 0;
  double lattice_constant = 0;  // m
  double e0 = 0;        // atomic transition, rad/s
  double q_perp = 0;    // transverse wave vector, 1/m
  double mode_volume = 0;  // m^3
  double g = 0;         // single-atom coupling, rad/s
  double big_g = 0;     // collective coupling g*sqrt(N), rad/s
  double t = 0;         // exciton hopping, rad/s
  double delta = 0;     // E_p(0) - E0, rad/s
  double k_sc = 0;      // strong-coupling wave vector, 1/m
};

// Throws std::invalid_argument on violated invariants (odd N, non-positive
// lengths or frequencies, negative dipole).
ModelParams derive_params(const PhysicalConfig& cfg);

// Returns cfg with the fiber radius replaced so the derived detuning equals
// delta_target (rad/s is NOT used here: the target is in Hz, matching
// PhysicalConfig).  Throws std::domain_error when E0 + delta is not positive.
PhysicalConfig retune_radius(const PhysicalConfig& cfg, double delta_target_hz);

// Dipole-dipole estimate t = d^2/(4 pi eps0 hbar a^3) in rad/s.  The model
// treats t as a free parameter; this helper only suggests a magnitude.
double hopping_estimate(double dipole_au, double lattice_constant_m);

}  // namespace kinpol
