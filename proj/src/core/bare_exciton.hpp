#pragma once

#include <vector>

#include "core/grids.hpp"
#include "core/params.hpp"

namespace kinpol {

// Closed-form solution for two hard-core excitons on the ring (no photons).
// States are labeled by half-integer mu; amplitudes vanish at zero separation
// and are sinusoidal in |n| with wave vector kappa_mu.

// g_n(mu) = sqrt(2/N) (1 - delta_{n0}) sin(|n| a kappa_mu).
double bare_amplitude(int n, double mu, int n_sites);

// E_mu = 2 E0 + 4 t cos(a kappa_mu), returned as offset from 2 E0.
double bare_energy_offset(double mu, const ModelParams& p);
double bare_energy(double mu, const ModelParams& p);

// Momentum-space amplitude on the integer grid: the unitary DFT of g_n(mu),
//   C_mu(k_nu) = (sqrt(2)/N) sin(a kappa_mu) / (cos(a k_nu) - cos(a kappa_mu)).
// The denominator never vanishes because the grids interlace.
double bare_amplitude_momentum(int nu, double mu, int n_sites);

// Brute-force two-exciton eigensystem on site pairs {s1 < s2} with periodic
// wrap, for validating the closed form.  Energies are offsets from 2 E0.
struct BareOracleResult {
  std::vector<double> energies;      // all N(N-1)/2 levels, ascending
  std::vector<int> k_index;         // translation label m, K = 2 pi m/(N a)
  std::vector<double> k0_energies;  // the K = 0 subset, ascending
  double hermiticity_residual = 0;
};

BareOracleResult bare_oracle(int n_sites, double t);

}  // namespace kinpol
