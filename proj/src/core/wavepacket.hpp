#pragma once

#include <vector>

#include "core/exact2p.hpp"
#include "core/params.hpp"

namespace kinpol {

// Photon-photon / photon-exciton (AB) subsystem: one photon plus one
// polariton of the doubled coupling sqrt(2) G at the same wave vector.

// Offsets from 2E0 of E^{(p,L)} and E^{(p,U)}.
struct ABPolaritonPair {
  double lower = 0, upper = 0;
};
ABPolaritonPair ab_energy_offsets(double k, const ModelParams& p);

// Signed mixing amplitudes (x_alpha, x_beta) per branch: true orthonormal
// eigenvectors of the 2x2 block [[2E_p, sqrt2 G], [sqrt2 G, E_p+E_e]],
// with x_beta >= 0.  |x_alpha| matches the closed form
// sqrt((E - E_p - E_e)^2 / (2G^2 + (E - E_p - E_e)^2)).
struct ABMixing {
  double alpha_lower = 0, beta_lower = 0;
  double alpha_upper = 0, beta_upper = 0;
};
ABMixing ab_mixing(double k, const ModelParams& p);

// Coupling kernel between the integer and half-integer grids,
//   Lambda = 1/2 [cot(pi(nu+|mu|)/N) - cot(pi(nu-|mu|)/N)],
// equal to the lattice sum sum_{n != 0} sin(|n| a kappa_mu) e^{i k_nu a n}.
double lambda_kernel(int nu, double mu, int n_sites);

// Exciton-pair coordinates e_mu = 1/2 sum_s g_s(mu) C(s), mu = 1/2 .. (N-1)/2.
std::vector<double> extract_e_mu(const std::vector<double>& c_n, int n_sites);

// A(0) rebuilt through the AB-polariton scattering channels:
//   A(0) = (4G / N^{3/2}) sum_{i,nu} x_a x_b / (E - E^{(p,i)}) sum_{mu>0} Lambda e_mu.
// Throws std::domain_error when E is within 1e-9 G of some E^{(p,i)}.
double reconstruct_a0(const TwoPolaritonState& st, const ModelParams& p);

// Exciton-like approximation: C(s) ~ X_gamma g_s(rho - 1/2), giving
//   A(0) ~ (2 G X_gamma / N^{3/2}) sum_{i,nu} x_a x_b Lambda_{nu, rho-1/2} / (E - E^{(p,i)}),
// with X_gamma = sign(e_{rho-1/2}) sqrt(sum C(k)^2).
double approx_a0(const TwoPolaritonState& st, const ModelParams& p);

// Reduced scattering kernel for t = 0 (both deltas fire at self-paired nu):
//   F = N (delta_{nu,nu'} + delta_{nu,-nu'}) - 2.
double reduced_kernel(int nu, int nu_prime, int n_sites);

// Residuals of the two coupled-channel equations evaluated on a solved
// state (relative to G * max amplitude); both vanish for exact eigenstates.
struct ChannelResiduals {
  double p_equation = 0;  // (E - E^{(p,i)}) p = (4G x_b/N) sum_mu Lambda e_mu
  double e_equation = 0;  // (E - E^{(ex)}) e = (G/N) sum_{i,nu} x_b Lambda p
};
ChannelResiduals channel_residuals(const TwoPolaritonState& st, const ModelParams& p);

// Residual of the reduced (t = 0) equation on a solved state.
double reduced_equation_residual(const TwoPolaritonState& st, const ModelParams& p);

// Round trip (A,B,C) -> (p, e) -> (A,B,C); returns the max abs deviation.
double basis_roundtrip_error(const TwoPolaritonState& st, const ModelParams& p);

}  // namespace kinpol
