#pragma once

#include <complex>
#include <vector>

#include "core/dense_eig.hpp"
#include "core/exact2p.hpp"
#include "core/grids.hpp"
#include "core/params.hpp"

namespace kinpol {

// Dense exact diagonalization of the full two-excitation sector:
// photon pairs |q1 <= q2>, photon-exciton |q; s>, exciton pairs |{s1 < s2}>.
// The Hamiltonian is built with the 2E0 carrier subtracted, so eigenvalues
// come out directly in offset coordinates.

struct TwoExcitationBasis {
  int n_sites = 0;
  KGrid grid;
  int pp_count = 0, pe_count = 0, xx_count = 0;

  explicit TwoExcitationBasis(int n, double a);

  int dimension() const { return pp_count + pe_count + xx_count; }
  int pp_index(int i, int j) const;           // grid indices, unordered
  int pe_index(int q, int s) const;
  int xx_index(int s1, int s2) const;         // sites, unordered
  std::pair<int, int> pp_pair(int idx) const;
  std::pair<int, int> pe_pair(int idx) const;
  std::pair<int, int> xx_pair(int idx) const;
};

struct OracleResult {
  ModelParams params;
  TwoExcitationBasis basis;
  std::vector<double> energies;          // offsets from 2E0, ascending
  std::vector<cplx> vectors;             // column-major, dimension^2
  std::vector<int> k_index;              // K = 2 pi m / (N a)
  std::vector<char> k_resolved;          // 0 when the T eigenphase is ambiguous
  std::vector<double> merit;             // Delta A per state (photon-pair block)
  double trace = 0;                      // of the offset Hamiltonian
};

// Column-major Hermitian matrix of Eq. (1) in the two-excitation sector,
// offset by 2E0.  Throws when 2 N^2 exceeds the dense budget (N > 64).
std::vector<cplx> build_hamiltonian(const ModelParams& p, const TwoExcitationBasis& basis);

// Translation by one lattice site applied to a state vector, with the phase
// convention <psi_K| T |psi_K> = e^{+i K a}.
std::vector<cplx> translate(const TwoExcitationBasis& basis, const std::vector<cplx>& v);

// Full eigensystem with momentum labels; near-degenerate clusters are
// rotated into the translation eigenbasis first.
OracleResult diagonalize(const ModelParams& p);

// K=0 sector energies (ascending offsets).
std::vector<double> k0_energies(const OracleResult& r);

// Maps a K=0 eigenvector back to (A(k), B(k), C(k)), phase-aligned so that
// A(k=0) is real and positive.  Index refers to the eigenvalue ordering.
struct K0Amplitudes {
  std::vector<double> a, b, c;
};
K0Amplitudes extract_k0_amplitudes(const OracleResult& r, int state_index);

// Photon-pair bunching merit of any eigenstate, computed from the
// relative-momentum amplitude at the state's total momentum.
double oracle_merit(const OracleResult& r, int state_index);

// Delta A as a function of K for the state connected to the rho-th LL-band
// K=0 state (energy order within the band window).  `ambiguous` flags
// sectors where the LL window held fewer than rho states.
struct MeritVsK {
  std::vector<int> k_index;
  std::vector<double> energy_offset;
  std::vector<double> merit;
  std::vector<char> ambiguous;
};
MeritVsK merit_vs_k(const OracleResult& r, int rho);

}  // namespace kinpol
