#pragma once

#include <string>
#include <vector>

#include "core/dispersion.hpp"
#include "core/grids.hpp"
#include "core/params.hpp"

namespace kinpol {

enum class BandClass { LLBand, Gap, LUBand, UUBand, BelowBand };

const char* band_class_name(BandClass c);

enum class RootStatus { Bisected, PolePinned, Unresolved };

// One K=0 two-polariton eigenstate.  Energies are carried as offsets from
// 2E0; amplitudes are real in this sector and sign-fixed so A(k=0) > 0.
struct TwoPolaritonState {
  int rho = 0;                    // 1-based index by energy within its band
  double energy_offset = 0;       // E - 2E0, rad/s
  BandClass band = BandClass::LLBand;
  RootStatus status = RootStatus::Bisected;
  bool bound_gap_state = false;   // localized bipolariton detector result
  std::vector<double> a_k, b_k, c_k;  // per k_nu, KGrid order
  std::vector<double> a_n, b_n, c_n;  // per n in (-N/2, N/2]
  double k_eff = 0;               // 1/m; meaningful for LL-band states
  double merit = 0;               // Delta A
  double merit_scaled = 0;        // Delta A / photon weight at k_eff (LL only)
};

struct SpectrumK0 {
  ModelParams params;
  KGrid grid;
  std::vector<int> rel_sites;
  BandEdges edges;
  std::vector<TwoPolaritonState> states;     // ascending energy
  std::vector<double> antisym_offsets;       // E_p(k)+E_e(k) - 2E0, k pairs
  int unresolved_intervals = 0;
};

// Secular function F(eps) = sum_nu phi(eps,k_nu)/Delta(eps,k_nu), poles at the
// non-interacting two-polariton energies, evaluated with compensated
// summation.  near_pole flags |eps - pole| < 1e-6 G (the value is still
// returned; callers bracketing a root must stay clear).
struct SecularValue {
  double value = 0;
  bool near_pole = false;
};

class SecularFunction {
 public:
  explicit SecularFunction(const ModelParams& p);

  SecularValue operator()(double eps) const;
  double raw(double eps) const;  // no pole-proximity check

  // Distinct pole energies (offsets), ascending, with per-pole (nu, branch)
  // provenance of one representative and total residue.
  struct Pole {
    double eps = 0;
    int nu = 0;       // representative |nu|
    int branch = 0;   // 0 = LL, 1 = LU, 2 = UU
    double residue = 0;  // includes +-k multiplicity
  };
  const std::vector<Pole>& poles() const { return poles_; }
  double min_pole_distance(double eps) const;

  // F(eps) with the pole term at poles()[index] removed (its k partners'
  // regular parts kept), for resolving roots that cling to a pole.
  double without_pole(double eps, int pole_index) const;

  const KGrid& grid() const { return grid_; }

 private:
  ModelParams p_;
  KGrid grid_;
  std::vector<double> ep_, ee_, el_, eu_;  // offsets per grid point
  std::vector<Pole> poles_;
};

// Full K=0 solution: bracket one root of F between consecutive distinct
// poles, bisect to 1e-13 relative in offset coordinates, fall back to the
// residue correction E = P - r/F_rest(P) when the sign change is numerically
// invisible, then build amplitudes and observables.
SpectrumK0 solve_spectrum(const ModelParams& p);

// Eq.(9) amplitudes at a root (offset energy), normalized and sign-fixed.
struct Amplitudes {
  std::vector<double> a, b, c;
};
Amplitudes amplitudes_at(double eps, const ModelParams& p);

// Real-space transform X(n) = (1/sqrt N) sum_nu X(k_nu) e^{i k_nu a n} of a
// K=0 (even, real) amplitude set; output ordered like relative_sites(N).
std::vector<double> to_real_space(const std::vector<double>& xk, const KGrid& grid);

// Effective wave vector of the rho-th LL-band state (rho = 1..N/2).
double k_eff(int rho, int n_sites, double lattice_constant);

// Bunching figure of merit of a real-space photon-pair amplitude.
double bunching_merit(const std::vector<double>& a_n, const std::vector<int>& rel_sites);

// Detected bound bipolariton gap states (subset of `states`).
std::vector<TwoPolaritonState> gap_states(const SpectrumK0& spectrum);

// Residual of the three coupled equations applied to a state, relative to
// the largest energy scale on the grid.
double coupled_equation_residual(const TwoPolaritonState& st, const SpectrumK0& sp);

}  // namespace kinpol
