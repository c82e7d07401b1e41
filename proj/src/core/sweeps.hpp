#pragma once

#include <functional>
#include <vector>

#include "core/exact2p.hpp"
#include "core/params.hpp"

namespace kinpol {

// Parameter sweeps are embarrassingly parallel: each point is an independent
// solve and results merge in input order, so output is schedule-invariant.

enum class SweepAxis { LatticeConstant, Detuning };

struct MeritRow {
  double axis_value = 0;   // a (m) or delta (Hz), as supplied
  int rho = 0;             // LL-band index
  double energy_offset = 0;
  double merit = 0;
};

struct GapScanRow {
  double lattice_constant = 0;
  double gap = 0;                   // Delta_LU, rad/s
  bool has_gap_state = false;
  double state_energy_offset = 0;   // valid when has_gap_state
  double penetration = 0;           // lu_bottom - E, rad/s
  double merit = 0;
};

// values must be strictly increasing and admissible; each point solves the
// K=0 spectrum and reports the LL-band states.
std::vector<MeritRow> merit_sweep(const PhysicalConfig& base, SweepAxis axis,
                                  const std::vector<double>& values, int jobs = 1);

std::vector<GapScanRow> gap_scan(const PhysicalConfig& base, double a_min, double a_max,
                                 int steps, int jobs = 1);

// Deterministic parallel map used by the sweeps: out[i] = fn(i).
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

}  // namespace kinpol
