#include "core/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace kinpol {

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  const int n_threads = std::min(jobs, count);
  workers.reserve(n_threads);
  for (int w = 0; w < n_threads; ++w)
    workers.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : workers) t.join();
}

std::vector<MeritRow> merit_sweep(const PhysicalConfig& base, SweepAxis axis,
                                  const std::vector<double>& values, int jobs) {
  for (size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1]))
      throw std::invalid_argument("sweep values must be strictly increasing");

  std::vector<std::vector<MeritRow>> per_point(values.size());
  parallel_for(static_cast<int>(values.size()), jobs, [&](int i) {
    PhysicalConfig cfg = base;
    if (axis == SweepAxis::LatticeConstant)
      cfg.lattice_constant = values[i];
    else
      cfg = retune_radius(cfg, values[i]);
    const SpectrumK0 sp = solve_spectrum(derive_params(cfg));
    for (const TwoPolaritonState& st : sp.states) {
      if (st.band != BandClass::LLBand) continue;
      per_point[i].push_back({values[i], st.rho, st.energy_offset, st.merit});
    }
  });

  std::vector<MeritRow> out;
  for (const auto& rows : per_point) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

std::vector<GapScanRow> gap_scan(const PhysicalConfig& base, double a_min, double a_max,
                                 int steps, int jobs) {
  if (!(a_min < a_max)) throw std::invalid_argument("a_min must be below a_max");
  if (steps < 2) throw std::invalid_argument("need at least 2 steps");

  std::vector<GapScanRow> out(steps);
  parallel_for(steps, jobs, [&](int i) {
    PhysicalConfig cfg = base;
    cfg.lattice_constant = a_min + (a_max - a_min) * i / (steps - 1);
    const SpectrumK0 sp = solve_spectrum(derive_params(cfg));
    GapScanRow row;
    row.lattice_constant = cfg.lattice_constant;
    row.gap = sp.edges.gap;
    for (const TwoPolaritonState& st : sp.states) {
      if (!st.bound_gap_state) continue;
      row.has_gap_state = true;
      row.state_energy_offset = st.energy_offset;
      row.penetration = sp.edges.lu_bottom_off - st.energy_offset;
      row.merit = st.merit;
      break;
    }
    out[i] = row;
  });
  return out;
}

}  // namespace kinpol
