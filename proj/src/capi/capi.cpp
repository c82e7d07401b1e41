#include "kinpol.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "core/bare_exciton.hpp"
#include "core/constants.hpp"
#include "core/dispersion.hpp"
#include "core/exact2p.hpp"
#include "core/oracle.hpp"
#include "core/params.hpp"
#include "core/special.hpp"
#include "core/sweeps.hpp"
#include "core/wavepacket.hpp"

using namespace kinpol;

namespace {

thread_local std::string g_last_error;

kp_status fail(kp_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Every entry point funnels through this: exceptions become status codes.
template <typename Fn>
kp_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::out_of_range& e) {
    return fail(KP_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::domain_error& e) {
    return fail(KP_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    if (std::strstr(e.what(), "budget")) return fail(KP_ERR_TOO_LARGE, e.what());
    return fail(KP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KP_ERR_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(KP_ERR_INTERNAL, e.what());
  }
}

PhysicalConfig to_core(const kp_config& c) {
  PhysicalConfig out;
  out.n_sites = c.n_sites;
  out.lattice_constant = c.lattice_constant_m;
  out.fiber_radius = c.fiber_radius_m;
  out.transition_freq = c.transition_freq_hz;
  out.dipole = c.dipole_au;
  if (c.has_detuning) out.detuning_target = c.detuning_hz;
  if (c.has_coupling_override) out.coupling_override = c.coupling_g_hz;
  if (c.has_hopping) out.hopping = c.hopping_t_hz;
  return out;
}

}  // namespace

struct kp_model {
  ModelParams params;
};

struct kp_spectrum {
  SpectrumK0 sp;
};

struct kp_oracle {
  OracleResult result;
};

struct kp_merit_rows {
  std::vector<MeritRow> rows;
  double e0 = 0;
};

struct kp_gap_rows {
  std::vector<GapScanRow> rows;
  double e0 = 0;
};

extern "C" {

const char* kp_status_name(kp_status s) {
  switch (s) {
    case KP_OK: return "ok";
    case KP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KP_ERR_DOMAIN: return "domain error";
    case KP_ERR_OUT_OF_RANGE: return "out of range";
    case KP_ERR_TOO_LARGE: return "too large";
    case KP_ERR_INTERNAL: return "internal error";
  }
  return "?";
}

const char* kp_last_error(void) { return g_last_error.c_str(); }

const char* kp_version(void) { return "0.1.0"; }

void kp_config_defaults(kp_config* cfg) {
  *cfg = kp_config{};
  cfg->n_sites = 40;
  cfg->lattice_constant_m = 5.32e-6;
  cfg->fiber_radius_m = 0.299e-6;
  cfg->transition_freq_hz = 384e12;
  cfg->dipole_au = 4.22;
}

kp_status kp_config_retune_radius(kp_config* cfg, double detuning_hz) {
  return guarded([&] {
    const PhysicalConfig rt = retune_radius(to_core(*cfg), detuning_hz);
    cfg->fiber_radius_m = rt.fiber_radius;
    cfg->has_detuning = 1;
    cfg->detuning_hz = detuning_hz;
    return KP_OK;
  });
}

double kp_bessel_j0_first_zero(void) { return bessel_j0_first_zero(); }

kp_status kp_model_create(const kp_config* cfg, kp_model** out) {
  return guarded([&] {
    if (!cfg || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
    *out = new kp_model{derive_params(to_core(*cfg))};
    return KP_OK;
  });
}

void kp_model_destroy(kp_model* m) { delete m; }

kp_status kp_model_values_get(const kp_model* m, kp_model_values* out) {
  if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  const ModelParams& p = m->params;
  out->n_sites = p.n_sites;
  out->lattice_constant_m = p.lattice_constant;
  out->e0_rad_s = p.e0;
  out->q_perp_per_m = p.q_perp;
  out->mode_volume_m3 = p.mode_volume;
  out->g_rad_s = p.g;
  out->big_g_rad_s = p.big_g;
  out->t_rad_s = p.t;
  out->delta_rad_s = p.delta;
  out->k_sc_per_m = p.k_sc;
  return KP_OK;
}

kp_status kp_photon_energy(const kp_model* m, double k, double* out) {
  if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  *out = photon_energy(k, m->params);
  return KP_OK;
}

kp_status kp_exciton_energy(const kp_model* m, double k, double* out) {
  if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  *out = exciton_energy(k, m->params);
  return KP_OK;
}

kp_status kp_polariton_energies(const kp_model* m, double k, double* lower, double* upper) {
  if (!m || !lower || !upper) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  auto [lo, hi] = polariton_energies(k, m->params);
  *lower = lo;
  *upper = hi;
  return KP_OK;
}

kp_status kp_band_edges_get(const kp_model* m, kp_band_edges* out) {
  if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  const BandEdges e = band_edges(m->params);
  out->ll_top_rad_s = e.ll_top;
  out->lu_bottom_rad_s = e.lu_bottom;
  out->uu_bottom_rad_s = e.uu_bottom;
  out->gap_rad_s = e.gap;
  return KP_OK;
}

kp_status kp_k_grid(const kp_model* m, double* out) {
  if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  const KGrid grid(m->params.n_sites, m->params.lattice_constant);
  for (size_t i = 0; i < grid.values.size(); ++i) out[i] = grid.values[i];
  return KP_OK;
}

kp_status kp_kappa_grid(const kp_model* m, double* out) {
  if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  const KappaGrid grid(m->params.n_sites, m->params.lattice_constant);
  for (size_t i = 0; i < grid.values.size(); ++i) out[i] = grid.values[i];
  return KP_OK;
}

kp_status kp_relative_sites(const kp_model* m, int* out) {
  if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  const auto rel = relative_sites(m->params.n_sites);
  for (size_t i = 0; i < rel.size(); ++i) out[i] = rel[i];
  return KP_OK;
}

kp_status kp_spectrum_solve(const kp_model* m, kp_spectrum** out) {
  return guarded([&] {
    if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
    *out = new kp_spectrum{solve_spectrum(m->params)};
    return KP_OK;
  });
}

void kp_spectrum_destroy(kp_spectrum* s) { delete s; }

int kp_spectrum_state_count(const kp_spectrum* s) {
  return s ? static_cast<int>(s->sp.states.size()) : 0;
}

int kp_spectrum_antisym_count(const kp_spectrum* s) {
  return s ? static_cast<int>(s->sp.antisym_offsets.size()) : 0;
}

int kp_spectrum_unresolved_intervals(const kp_spectrum* s) {
  return s ? s->sp.unresolved_intervals : 0;
}

namespace {

kp_status check_state_index(const kp_spectrum* s, int index) {
  if (!s) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  if (index < 0 || index >= static_cast<int>(s->sp.states.size()))
    return fail(KP_ERR_OUT_OF_RANGE, "state index");
  return KP_OK;
}

}  // namespace

kp_status kp_spectrum_state_info(const kp_spectrum* s, int index, kp_state_info* out) {
  const kp_status st = check_state_index(s, index);
  if (st != KP_OK) return st;
  if (!out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  const TwoPolaritonState& x = s->sp.states[index];
  out->rho = x.rho;
  out->band = static_cast<int>(x.band);
  out->root_status = static_cast<int>(x.status);
  out->is_bound_gap_state = x.bound_gap_state ? 1 : 0;
  out->energy_offset_rad_s = x.energy_offset;
  out->energy_rad_s = 2.0 * s->sp.params.e0 + x.energy_offset;
  out->k_eff_per_m = x.k_eff;
  out->merit = x.merit;
  out->merit_scaled = x.merit_scaled;
  return KP_OK;
}

kp_status kp_spectrum_state_momentum(const kp_spectrum* s, int index, double* a, double* b,
                                     double* c) {
  const kp_status st = check_state_index(s, index);
  if (st != KP_OK) return st;
  const TwoPolaritonState& x = s->sp.states[index];
  for (size_t i = 0; i < x.a_k.size(); ++i) {
    if (a) a[i] = x.a_k[i];
    if (b) b[i] = x.b_k[i];
    if (c) c[i] = x.c_k[i];
  }
  return KP_OK;
}

kp_status kp_spectrum_state_real(const kp_spectrum* s, int index, double* a, double* b, double* c) {
  const kp_status st = check_state_index(s, index);
  if (st != KP_OK) return st;
  const TwoPolaritonState& x = s->sp.states[index];
  for (size_t i = 0; i < x.a_n.size(); ++i) {
    if (a) a[i] = x.a_n[i];
    if (b) b[i] = x.b_n[i];
    if (c) c[i] = x.c_n[i];
  }
  return KP_OK;
}

kp_status kp_spectrum_antisym_level(const kp_spectrum* s, int index, double* energy_rad_s) {
  if (!s || !energy_rad_s) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  if (index < 0 || index >= static_cast<int>(s->sp.antisym_offsets.size()))
    return fail(KP_ERR_OUT_OF_RANGE, "antisym index");
  *energy_rad_s = 2.0 * s->sp.params.e0 + s->sp.antisym_offsets[index];
  return KP_OK;
}

kp_status kp_spectrum_find(const kp_spectrum* s, kp_band_class band, int rho, int* index) {
  if (!s || !index) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  for (size_t i = 0; i < s->sp.states.size(); ++i)
    if (static_cast<int>(s->sp.states[i].band) == static_cast<int>(band) &&
        s->sp.states[i].rho == rho) {
      *index = static_cast<int>(i);
      return KP_OK;
    }
  return fail(KP_ERR_OUT_OF_RANGE, "no such state");
}

kp_status kp_bare_energy(const kp_model* m, double mu, double* out) {
  return guarded([&] {
    if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
    *out = bare_energy(mu, m->params);
    return KP_OK;
  });
}

kp_status kp_bare_amplitude(const kp_model* m, int n, double mu, double* out) {
  return guarded([&] {
    if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
    *out = bare_amplitude(n, mu, m->params.n_sites);
    return KP_OK;
  });
}

kp_status kp_bare_amplitude_momentum(const kp_model* m, int nu, double mu, double* out) {
  return guarded([&] {
    if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
    *out = bare_amplitude_momentum(nu, mu, m->params.n_sites);
    return KP_OK;
  });
}

kp_status kp_ab_polaritons(const kp_model* m, double k, kp_ab_info* out) {
  if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  const auto e = ab_energy_offsets(k, m->params);
  const auto x = ab_mixing(k, m->params);
  out->e_lower_rad_s = 2.0 * m->params.e0 + e.lower;
  out->e_upper_rad_s = 2.0 * m->params.e0 + e.upper;
  out->x_alpha_lower = x.alpha_lower;
  out->x_beta_lower = x.beta_lower;
  out->x_alpha_upper = x.alpha_upper;
  out->x_beta_upper = x.beta_upper;
  return KP_OK;
}

kp_status kp_lambda_kernel(const kp_model* m, int nu, double mu, double* out) {
  return guarded([&] {
    if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
    *out = lambda_kernel(nu, mu, m->params.n_sites);
    return KP_OK;
  });
}

kp_status kp_state_a0(const kp_spectrum* s, int index, kp_a0_values* out) {
  return guarded([&] {
    const kp_status st = check_state_index(s, index);
    if (st != KP_OK) return st;
    if (!out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
    const TwoPolaritonState& x = s->sp.states[index];
    const int n = s->sp.params.n_sites;
    out->direct = x.a_n[n / 2 - 1];
    out->reconstructed = reconstruct_a0(x, s->sp.params);
    out->approximate = (x.band == BandClass::LLBand && x.rho <= n / 2)
                           ? approx_a0(x, s->sp.params)
                           : 0.0;
    return KP_OK;
  });
}

kp_status kp_state_e_mu(const kp_spectrum* s, int index, double* out) {
  return guarded([&] {
    const kp_status st = check_state_index(s, index);
    if (st != KP_OK) return st;
    if (!out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
    const auto e = extract_e_mu(s->sp.states[index].c_n, s->sp.params.n_sites);
    for (size_t i = 0; i < e.size(); ++i) out[i] = e[i];
    return KP_OK;
  });
}

kp_status kp_oracle_solve(const kp_model* m, kp_oracle** out) {
  return guarded([&] {
    if (!m || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
    *out = new kp_oracle{diagonalize(m->params)};
    return KP_OK;
  });
}

void kp_oracle_destroy(kp_oracle* o) { delete o; }

int kp_oracle_dimension(const kp_oracle* o) {
  return o ? o->result.basis.dimension() : 0;
}

kp_status kp_oracle_level(const kp_oracle* o, int index, double* energy_rad_s, int* k_index,
                          double* merit) {
  if (!o) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  if (index < 0 || index >= static_cast<int>(o->result.energies.size()))
    return fail(KP_ERR_OUT_OF_RANGE, "level index");
  if (energy_rad_s)
    *energy_rad_s = 2.0 * o->result.params.e0 + o->result.energies[index];
  if (k_index) *k_index = o->result.k_index[index];
  if (merit) *merit = o->result.merit[index];
  return KP_OK;
}

kp_status kp_oracle_k0_energies(const kp_oracle* o, double* out, int* count_inout) {
  if (!o || !count_inout) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  const auto k0 = k0_energies(o->result);
  const int n = static_cast<int>(k0.size());
  if (out) {
    if (*count_inout < n) return fail(KP_ERR_OUT_OF_RANGE, "buffer too small");
    for (int i = 0; i < n; ++i) out[i] = 2.0 * o->result.params.e0 + k0[i];
  }
  *count_inout = n;
  return KP_OK;
}

kp_status kp_oracle_merit_vs_k(const kp_oracle* o, int rho, int* k_index, double* energy_rad_s,
                               double* merit, int* ambiguous) {
  return guarded([&] {
    if (!o) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
    if (rho < 1) return fail(KP_ERR_INVALID_ARGUMENT, "rho must be >= 1");
    const MeritVsK res = merit_vs_k(o->result, rho);
    for (size_t i = 0; i < res.k_index.size(); ++i) {
      if (k_index) k_index[i] = res.k_index[i];
      if (energy_rad_s)
        energy_rad_s[i] = 2.0 * o->result.params.e0 + res.energy_offset[i];
      if (merit) merit[i] = res.merit[i];
      if (ambiguous) ambiguous[i] = res.ambiguous[i];
    }
    return KP_OK;
  });
}

kp_status kp_merit_sweep(const kp_config* base, kp_sweep_axis axis, const double* values,
                         int n_values, int jobs, kp_merit_rows** out) {
  return guarded([&] {
    if (!base || !values || !out || n_values < 1)
      return fail(KP_ERR_INVALID_ARGUMENT, "bad sweep arguments");
    const std::vector<double> vals(values, values + n_values);
    const SweepAxis ax =
        axis == KP_SWEEP_LATTICE_CONSTANT ? SweepAxis::LatticeConstant : SweepAxis::Detuning;
    const double e0 = 6.283185307179586 * base->transition_freq_hz;
    *out = new kp_merit_rows{merit_sweep(to_core(*base), ax, vals, jobs), e0};
    return KP_OK;
  });
}

void kp_merit_rows_destroy(kp_merit_rows* r) { delete r; }

int kp_merit_rows_count(const kp_merit_rows* r) {
  return r ? static_cast<int>(r->rows.size()) : 0;
}

kp_status kp_merit_row(const kp_merit_rows* r, int index, double* axis_value, int* rho,
                       double* energy_rad_s, double* merit) {
  if (!r) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  if (index < 0 || index >= static_cast<int>(r->rows.size()))
    return fail(KP_ERR_OUT_OF_RANGE, "row index");
  const MeritRow& row = r->rows[index];
  if (axis_value) *axis_value = row.axis_value;
  if (rho) *rho = row.rho;
  if (energy_rad_s) *energy_rad_s = 2.0 * r->e0 + row.energy_offset;
  if (merit) *merit = row.merit;
  return KP_OK;
}

kp_status kp_gap_scan(const kp_config* base, double a_min_m, double a_max_m, int steps, int jobs,
                      kp_gap_rows** out) {
  return guarded([&] {
    if (!base || !out) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
    const double e0 = 6.283185307179586 * base->transition_freq_hz;
    *out = new kp_gap_rows{gap_scan(to_core(*base), a_min_m, a_max_m, steps, jobs), e0};
    return KP_OK;
  });
}

void kp_gap_rows_destroy(kp_gap_rows* r) { delete r; }

int kp_gap_rows_count(const kp_gap_rows* r) {
  return r ? static_cast<int>(r->rows.size()) : 0;
}

kp_status kp_gap_row(const kp_gap_rows* r, int index, double* lattice_constant_m, double* gap_rad_s,
                     int* has_state, double* state_energy_rad_s, double* penetration_rad_s,
                     double* merit) {
  if (!r) return fail(KP_ERR_INVALID_ARGUMENT, "null pointer");
  if (index < 0 || index >= static_cast<int>(r->rows.size()))
    return fail(KP_ERR_OUT_OF_RANGE, "row index");
  const GapScanRow& row = r->rows[index];
  if (lattice_constant_m) *lattice_constant_m = row.lattice_constant;
  if (gap_rad_s) *gap_rad_s = row.gap;
  if (has_state) *has_state = row.has_gap_state ? 1 : 0;
  if (state_energy_rad_s) *state_energy_rad_s = 2.0 * r->e0 + row.state_energy_offset;
  if (penetration_rad_s) *penetration_rad_s = row.penetration;
  if (merit) *merit = row.merit;
  return KP_OK;
}

}  // extern "C"
