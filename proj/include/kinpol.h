/* kinpol - two-polariton spectra and photon correlations for a 1D atom
 * chain strongly coupled to the photons of a hollow-core fiber.
 *
 * C interface of the shared library.  All handles are opaque; functions
 * return kp_status and report outputs through pointers.  Energies are
 * angular frequencies (rad/s) unless a name says otherwise; the *_offset
 * fields subtract the 2E0 carrier, which is how the solver works
 * internally and how results stay accurate at the GHz scale.
 */
#ifndef KINPOL_H
#define KINPOL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kp_status {
  KP_OK = 0,
  KP_ERR_INVALID_ARGUMENT = 1, /* bad input value or violated precondition */
  KP_ERR_DOMAIN = 2,           /* physically inadmissible request */
  KP_ERR_OUT_OF_RANGE = 3,     /* index outside a collection */
  KP_ERR_TOO_LARGE = 4,        /* dense-solver budget exceeded */
  KP_ERR_INTERNAL = 5
} kp_status;

const char* kp_status_name(kp_status s);
/* Message of the most recent failure on this thread. */
const char* kp_last_error(void);
const char* kp_version(void);

/* ----- configuration ---------------------------------------------------- */

typedef struct kp_config {
  int n_sites;                  /* even, >= 4 */
  double lattice_constant_m;
  double fiber_radius_m;
  double transition_freq_hz;    /* ordinary frequency */
  double dipole_au;             /* transition dipole, atomic units */
  int has_detuning;             /* when set, the radius is retuned */
  double detuning_hz;
  int has_coupling_override;    /* replaces the derived collective G */
  double coupling_g_hz;
  int has_hopping;
  double hopping_t_hz;
} kp_config;

/* Rb D2 scenario: N = 40, a = 5.32 um, R = 0.299 um, f0 = 384 THz,
 * d = 4.22 a.u. */
void kp_config_defaults(kp_config* cfg);

/* Retunes fiber_radius_m so the derived detuning equals detuning_hz. */
kp_status kp_config_retune_radius(kp_config* cfg, double detuning_hz);

/* ----- model parameters -------------------------------------------------- */

typedef struct kp_model kp_model;

typedef struct kp_model_values {
  int n_sites;
  double lattice_constant_m;
  double e0_rad_s;
  double q_perp_per_m;
  double mode_volume_m3;
  double g_rad_s;        /* single-atom coupling */
  double big_g_rad_s;    /* collective coupling g sqrt(N) */
  double t_rad_s;        /* exciton hopping */
  double delta_rad_s;    /* E_p(0) - E0 */
  double k_sc_per_m;     /* strong-coupling wave vector */
} kp_model_values;

kp_status kp_model_create(const kp_config* cfg, kp_model** out);
void kp_model_destroy(kp_model* m);
kp_status kp_model_values_get(const kp_model* m, kp_model_values* out);

/* First zero of the Bessel function J0 (the transverse quantization). */
double kp_bessel_j0_first_zero(void);

/* ----- dispersion curves ------------------------------------------------- */

kp_status kp_photon_energy(const kp_model* m, double k, double* out);
kp_status kp_exciton_energy(const kp_model* m, double k, double* out);
kp_status kp_polariton_energies(const kp_model* m, double k, double* lower, double* upper);

typedef struct kp_band_edges {
  double ll_top_rad_s;      /* 2 E_L(pi/a) */
  double lu_bottom_rad_s;   /* E_L(0) + E_U(0) */
  double uu_bottom_rad_s;   /* 2 E_U(0) */
  double gap_rad_s;         /* lu_bottom - ll_top */
} kp_band_edges;

kp_status kp_band_edges_get(const kp_model* m, kp_band_edges* out);

/* k grid values k_nu, length n_sites (caller allocates). */
kp_status kp_k_grid(const kp_model* m, double* out);
/* half-integer grid kappa_mu, length n_sites. */
kp_status kp_kappa_grid(const kp_model* m, double* out);
/* relative separations n in (-N/2, N/2], length n_sites. */
kp_status kp_relative_sites(const kp_model* m, int* out);

/* ----- exact K=0 two-polariton spectrum ---------------------------------- */

typedef struct kp_spectrum kp_spectrum;

typedef enum kp_band_class {
  KP_BAND_LL = 0,
  KP_BAND_GAP = 1,
  KP_BAND_LU = 2,
  KP_BAND_UU = 3,
  KP_BAND_BELOW = 4
} kp_band_class;

typedef struct kp_state_info {
  int rho;                    /* 1-based index by energy within its band */
  int band;                   /* kp_band_class */
  int root_status;            /* 0 bisected, 1 pole-pinned, 2 unresolved */
  int is_bound_gap_state;
  double energy_rad_s;
  double energy_offset_rad_s; /* E - 2E0 */
  double k_eff_per_m;         /* NaN outside the LL band */
  double merit;               /* Delta A */
  double merit_scaled;        /* Delta A / photon weight; NaN outside LL */
} kp_state_info;

kp_status kp_spectrum_solve(const kp_model* m, kp_spectrum** out);
void kp_spectrum_destroy(kp_spectrum* s);
int kp_spectrum_state_count(const kp_spectrum* s);
int kp_spectrum_antisym_count(const kp_spectrum* s);
int kp_spectrum_unresolved_intervals(const kp_spectrum* s);
kp_status kp_spectrum_state_info(const kp_spectrum* s, int index, kp_state_info* out);
/* Momentum-space amplitudes, each of length n_sites in k-grid order. */
kp_status kp_spectrum_state_momentum(const kp_spectrum* s, int index, double* a, double* b,
                                     double* c);
/* Real-space amplitudes over the relative separations. */
kp_status kp_spectrum_state_real(const kp_spectrum* s, int index, double* a, double* b, double* c);
kp_status kp_spectrum_antisym_level(const kp_spectrum* s, int index, double* energy_rad_s);
/* Index of the rho-th state of a band; KP_ERR_OUT_OF_RANGE when absent. */
kp_status kp_spectrum_find(const kp_spectrum* s, kp_band_class band, int rho, int* index);

/* ----- bare-exciton closed form ------------------------------------------ */

kp_status kp_bare_energy(const kp_model* m, double mu, double* out);               /* absolute */
kp_status kp_bare_amplitude(const kp_model* m, int n, double mu, double* out);     /* g_n(mu) */
kp_status kp_bare_amplitude_momentum(const kp_model* m, int nu, double mu, double* out);

/* ----- wave-packet (coupled-channel) layer -------------------------------- */

typedef struct kp_ab_info {
  double e_lower_rad_s, e_upper_rad_s;   /* E^{(p,L)}, E^{(p,U)} absolute */
  double x_alpha_lower, x_beta_lower;    /* signed mixing amplitudes */
  double x_alpha_upper, x_beta_upper;
} kp_ab_info;

kp_status kp_ab_polaritons(const kp_model* m, double k, kp_ab_info* out);
kp_status kp_lambda_kernel(const kp_model* m, int nu, double mu, double* out);

typedef struct kp_a0_values {
  double direct;        /* A(n=0) of the solved state */
  double reconstructed; /* through the AB scattering channels */
  double approximate;   /* exciton-like single-mu approximation */
} kp_a0_values;

kp_status kp_state_a0(const kp_spectrum* s, int index, kp_a0_values* out);
/* e_mu coordinates, length n_sites/2 (mu = 1/2, 3/2, ...). */
kp_status kp_state_e_mu(const kp_spectrum* s, int index, double* out);

/* ----- brute-force oracle ------------------------------------------------- */

typedef struct kp_oracle kp_oracle;

kp_status kp_oracle_solve(const kp_model* m, kp_oracle** out);
void kp_oracle_destroy(kp_oracle* o);
int kp_oracle_dimension(const kp_oracle* o);
kp_status kp_oracle_level(const kp_oracle* o, int index, double* energy_rad_s, int* k_index,
                          double* merit);
/* K=0 sector energies; count_inout carries capacity in, count out. */
kp_status kp_oracle_k0_energies(const kp_oracle* o, double* out, int* count_inout);
/* Delta A vs K for the state tracked from the rho-th K=0 LL-band state.
 * Arrays of length n_sites; ambiguous[i] set when tracking failed. */
kp_status kp_oracle_merit_vs_k(const kp_oracle* o, int rho, int* k_index, double* energy_rad_s,
                               double* merit, int* ambiguous);

/* ----- sweeps -------------------------------------------------------------- */

typedef struct kp_merit_rows kp_merit_rows;
typedef struct kp_gap_rows kp_gap_rows;

typedef enum kp_sweep_axis { KP_SWEEP_LATTICE_CONSTANT = 0, KP_SWEEP_DETUNING = 1 } kp_sweep_axis;

kp_status kp_merit_sweep(const kp_config* base, kp_sweep_axis axis, const double* values,
                         int n_values, int jobs, kp_merit_rows** out);
void kp_merit_rows_destroy(kp_merit_rows* r);
int kp_merit_rows_count(const kp_merit_rows* r);
kp_status kp_merit_row(const kp_merit_rows* r, int index, double* axis_value, int* rho,
                       double* energy_rad_s, double* merit);

kp_status kp_gap_scan(const kp_config* base, double a_min_m, double a_max_m, int steps, int jobs,
                      kp_gap_rows** out);
void kp_gap_rows_destroy(kp_gap_rows* r);
int kp_gap_rows_count(const kp_gap_rows* r);
kp_status kp_gap_row(const kp_gap_rows* r, int index, double* lattice_constant_m, double* gap_rad_s,
                     int* has_state, double* state_energy_rad_s, double* penetration_rad_s,
                     double* merit);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KINPOL_H */
