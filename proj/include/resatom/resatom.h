#ifndef RESATOM_H
#define RESATOM_H

/*
 * C interface to the resatom toolkit: two-level atom dynamics, the 4-spinor
 * alternative model, retarded dipole-dipole interaction, and the driven
 * interatomic potential law.
 *
 * Every function returns a resatom_status code; RESATOM_OK is 0. On failure
 * resatom_last_error_message() describes what went wrong (the message is
 * thread-local). Output parameters are written only on success. Complex
 * matrices cross the boundary as row-major arrays of resatom_complex,
 * length 4 (2x2) or 16 (4x4). Trajectories are opaque handles released with
 * resatom_trajectory_free.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum resatom_status {
  RESATOM_OK = 0,
  RESATOM_ERR_NULL = 1,     /* required pointer argument was NULL */
  RESATOM_ERR_INVALID = 2,  /* invalid argument (bad size, dt <= 0, non-finite input, ...) */
  RESATOM_ERR_DOMAIN = 3,   /* domain violation (gamma <= 0, lambda <= 0, ...) */
  RESATOM_ERR_SINGULAR = 4, /* evaluation at a singular point (zero separation) */
  RESATOM_ERR_POLE = 5,     /* literal driven-potential form too close to a tangent pole */
  RESATOM_ERR_INTERNAL = 6
} resatom_status;

const char* resatom_version(void);
const char* resatom_strerror(int status);
const char* resatom_last_error_message(void);

typedef struct resatom_complex {
  double re;
  double im;
} resatom_complex;

typedef struct resatom_vec3 {
  double x, y, z;
} resatom_vec3;

typedef struct resatom_cvec3 {
  resatom_complex x, y, z;
} resatom_cvec3;

/* ------------------------------------------------------------------ */
/* operator matrices and decompositions                               */
/* ------------------------------------------------------------------ */

typedef enum resatom_axis { RESATOM_AXIS_X = 0, RESATOM_AXIS_Y = 1, RESATOM_AXIS_Z = 2 } resatom_axis;

int resatom_pauli(int axis, resatom_complex out[4]);
int resatom_alpha(int axis, resatom_complex out[16]);
int resatom_beta1(resatom_complex out[16]);
int resatom_dirac_beta(resatom_complex out[16]);

/* n is 2 or 4; matrices are n*n entries. */
int resatom_matrix_exponential(int n, const resatom_complex* m, resatom_complex* out);
/* eigenvalues descending; eigenvectors[k*n + i] is component i of mode k. */
int resatom_hermitian_eigensystem(int n, const resatom_complex* m, double* eigenvalues,
                                  resatom_complex* eigenvectors);

/* ------------------------------------------------------------------ */
/* two-level atom                                                     */
/* ------------------------------------------------------------------ */

typedef struct resatom_two_level_atom {
  double mu;      /* transition dipole matrix element */
  double gamma;   /* transition halfwidth, > 0 */
  double omega_a; /* transition frequency */
  double rho1;    /* lower-level population density */
  double rho2;    /* upper-level population density */
  double xi;      /* polarizability */
} resatom_two_level_atom;

typedef struct resatom_drive_field {
  double amplitude; /* real envelope E0 >= 0 */
  resatom_vec3 polarization;
  double omega0; /* carrier frequency */
  resatom_vec3 kvec;
  double intensity; /* I0 >= 0 */
} resatom_drive_field;

typedef struct resatom_validity_report {
  double ratio;           /* mu E0 / (hbar Gamma) */
  int within_weak_field;  /* strict ratio < 1 */
} resatom_validity_report;

int resatom_check_weak_field(const resatom_two_level_atom* atom,
                             const resatom_drive_field* field, double hbar,
                             resatom_validity_report* out);

int resatom_rwa_hamiltonian(const resatom_two_level_atom* atom,
                            const resatom_drive_field* field, double hbar,
                            resatom_complex out[4]);

/* ------------------------------------------------------------------ */
/* propagation                                                        */
/* ------------------------------------------------------------------ */

typedef struct resatom_trajectory resatom_trajectory;

/*
 * Exact-exponential propagation under a constant Hermitian Hamiltonian.
 * The initial state is normalized on input; the trajectory starts at t = 0
 * and steps by dt up to duration.
 */
int resatom_propagate2(const resatom_complex h[4], const resatom_complex initial[2],
                       double duration, double dt, double hbar, resatom_trajectory** out);
int resatom_propagate4(const resatom_complex h[16], const resatom_complex initial[4],
                       double duration, double dt, double hbar, resatom_trajectory** out);

long long resatom_trajectory_length(const resatom_trajectory* traj);
int resatom_trajectory_components(const resatom_trajectory* traj);
/* populations must hold resatom_trajectory_components() doubles; any of the
 * output pointers may be NULL to skip that field. */
int resatom_trajectory_row(const resatom_trajectory* traj, long long index, double* t,
                           double* populations, double* norm);
int resatom_trajectory_state(const resatom_trajectory* traj, long long index,
                             resatom_complex* amplitudes);
void resatom_trajectory_free(resatom_trajectory* traj);

/* ------------------------------------------------------------------ */
/* 4-spinor model                                                     */
/* ------------------------------------------------------------------ */

typedef struct resatom_diraclike_params {
  resatom_vec3 p;      /* momentum */
  double omega;        /* frequency multiplying beta1 */
  double mu;           /* dipole element */
  resatom_vec3 efield; /* static real drive amplitude */
  double c;            /* speed-of-light constant, > 0 */
  double hbar;         /* > 0 */
} resatom_diraclike_params;

int resatom_diraclike_hamiltonian(const resatom_diraclike_params* params,
                                  resatom_complex out[16]);

/* eigenvalues descending; amplitudes[k*4 + i] is component i of mode k. */
int resatom_plane_wave_modes(const resatom_diraclike_params* params, double eigenvalues[4],
                             resatom_complex amplitudes[16]);

typedef struct resatom_parity_report {
  int alpha_x_is_polar;
  int alpha_y_is_polar;
  int alpha_z_is_polar;
  int sigma_has_compensator;
  double max_residual;
  double sigma_best_residual;
} resatom_parity_report;

int resatom_parity_audit(resatom_parity_report* out);

/* ------------------------------------------------------------------ */
/* dipole-dipole interaction                                          */
/* ------------------------------------------------------------------ */

typedef struct resatom_pair_geometry {
  resatom_vec3 rvec; /* separation, nonzero */
  double k;          /* scalar wavenumber */
  resatom_vec3 kvec; /* |kvec| must equal k */
} resatom_pair_geometry;

/* kvec = k * normalize(k_direction); with k = 0 any direction gives kvec = 0. */
int resatom_make_pair_geometry(const resatom_vec3* rvec, double k,
                               const resatom_vec3* k_direction, resatom_pair_geometry* out);

int resatom_induced_dipole(double xi, const resatom_cvec3* efield, resatom_cvec3* out);
int resatom_dipole_field(const resatom_vec3* d, const resatom_pair_geometry* geom,
                         resatom_cvec3* out);
int resatom_pair_energy(const resatom_vec3* d1, const resatom_vec3* d2,
                        const resatom_pair_geometry* geom, resatom_complex* out);
int resatom_averaged_pair_energy(double dmag, double r, double k, resatom_complex* out);
int resatom_averaged_pair_energy_printed(double dmag, double r, double k, double* out);
int resatom_phased_average(double dmag, const resatom_pair_geometry* geom, double* out);

typedef struct resatom_average_estimate {
  resatom_complex mean;
  double stderr_re;
  double stderr_im;
  long long n_samples;
  uint64_t seed;
  char algorithm[16]; /* generator identifier, e.g. "splitmix64" */
} resatom_average_estimate;

/* correlated != 0 draws one shared orientation per sample (the default
 * physical picture); 0 draws the two moments independently. */
int resatom_mc_orientation_average(double dmag, const resatom_pair_geometry* geom,
                                   long long n_samples, uint64_t seed, int correlated,
                                   resatom_average_estimate* out);

/* ------------------------------------------------------------------ */
/* driven interatomic potential                                       */
/* ------------------------------------------------------------------ */

typedef struct resatom_driven_pair_params {
  double mu;
  double intensity;
  double beta_pop; /* population inversion rho2 - rho1 */
  double gamma1;   /* > 0 */
  double gamma2;   /* > 0 */
  double delta1;
  double delta2;
} resatom_driven_pair_params;

typedef struct resatom_freq_coefficients {
  double a;
  double b;
} resatom_freq_coefficients;

int resatom_frequency_coefficients(const resatom_driven_pair_params* params,
                                   resatom_freq_coefficients* out);

typedef struct resatom_driven_evaluation {
  double value;
  double a;
  double b;
  double exponent_arg;
} resatom_driven_evaluation;

int resatom_driven_potential(const resatom_driven_pair_params* params,
                             const resatom_pair_geometry* geom, double* out);
int resatom_driven_potential_eval(const resatom_driven_pair_params* params,
                                  const resatom_pair_geometry* geom,
                                  resatom_driven_evaluation* out);
/* The literal printed form; fails with RESATOM_ERR_POLE near tangent poles. */
int resatom_driven_potential_naive(const resatom_driven_pair_params* params,
                                   const resatom_pair_geometry* geom, double pole_eps,
                                   double* out);

int resatom_attenuate(double i0, double k_medium, double r, double* out);

typedef struct resatom_exchange_report {
  double mean_exchange_range;
  int feasible;
  double k_required;
  double optical_threshold_per_cm;
} resatom_exchange_report;

int resatom_exchange_feasibility(double k_medium, double lambda, resatom_exchange_report* out);

typedef struct resatom_regime_report {
  resatom_validity_report weak_field;
  resatom_exchange_report exchange;
  double intensity_at_r;
} resatom_regime_report;

int resatom_assess_regime(const resatom_two_level_atom* atom, const resatom_drive_field* field,
                          double hbar, double k_medium, double lambda, double r,
                          resatom_regime_report* out);

/* ------------------------------------------------------------------ */
/* self audit                                                         */
/* ------------------------------------------------------------------ */

typedef struct resatom_audit_report {
  resatom_parity_report parity;
  int parity_pass;

  resatom_average_estimate mc;
  resatom_complex mc_expected;
  double mc_dev_sigmas_re;
  double mc_dev_sigmas_im;
  double mc_sigma_limit;
  int mc_pass;

  double agreement_max_rel_diff;
  double agreement_tol;
  long long agreement_points;
  int agreement_pass;

  int pass;
} resatom_audit_report;

int resatom_self_audit(double dmag, double r, double k, long long n_samples, uint64_t seed,
                       long long n_agreement, resatom_audit_report* out);

#ifdef __cplusplus
}
#endif

#endif /* RESATOM_H */
