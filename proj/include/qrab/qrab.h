/* qrab.h — C interface to the quantum Rabi ground-state solver.
 *
 * The library solves the quantum Rabi model ground state two ways — a
 * four-parameter polaron/antipolaron variational ansatz and numerically
 * exact diagonalization on the parity chain — and derives phase-space and
 * information-theoretic observables from the result: Wigner functions and
 * their negativity, spin probabilities, entanglement entropy, photon
 * statistics, and a nonclassical-state classification.
 *
 * All handles are opaque; every fallible call returns a qrab_status and
 * writes results through out-parameters. A human-readable message for the
 * most recent failure on the calling thread is available from
 * qrab_last_error(). Handles are immutable after creation and may be used
 * from multiple threads concurrently.
 *
 * Units: ħω = 1; energies are in units of the oscillator quantum.
 */

#ifndef QRAB_H
#define QRAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qrab_status {
    QRAB_OK = 0,
    QRAB_ERR_DOMAIN = 1,   /* invalid physical/mathematical input */
    QRAB_ERR_NUMERIC = 2,  /* a numerical procedure failed to converge */
    QRAB_ERR_CONFIG = 3,   /* grid or configuration invariant violated */
    QRAB_ERR_RESOURCE = 4, /* truncation or memory cap exceeded */
    QRAB_ERR_IO = 5,       /* file read/write failure */
    QRAB_ERR_INTERNAL = 6
} qrab_status;

const char* qrab_version(void);

/* Message for the most recent error on this thread ("" if none). */
const char* qrab_last_error(void);

/* ---- model ---------------------------------------------------------- */

typedef struct qrab_model qrab_model;

/* Absolute parameters (Δ, g). */
qrab_status qrab_model_create(double delta, double g, qrab_model** out);

/* Sweep parameterization: Δ = ratio, g = g_over_gc · g_c(Δ). */
qrab_status qrab_model_from_ratio(double ratio, double g_over_gc,
                                  qrab_model** out);

typedef enum qrab_model_field {
    QRAB_MODEL_DELTA = 0,
    QRAB_MODEL_G = 1,
    QRAB_MODEL_RATIO = 2,
    QRAB_MODEL_G_PRIME = 3,  /* √2·g */
    QRAB_MODEL_G_C0 = 4,     /* √Δ/2 */
    QRAB_MODEL_G_C = 5,      /* √(1 + √(1 + g_c0⁴)) */
    QRAB_MODEL_EPS0 = 6      /* −(g′² + 1)/2 */
} qrab_model_field;

qrab_status qrab_model_get(const qrab_model* model, qrab_model_field field,
                           double* out);

void qrab_model_free(qrab_model* model);

/* ---- variational ground state --------------------------------------- */

typedef struct qrab_solution qrab_solution;

typedef enum qrab_ansatz {
    QRAB_ANSATZ_FULL4 = 0,     /* {α, ξ, ζ_α, ζ_β} */
    QRAB_ANSATZ_EQ_DISP3 = 1,  /* ζ_α = ζ_β */
    QRAB_ANSATZ_POLARON1 = 2   /* α = 1, ξ = 1 */
} qrab_ansatz;

typedef struct qrab_solve_options {
    int ansatz;            /* qrab_ansatz */
    int compute_ed_error;  /* also run ED for the relative energy error */
    double ed_tol;         /* ED truncation energy tolerance */
    int has_warm_start;
    double warm_alpha, warm_xi, warm_zeta_alpha, warm_zeta_beta;
} qrab_solve_options;

void qrab_solve_options_init(qrab_solve_options* options);

qrab_status qrab_solve_ground(const qrab_model* model,
                              const qrab_solve_options* options,
                              qrab_solution** out);

typedef enum qrab_solution_field {
    QRAB_SOL_ENERGY = 0,
    QRAB_SOL_ALPHA = 1,
    QRAB_SOL_BETA = 2,
    QRAB_SOL_XI = 3,
    QRAB_SOL_ZETA_ALPHA = 4,
    QRAB_SOL_ZETA_BETA = 5,
    QRAB_SOL_D_ALPHA = 6,
    QRAB_SOL_D_BETA = 7,
    QRAB_SOL_GAMMA = 8,
    QRAB_SOL_ENERGY_ERROR = 9,   /* |E−E_ed|/|E_ed|; needs compute_ed_error */
    QRAB_SOL_ED_ENERGY = 10,     /* needs compute_ed_error */
    QRAB_SOL_MEAN_PHOTON_M = 11, /* (α²D_α² + β²D_β²)/2 */
    QRAB_SOL_DELTA_D = 12,       /* |D_α − D_β| */
    QRAB_SOL_P_UP = 13,
    QRAB_SOL_P_DOWN = 14,
    QRAB_SOL_ENTROPY = 15,       /* nats */
    QRAB_SOL_EVALUATIONS = 16,   /* optimizer diagnostics */
    QRAB_SOL_STAGNATION = 17     /* 1.0 if converged-with-warning */
} qrab_solution_field;

qrab_status qrab_solution_get(const qrab_solution* solution,
                              qrab_solution_field field, double* out);

/* Region code 0..3 = VS, SVS, SCS, CSWS. */
qrab_status qrab_solution_region(const qrab_solution* solution, int* out);
const char* qrab_region_name(int region);

/* Parity-resolved Fock populations of the ground state, populations[0..n_max].
 * truncation_warning (may be NULL) is set to 1 if the truncated tail mass
 * exceeds 1e-6. */
qrab_status qrab_solution_fock(const qrab_solution* solution, int n_max,
                               double* populations, int* truncation_warning);

void qrab_solution_free(qrab_solution* solution);

/* ---- exact diagonalization ------------------------------------------ */

typedef struct qrab_ed qrab_ed;

/* Converged even-parity ground state; truncation grows by doubling until
 * the energy moves by less than energy_tol. */
qrab_status qrab_ed_solve(const qrab_model* model, double energy_tol,
                          qrab_ed** out);

typedef enum qrab_ed_field {
    QRAB_ED_ENERGY = 0,
    QRAB_ED_MEAN_PHOTON = 1,
    QRAB_ED_P_UP = 2,
    QRAB_ED_P_DOWN = 3,
    QRAB_ED_ENTROPY = 4,
    QRAB_ED_N_MAX = 5,
    QRAB_ED_TAIL_MASS = 6
} qrab_ed_field;

qrab_status qrab_ed_get(const qrab_ed* ed, qrab_ed_field field, double* out);

/* Fock populations |⟨n|ψ⟩|², populations[0..n_max]; levels above the
 * converged truncation are zero. */
qrab_status qrab_ed_fock(const qrab_ed* ed, int n_max, double* populations);

void qrab_ed_free(qrab_ed* ed);

/* ---- Wigner functions ------------------------------------------------ */

typedef struct qrab_phase_grid {
    double x_min, x_max;
    double p_min, p_max;
    int nx, np;
} qrab_phase_grid;

/* Default grid for a solution: covers the displaced lobes and resolves the
 * interference fringes. nx/np are lower bounds on the resolution. */
qrab_status qrab_default_grid(const qrab_solution* solution, int nx, int np,
                              qrab_phase_grid* out);

typedef enum qrab_wigner_component {
    QRAB_W_PLUS_X = 0,
    QRAB_W_MINUS_X = 1,
    QRAB_W_TOTAL = 2,
    QRAB_W_EVEN = 3,
    QRAB_W_ODD = 4,
    QRAB_W_CROSS = 5,
    QRAB_W_ALIVE = 6,
    QRAB_W_DEAD = 7
} qrab_wigner_component;

typedef struct qrab_wigner qrab_wigner;

qrab_status qrab_wigner_eval(const qrab_solution* solution,
                             const qrab_phase_grid* grid, qrab_wigner** out);

/* Copy one component, row-major in p-then-x (buffer of nx·np doubles). */
qrab_status qrab_wigner_data(const qrab_wigner* wigner,
                             qrab_wigner_component component, double* out);

/* Write one component as CSV with the two-line grid header; the format
 * round-trips bit-exactly. */
qrab_status qrab_wigner_write_csv(const qrab_wigner* wigner,
                                  qrab_wigner_component component,
                                  const char* path);

void qrab_wigner_free(qrab_wigner* wigner);

/* δ = ∬(|W|−W) dx dp for one component, refined by grid doubling until the
 * change is below tol (tol <= 0 selects the default 1e-4). */
qrab_status qrab_negativity(const qrab_solution* solution,
                            qrab_wigner_component component, double tol,
                            double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QRAB_H */
