/* Photon-dressed donor-bridge-acceptor electron-transfer rates.
 *
 * Energies in eV, temperature in K, rates in 1/s. Every function returning
 * pmet_status leaves a description of the failure in pmet_last_error() (per
 * thread). Strings returned through char** are owned by the caller and must be
 * released with pmet_string_free. */
#ifndef PMET_PMET_H
#define PMET_PMET_H

#include <stddef.h>

#if defined(PMET_BUILDING_LIBRARY)
#define PMET_API __attribute__((visibility("default")))
#else
#define PMET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pmet_status {
    PMET_OK = 0,
    PMET_ERR_GENERIC = 1,
    PMET_ERR_CONFIG = 2,
    PMET_ERR_SINGULARITY = 3,
    PMET_ERR_NONCONVERGENCE = 4,
    PMET_ERR_INVALID_ARGUMENT = 5,
    PMET_ERR_IO = 6,
    PMET_ERR_VALIDATION = 7
} pmet_status;

typedef enum pmet_mode { PMET_MODE_RESONANT = 0, PMET_MODE_OFF_RESONANT = 1 } pmet_mode;

typedef enum pmet_pathway {
    PMET_PATHWAY_TOTAL = 0,
    PMET_PATHWAY_DIRECT = 1,
    PMET_PATHWAY_BRIDGE = 2
} pmet_pathway;

typedef struct pmet_system pmet_system;
typedef struct pmet_rate_result pmet_rate_result;
typedef struct pmet_sweep pmet_sweep;
typedef struct pmet_sweep_result pmet_sweep_result;

PMET_API const char* pmet_last_error(void);
PMET_API const char* pmet_version(void);
PMET_API void pmet_string_free(char* s);
PMET_API unsigned pmet_max_workers(void);

/* Writes text to path; NULL, "" or "-" means standard output. */
PMET_API pmet_status pmet_write_text(const char* path, const char* text);

/* ---- systems ---- */

PMET_API pmet_status pmet_system_from_json(const char* json, pmet_system** out);
PMET_API pmet_status pmet_system_from_file(const char* path, pmet_system** out);
PMET_API pmet_status pmet_system_to_json(const pmet_system* sys, char** out);
PMET_API pmet_mode pmet_system_mode(const pmet_system* sys);
PMET_API void pmet_system_free(pmet_system* sys);

/* ---- cavity-free rate ---- */

typedef struct pmet_marcus_result {
    double v_eff;
    double delta_g;
    double activation;
    double rate;
} pmet_marcus_result;

PMET_API pmet_status pmet_marcus(const pmet_system* sys, pmet_marcus_result* out);
PMET_API pmet_status pmet_marcus_csv(const pmet_system* sys, char** out);

/* ---- cavity rates ---- */

typedef struct pmet_rate_options {
    pmet_pathway pathway;
    int skip_poles;   /* nonzero: drop channels at photon-shifted resonances */
    unsigned workers; /* 0 means all hardware threads */
} pmet_rate_options;

typedef struct pmet_channel {
    int n;
    int m;
    double p_n;
    double f_direct;
    double f_bridge;
    double f_total;
    double delta_g;
    double partial_rate;
    int pole_skipped;
} pmet_channel;

typedef struct pmet_decomposition {
    double total;
    double direct;
    double bridge;
    double cross;
} pmet_decomposition;

PMET_API pmet_rate_options pmet_rate_options_default(void);

/* Dispatches on the system's mode. opts may be NULL. */
PMET_API pmet_status pmet_rate_compute(const pmet_system* sys, const pmet_rate_options* opts, pmet_rate_result** out);
PMET_API double pmet_rate_total(const pmet_rate_result* r);
PMET_API int pmet_rate_converged(const pmet_rate_result* r);
PMET_API double pmet_rate_relative_change(const pmet_rate_result* r);
PMET_API int pmet_rate_poles_skipped(const pmet_rate_result* r);
PMET_API void pmet_rate_truncation(const pmet_rate_result* r, int* n_max, int* l_max, int* m_max);
PMET_API size_t pmet_rate_channel_count(const pmet_rate_result* r);
PMET_API pmet_status pmet_rate_channel(const pmet_rate_result* r, size_t index, pmet_channel* out);
PMET_API pmet_status pmet_rate_csv(const pmet_rate_result* r, char** out);
PMET_API void pmet_rate_free(pmet_rate_result* r);

/* Off-resonant systems only: total, direct, bridge and interference rates from one table. */
PMET_API pmet_status pmet_rate_decompose(const pmet_system* sys, const pmet_rate_options* opts,
                                         pmet_decomposition* out);

/* ---- overlap matrices ---- */

/* Fills out[n * size + m] with <n| exp(d (a^dagger - a)) |m>. */
PMET_API pmet_status pmet_overlap_matrix(double d, size_t size, double* out);
PMET_API pmet_status pmet_overlap_oracle(double d, size_t size, size_t n_work, double* out);
PMET_API pmet_status pmet_overlap_csv(double d, size_t size, char** out);

/* Displacement of one of the system's overlap families: "da", "db" or "ba". */
PMET_API pmet_status pmet_system_displacement(const pmet_system* sys, const char* which, double* out);

/* ---- sweeps ---- */

typedef struct pmet_sweep_row {
    double value;
    double rate;
    double total;  /* off-resonant only; NaN otherwise */
    double direct;
    double bridge;
    int n_max;
    int l_max;
    int m_max;
    int converged;
    int poles_skipped;
} pmet_sweep_row;

/* base_dir resolves a relative "system_file"; may be NULL. */
PMET_API pmet_status pmet_sweep_from_json(const char* json, const char* base_dir, pmet_sweep** out);
PMET_API pmet_status pmet_sweep_from_file(const char* path, pmet_sweep** out);
PMET_API void pmet_sweep_free(pmet_sweep* sweep);

/* workers = 0 means all hardware threads. */
PMET_API pmet_status pmet_sweep_run(const pmet_sweep* sweep, unsigned workers, int skip_poles,
                                    pmet_sweep_result** out);
PMET_API size_t pmet_sweep_row_count(const pmet_sweep_result* r);
PMET_API pmet_status pmet_sweep_row_get(const pmet_sweep_result* r, size_t index, pmet_sweep_row* out);
PMET_API pmet_status pmet_sweep_csv(const pmet_sweep_result* r, char** out);
PMET_API pmet_status pmet_sweep_metadata(const pmet_sweep_result* r, char** out);
PMET_API void pmet_sweep_result_free(pmet_sweep_result* r);

/* ---- self checks ---- */

/* Runs the oracle and reduction suite. Returns PMET_ERR_VALIDATION if any check
 * fails. report (may be NULL) receives one "PASS|FAIL name: detail" line per check. */
PMET_API pmet_status pmet_validate(char** report);

#ifdef __cplusplus
}
#endif

#endif
