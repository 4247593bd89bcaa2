/* C interface to the mosaic datacenter sustainability optimizer.
 *
 * All functions return MOSAIC_OK (0) on success or a nonzero status; the
 * message for the most recent failure on the calling thread is available
 * via mosaic_last_error(). Objects are opaque handles released with their
 * _free function. Strings returned through char** out-parameters are owned
 * by the caller and released with mosaic_string_free().
 */
#ifndef MOSAIC_MOSAIC_H
#define MOSAIC_MOSAIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MOSAIC_API __declspec(dllexport)
#else
#define MOSAIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mosaic_status {
    MOSAIC_OK = 0,
    MOSAIC_ERR_IO = 1,
    MOSAIC_ERR_PARSE = 2,
    MOSAIC_ERR_VALIDATION = 3,
    MOSAIC_ERR_CONFIG = 4,
    MOSAIC_ERR_CAPACITY = 5,
    MOSAIC_ERR_INFEASIBLE = 6,
    MOSAIC_ERR_INVALID_ARGUMENT = 7,
    MOSAIC_ERR_INTERNAL = 8
} mosaic_status;

typedef struct mosaic_scenario mosaic_scenario;

MOSAIC_API const char* mosaic_version(void);
MOSAIC_API const char* mosaic_status_name(mosaic_status status);

/* Message for the most recent error on this thread ("" if none). */
MOSAIC_API const char* mosaic_last_error(void);

MOSAIC_API void mosaic_string_free(char* s);

/* ---- scenarios ---- */

MOSAIC_API mosaic_status mosaic_scenario_load(const char* path, mosaic_scenario** out);
MOSAIC_API mosaic_status mosaic_scenario_parse(const char* json_text, mosaic_scenario** out);
MOSAIC_API mosaic_status mosaic_scenario_save(const mosaic_scenario* sc, const char* path);
MOSAIC_API void mosaic_scenario_free(mosaic_scenario* sc);

MOSAIC_API int mosaic_scenario_locations(const mosaic_scenario* sc);
MOSAIC_API int mosaic_scenario_node_types(const mosaic_scenario* sc);
MOSAIC_API int mosaic_scenario_workloads(const mosaic_scenario* sc);
MOSAIC_API int mosaic_scenario_epochs(const mosaic_scenario* sc);

/* JSON summary: counts, capacity, per-epoch subscription rates. */
MOSAIC_API mosaic_status mosaic_scenario_summary(const mosaic_scenario* sc, char** json_out);

typedef struct mosaic_generate_options {
    int datacenters;
    int node_types;
    int workload_types;
    uint64_t seed;
    double subscription;   /* fraction of fleet mix capacity, (0, 1] */
    int diurnal;           /* 0 = flat demand profile */
} mosaic_generate_options;

MOSAIC_API void mosaic_generate_options_init(mosaic_generate_options* opts);
MOSAIC_API mosaic_status mosaic_scenario_generate(const mosaic_generate_options* opts,
                                                  mosaic_scenario** out);

/* ---- full-day runs ---- */

typedef struct mosaic_run_options {
    const char* algorithm;   /* "mosaic" | "too" | "gald" | "dmgc" */
    uint64_t budget_evals;   /* 0 = unlimited */
    double budget_seconds;   /* 0 = unlimited; at least one budget required */
    uint64_t seed;
    int objectives;          /* 1..3 */
    int jobs;                /* >= 1 epoch workers */
    double trace_interval_seconds;
} mosaic_run_options;

MOSAIC_API void mosaic_run_options_init(mosaic_run_options* opts);

/* Writes front_epochNN.csv, trace_epochNN.jsonl, and report.json under
 * out_dir (created if missing). report_json_out (optional) receives the
 * report document. */
MOSAIC_API mosaic_status mosaic_run_day(const mosaic_scenario* sc,
                                        const mosaic_run_options* opts,
                                        const char* out_dir, char** report_json_out);

/* ---- sensitivity sweeps ---- */

typedef struct mosaic_sweep_options {
    const char* axis;                  /* "dcs" | "subscription" | "objectives" */
    const char* const* algorithms;     /* must include "too" */
    size_t algorithm_count;
    const uint64_t* seeds;
    size_t seed_count;
    uint64_t budget_evals;
    double budget_seconds;
    int epoch;                         /* epoch optimized per cell */
    int jobs;
    const mosaic_generate_options* base; /* NULL = generator defaults */
} mosaic_sweep_options;

MOSAIC_API void mosaic_sweep_options_init(mosaic_sweep_options* opts);

MOSAIC_API mosaic_status mosaic_sweep(const mosaic_sweep_options* opts, const char* out_csv);

/* ---- metrics ---- */

/* Exact hypervolume of the front CSV's objective rows after min-max
 * normalization over the front itself, against the cubic reference point. */
MOSAIC_API mosaic_status mosaic_phv_from_csv(const char* front_csv_path, double ref,
                                             double* phv_out);

#ifdef __cplusplus
}
#endif

#endif /* MOSAIC_MOSAIC_H */
