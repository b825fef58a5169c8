/*
 * C interface to the end-effect exploration library.
 *
 * Every function returns an e3d_status. On failure, e3d_last_error() returns a
 * message describing the most recent error on the calling thread. Handles are
 * opaque and owned by the caller; destroy functions accept NULL.
 */
#ifndef E3D_E3D_H
#define E3D_E3D_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(E3D_BUILDING_LIBRARY)
#    define E3D_API __declspec(dllexport)
#  else
#    define E3D_API __declspec(dllimport)
#  endif
#else
#  define E3D_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define E3D_API_VERSION 1u

#define E3D_STATE_COUNT 18
#define E3D_ACTION_COUNT 4
#define E3D_SEQUENCE_LENGTH 7

typedef enum e3d_status {
  E3D_OK = 0,
  E3D_ERR_NULL_ARGUMENT = 1,
  E3D_ERR_INVALID_ARGUMENT = 2,
  E3D_ERR_IO = 3,
  E3D_ERR_INTERNAL = 4
} e3d_status;

typedef enum e3d_task { E3D_TASK_EXPLORE = 0, E3D_TASK_REWARD = 1 } e3d_task;

typedef enum e3d_algorithm {
  E3D_ALGO_E3D = 0,
  E3D_ALGO_UNIFORM = 1,
  E3D_ALGO_EGREEDY = 2
} e3d_algorithm;

typedef struct e3d_config e3d_config;
typedef struct e3d_agent e3d_agent;

/* One trial. sequence is a NUL-terminated string over {E,S,W,N}. */
typedef struct e3d_trial_record {
  uint32_t session;
  uint64_t trial;
  int32_t final_state;
  int32_t reward;
  double intrinsic_drive;
  char sequence[E3D_SEQUENCE_LENGTH + 1];
} e3d_trial_record;

E3D_API uint32_t e3d_api_version(void);
E3D_API const char* e3d_last_error(void);
E3D_API const char* e3d_status_string(e3d_status status);

/* Names: "explore" / "reward" and "e3d" / "uniform" / "egreedy". */
E3D_API e3d_status e3d_task_from_string(const char* name, e3d_task* out);
E3D_API e3d_status e3d_algorithm_from_string(const char* name, e3d_algorithm* out);

/* Configuration. create fills in the task-dependent defaults. */
E3D_API e3d_status e3d_config_create(e3d_task task, e3d_algorithm algo, e3d_config** out);
E3D_API void e3d_config_destroy(e3d_config* config);
E3D_API e3d_status e3d_config_set_trials(e3d_config* config, uint64_t trials);
E3D_API e3d_status e3d_config_set_sessions(e3d_config* config, uint32_t sessions);
E3D_API e3d_status e3d_config_set_seed(e3d_config* config, uint64_t seed);
E3D_API e3d_status e3d_config_set_alpha(e3d_config* config, double alpha);
E3D_API e3d_status e3d_config_set_beta(e3d_config* config, double beta);
E3D_API e3d_status e3d_config_set_lambda(e3d_config* config, double lambda);
E3D_API e3d_status e3d_config_set_eta(e3d_config* config, double eta);
E3D_API e3d_status e3d_config_set_epsilon(e3d_config* config, double epsilon);
E3D_API e3d_status e3d_config_get_trials(const e3d_config* config, uint64_t* out);
E3D_API e3d_status e3d_config_get_sessions(const e3d_config* config, uint32_t* out);
E3D_API e3d_status e3d_config_get_beta(const e3d_config* config, double* out);
E3D_API e3d_status e3d_config_validate(const e3d_config* config);

/* Runs all sessions and writes trials.csv, dist.csv, summary.json,
   heatmap.txt and heatmap.svg into out_dir (created if missing). */
E3D_API e3d_status e3d_run_experiment(const e3d_config* config, const char* out_dir);

/* Exact uniform-policy final-state distribution. */
E3D_API e3d_status e3d_oracle_uniform(double out[E3D_STATE_COUNT]);
E3D_API e3d_status e3d_write_oracle(const char* path);

/* Environment. sequence must be exactly seven characters over {E,S,W,N}. */
E3D_API e3d_status e3d_rollout(const char* sequence, int32_t* final_state);

/* Step-by-step learner for one session. */
E3D_API e3d_status e3d_agent_create(const e3d_config* config, uint32_t session, e3d_agent** out);
E3D_API void e3d_agent_destroy(e3d_agent* agent);
E3D_API e3d_status e3d_agent_run_trial(e3d_agent* agent, e3d_trial_record* out);
/* Action-major: entry (a, i) at a * 7 + i, actions ordered E, S, W, N. */
E3D_API e3d_status e3d_agent_q_values(const e3d_agent* agent,
                                      double out[E3D_ACTION_COUNT * E3D_SEQUENCE_LENGTH]);
E3D_API e3d_status e3d_agent_effect_model(const e3d_agent* agent, double out[E3D_STATE_COUNT]);

/* Metrics over probability vectors of length n, in nats. */
E3D_API e3d_status e3d_entropy(const double* p, size_t n, double* out);
E3D_API e3d_status e3d_kl_divergence(const double* p, const double* q, size_t n, double* out);
E3D_API e3d_status e3d_total_variation(const double* p, const double* q, size_t n, double* out);

#ifdef __cplusplus
}
#endif

#endif /* E3D_E3D_H */
