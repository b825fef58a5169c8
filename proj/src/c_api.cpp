#include "e3d/e3d.h"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <new>
#include <stdexcept>
#include <string>

#include "e3d/effect_model.hpp"
#include "e3d/experiment.hpp"
#include "e3d/gridworld.hpp"
#include "e3d/metrics.hpp"

struct e3d_config {
  e3d::ExperimentConfig value;
};

struct e3d_agent {
  e3d::ExperimentConfig config;
  e3d::TwoRoomWorld world;
  e3d::LearnerState state;
  e3d::TrialContext ctx;
  e3d::Rng rng;
};

namespace {

thread_local std::string g_last_error;

e3d_status fail(e3d_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename F>
e3d_status guarded(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return E3D_OK;
  } catch (const std::invalid_argument& e) {
    return fail(E3D_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(E3D_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(E3D_ERR_IO, e.what());
  } catch (const std::runtime_error& e) {
    return fail(E3D_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(E3D_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(E3D_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(E3D_ERR_INTERNAL, "unknown error");
  }
}

#define E3D_REQUIRE(ptr)                                              \
  do {                                                                \
    if ((ptr) == nullptr) return fail(E3D_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

e3d::Task to_task(e3d_task t) {
  switch (t) {
    case E3D_TASK_EXPLORE: return e3d::Task::explore;
    case E3D_TASK_REWARD: return e3d::Task::reward;
  }
  throw std::invalid_argument("unknown task value");
}

e3d::Algorithm to_algorithm(e3d_algorithm a) {
  switch (a) {
    case E3D_ALGO_E3D: return e3d::Algorithm::e3d;
    case E3D_ALGO_UNIFORM: return e3d::Algorithm::uniform;
    case E3D_ALGO_EGREEDY: return e3d::Algorithm::egreedy;
  }
  throw std::invalid_argument("unknown algorithm value");
}

void copy_probs(const e3d::EffectDistribution& d, double* out) {
  for (std::size_t i = 0; i < e3d::kStateCount; ++i) out[i] = d[i];
}

}  // namespace

extern "C" {

uint32_t e3d_api_version(void) { return E3D_API_VERSION; }

const char* e3d_last_error(void) { return g_last_error.c_str(); }

const char* e3d_status_string(e3d_status status) {
  switch (status) {
    case E3D_OK: return "ok";
    case E3D_ERR_NULL_ARGUMENT: return "null argument";
    case E3D_ERR_INVALID_ARGUMENT: return "invalid argument";
    case E3D_ERR_IO: return "i/o error";
    case E3D_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

e3d_status e3d_task_from_string(const char* name, e3d_task* out) {
  E3D_REQUIRE(name);
  E3D_REQUIRE(out);
  return guarded([&] {
    *out = e3d::parse_task(name) == e3d::Task::explore ? E3D_TASK_EXPLORE : E3D_TASK_REWARD;
  });
}

e3d_status e3d_algorithm_from_string(const char* name, e3d_algorithm* out) {
  E3D_REQUIRE(name);
  E3D_REQUIRE(out);
  return guarded([&] {
    switch (e3d::parse_algorithm(name)) {
      case e3d::Algorithm::e3d: *out = E3D_ALGO_E3D; break;
      case e3d::Algorithm::uniform: *out = E3D_ALGO_UNIFORM; break;
      case e3d::Algorithm::egreedy: *out = E3D_ALGO_EGREEDY; break;
    }
  });
}

e3d_status e3d_config_create(e3d_task task, e3d_algorithm algo, e3d_config** out) {
  E3D_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new e3d_config{e3d::ExperimentConfig::defaults(to_task(task), to_algorithm(algo))};
  });
}

void e3d_config_destroy(e3d_config* config) { delete config; }

#define E3D_SETTER(name, type, field)                                \
  e3d_status e3d_config_set_##name(e3d_config* config, type value) { \
    E3D_REQUIRE(config);                                             \
    config->value.field = value;                                     \
    g_last_error.clear();                                            \
    return E3D_OK;                                                   \
  }

E3D_SETTER(trials, uint64_t, trials)
E3D_SETTER(sessions, uint32_t, sessions)
E3D_SETTER(seed, uint64_t, seed)
E3D_SETTER(alpha, double, alpha)
E3D_SETTER(beta, double, beta)
E3D_SETTER(lambda, double, lambda)
E3D_SETTER(eta, double, eta)
E3D_SETTER(epsilon, double, epsilon)

#undef E3D_SETTER

e3d_status e3d_config_get_trials(const e3d_config* config, uint64_t* out) {
  E3D_REQUIRE(config);
  E3D_REQUIRE(out);
  *out = config->value.trials;
  return E3D_OK;
}

e3d_status e3d_config_get_sessions(const e3d_config* config, uint32_t* out) {
  E3D_REQUIRE(config);
  E3D_REQUIRE(out);
  *out = config->value.sessions;
  return E3D_OK;
}

e3d_status e3d_config_get_beta(const e3d_config* config, double* out) {
  E3D_REQUIRE(config);
  E3D_REQUIRE(out);
  *out = config->value.beta;
  return E3D_OK;
}

e3d_status e3d_config_validate(const e3d_config* config) {
  E3D_REQUIRE(config);
  return guarded([&] { config->value.validate(); });
}

e3d_status e3d_run_experiment(const e3d_config* config, const char* out_dir) {
  E3D_REQUIRE(config);
  E3D_REQUIRE(out_dir);
  return guarded([&] {
    const auto result = e3d::run_experiment(config->value);
    e3d::write_outputs(result, out_dir);
  });
}

e3d_status e3d_oracle_uniform(double out[E3D_STATE_COUNT]) {
  E3D_REQUIRE(out);
  return guarded([&] { copy_probs(e3d::exact_uniform_final_distribution({}), out); });
}

e3d_status e3d_write_oracle(const char* path) {
  E3D_REQUIRE(path);
  return guarded([&] { e3d::write_oracle(path); });
}

e3d_status e3d_rollout(const char* sequence, int32_t* final_state) {
  E3D_REQUIRE(sequence);
  E3D_REQUIRE(final_state);
  return guarded([&] {
    *final_state = e3d::TwoRoomWorld{}.rollout(e3d::parse_sequence(sequence)).value();
  });
}

e3d_status e3d_agent_create(const e3d_config* config, uint32_t session, e3d_agent** out) {
  E3D_REQUIRE(config);
  E3D_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto& c = config->value;
    c.validate();
    e3d::TrialContext ctx;
    ctx.algo = c.algo;
    ctx.params = c.params();
    ctx.epsilon = c.epsilon;
    ctx.rewarded = c.task == e3d::Task::reward;
    ctx.session = session;
    ctx.trial = 1;
    *out = new e3d_agent{c,
                         e3d::TwoRoomWorld{},
                         {e3d::QTable{}, e3d::init_uniform(), e3d::EffectDistribution::uniform()},
                         ctx,
                         e3d::Rng::for_session(c.seed, session)};
  });
}

void e3d_agent_destroy(e3d_agent* agent) { delete agent; }

e3d_status e3d_agent_run_trial(e3d_agent* agent, e3d_trial_record* out) {
  E3D_REQUIRE(agent);
  E3D_REQUIRE(out);
  return guarded([&] {
    auto outcome = e3d::run_trial(agent->world, agent->state, agent->ctx, agent->rng);
    agent->state = std::move(outcome.state);
    ++agent->ctx.trial;
    const auto& r = outcome.record;
    out->session = r.session;
    out->trial = r.trial;
    out->final_state = r.final_state.value();
    out->reward = r.extrinsic_reward;
    out->intrinsic_drive = r.intrinsic_drive;
    const std::string seq = e3d::to_string(r.sequence);
    std::memcpy(out->sequence, seq.c_str(), seq.size() + 1);
  });
}

e3d_status e3d_agent_q_values(const e3d_agent* agent,
                              double out[E3D_ACTION_COUNT * E3D_SEQUENCE_LENGTH]) {
  E3D_REQUIRE(agent);
  E3D_REQUIRE(out);
  const auto& v = agent->state.q.values();
  std::copy(v.begin(), v.end(), out);
  return E3D_OK;
}

e3d_status e3d_agent_effect_model(const e3d_agent* agent, double out[E3D_STATE_COUNT]) {
  E3D_REQUIRE(agent);
  E3D_REQUIRE(out);
  copy_probs(agent->state.p, out);
  return E3D_OK;
}

e3d_status e3d_entropy(const double* p, size_t n, double* out) {
  E3D_REQUIRE(p);
  E3D_REQUIRE(out);
  return guarded([&] { *out = e3d::entropy(std::span<const double>(p, n)); });
}

e3d_status e3d_kl_divergence(const double* p, const double* q, size_t n, double* out) {
  E3D_REQUIRE(p);
  E3D_REQUIRE(q);
  E3D_REQUIRE(out);
  return guarded([&] {
    *out = e3d::kl_divergence(std::span<const double>(p, n), std::span<const double>(q, n));
  });
}

e3d_status e3d_total_variation(const double* p, const double* q, size_t n, double* out) {
  E3D_REQUIRE(p);
  E3D_REQUIRE(q);
  E3D_REQUIRE(out);
  return guarded([&] {
    *out = e3d::total_variation(std::span<const double>(p, n), std::span<const double>(q, n));
  });
}

}  // extern "C"
