// Exercises the shared library strictly through its C header.
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "e3d/e3d.h"
#include "test_support.hpp"

namespace {

struct Config {
  e3d_config* handle = nullptr;
  Config(e3d_task task, e3d_algorithm algo) { REQUIRE(e3d_config_create(task, algo, &handle) == E3D_OK); }
  ~Config() { e3d_config_destroy(handle); }
};

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(e3d_api_version() == E3D_API_VERSION);
  CHECK(std::string(e3d_status_string(E3D_ERR_IO)) == "i/o error");
}

TEST_CASE("name parsing") {
  e3d_task task{};
  e3d_algorithm algo{};
  CHECK(e3d_task_from_string("reward", &task) == E3D_OK);
  CHECK(task == E3D_TASK_REWARD);
  CHECK(e3d_algorithm_from_string("egreedy", &algo) == E3D_OK);
  CHECK(algo == E3D_ALGO_EGREEDY);
  CHECK(e3d_algorithm_from_string("dqn", &algo) == E3D_ERR_INVALID_ARGUMENT);
  CHECK(std::string(e3d_last_error()).find("dqn") != std::string::npos);
  CHECK(e3d_task_from_string(nullptr, &task) == E3D_ERR_NULL_ARGUMENT);
}

TEST_CASE("config defaults and validation") {
  Config c(E3D_TASK_REWARD, E3D_ALGO_E3D);
  uint32_t sessions = 0;
  double beta = 0.0;
  uint64_t trials = 0;
  CHECK(e3d_config_get_sessions(c.handle, &sessions) == E3D_OK);
  CHECK(e3d_config_get_beta(c.handle, &beta) == E3D_OK);
  CHECK(e3d_config_get_trials(c.handle, &trials) == E3D_OK);
  CHECK(sessions == 10);
  CHECK(beta == 100.0);
  CHECK(trials == 5000);
  CHECK(e3d_config_validate(c.handle) == E3D_OK);

  CHECK(e3d_config_set_eta(c.handle, 3.0) == E3D_OK);
  CHECK(e3d_config_validate(c.handle) == E3D_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(e3d_last_error()) > 0);

  e3d_config* bad = nullptr;
  CHECK(e3d_config_create(static_cast<e3d_task>(9), E3D_ALGO_E3D, &bad) == E3D_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(e3d_config_validate(nullptr) == E3D_ERR_NULL_ARGUMENT);
  e3d_config_destroy(nullptr);
}

TEST_CASE("rollout through the C API") {
  int32_t s = -1;
  CHECK(e3d_rollout("SEEESEE", &s) == E3D_OK);
  CHECK(s == 17);
  CHECK(e3d_rollout("EEEEEEE", &s) == E3D_OK);
  CHECK(s == 2);
  CHECK(e3d_rollout("EEE", &s) == E3D_ERR_INVALID_ARGUMENT);
  CHECK(e3d_rollout(nullptr, &s) == E3D_ERR_NULL_ARGUMENT);
}

TEST_CASE("oracle and metrics through the C API") {
  double dist[E3D_STATE_COUNT];
  CHECK(e3d_oracle_uniform(dist) == E3D_OK);
  CHECK(dist[17] == 9.0 / 16384.0);
  double total = 0.0;
  for (double v : dist) total += v;
  CHECK(std::abs(total - 1.0) <= 1e-12);

  double uniform[E3D_STATE_COUNT];
  for (double& v : uniform) v = 1.0 / 18.0;
  double h = 0.0, kl = 0.0, tv = 0.0;
  CHECK(e3d_entropy(uniform, E3D_STATE_COUNT, &h) == E3D_OK);
  CHECK(h == doctest::Approx(std::log(18.0)).epsilon(1e-14));
  CHECK(e3d_kl_divergence(dist, uniform, E3D_STATE_COUNT, &kl) == E3D_OK);
  CHECK(kl > 0.0);
  CHECK(e3d_total_variation(dist, dist, E3D_STATE_COUNT, &tv) == E3D_OK);
  CHECK(tv == 0.0);
  CHECK(e3d_entropy(nullptr, 3, &h) == E3D_ERR_NULL_ARGUMENT);
}

TEST_CASE("agent trials match the experiment's trials file") {
  Config c(E3D_TASK_REWARD, E3D_ALGO_E3D);
  e3d_config_set_trials(c.handle, 200);
  e3d_config_set_sessions(c.handle, 2);
  e3d_config_set_seed(c.handle, 77);

  e3d::test::TempDir dir("capi");
  REQUIRE(e3d_run_experiment(c.handle, dir.path().c_str()) == E3D_OK);
  const auto lines = e3d::test::read_lines(dir.path() / "trials.csv");
  REQUIRE(lines.size() == 401);

  e3d_agent* agent = nullptr;
  REQUIRE(e3d_agent_create(c.handle, 1, &agent) == E3D_OK);
  for (int t = 0; t < 200; ++t) {
    e3d_trial_record rec{};
    REQUIRE(e3d_agent_run_trial(agent, &rec) == E3D_OK);
    const auto fields = e3d::test::split(lines[201 + t], ',');
    CHECK(rec.session == 1);
    CHECK(rec.trial == static_cast<uint64_t>(t + 1));
    CHECK(std::to_string(rec.final_state) == fields[2]);
    CHECK(std::to_string(rec.reward) == fields[3]);
    CHECK(rec.intrinsic_drive == std::stod(fields[4]));
    CHECK(std::string(rec.sequence) == fields[5]);
  }

  double q[E3D_ACTION_COUNT * E3D_SEQUENCE_LENGTH];
  double p[E3D_STATE_COUNT];
  CHECK(e3d_agent_q_values(agent, q) == E3D_OK);
  CHECK(e3d_agent_effect_model(agent, p) == E3D_OK);
  double total = 0.0;
  for (double v : p) total += v;
  CHECK(std::abs(total - 1.0) <= 1e-12);
  bool learned = false;
  for (double v : q) learned = learned || v != 0.0;
  CHECK(learned);
  e3d_agent_destroy(agent);
}

TEST_CASE("run_experiment reports invalid configs and I/O failures") {
  Config c(E3D_TASK_EXPLORE, E3D_ALGO_UNIFORM);
  e3d_config_set_trials(c.handle, 0);
  e3d::test::TempDir dir("capi_err");
  CHECK(e3d_run_experiment(c.handle, dir.path().c_str()) == E3D_ERR_INVALID_ARGUMENT);

  e3d_config_set_trials(c.handle, 5);
  const auto blocker = dir.path() / "file";
  { std::ofstream(blocker) << "x"; }
  CHECK(e3d_run_experiment(c.handle, (blocker / "out").c_str()) == E3D_ERR_IO);
  CHECK(e3d_write_oracle((blocker / "oracle.csv").c_str()) == E3D_ERR_IO);
}
