#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "e3d/learner.hpp"

namespace e3d {

/// explore: no extrinsic reward. reward: 1 at the goal cell.
enum class Task { explore, reward };

std::string_view to_string(Task task) noexcept;
Task parse_task(std::string_view name);

struct ExperimentConfig {
  Task task = Task::explore;
  Algorithm algo = Algorithm::e3d;
  std::uint64_t trials = 5000;
  std::uint32_t sessions = 1;
  std::uint64_t seed = 0;
  double alpha = 0.3;
  double beta = 1.0;
  double lambda = 0.03;
  double eta = 0.01;
  double epsilon = 0.1;

  /// Task-dependent defaults: explore runs 1 session at beta 1,
  /// reward runs 10 sessions at beta 100.
  static ExperimentConfig defaults(Task task, Algorithm algo);

  /// Throws std::invalid_argument describing the first bad field.
  void validate() const;

  E3DParams params() const { return {alpha, beta, lambda, eta}; }
};

/// Runs config.trials trials from a zero Q table and a uniform effect model,
/// drawing from the stream derived from (config.seed, session).
std::vector<TrialRecord> run_session(const ExperimentConfig& config, std::uint32_t session);

struct SessionSummary {
  std::array<std::uint64_t, kStateCount> counts{};
  double entropy = 0.0;
  double kl_to_uniform = 0.0;
  std::optional<double> tv_to_oracle;  // uniform algorithm only
  std::uint64_t cumulative_reward_final = 0;
  std::optional<std::uint64_t> first_success_trial;
};

struct PooledSummary {
  std::array<std::uint64_t, kStateCount> counts{};
  double entropy = 0.0;
  double kl_to_uniform = 0.0;
  std::optional<double> tv_to_oracle;
  std::uint64_t cumulative_reward_total = 0;
  double cumulative_reward_final_mean = 0.0;
  double cumulative_reward_final_median = 0.0;
  /// Sessions without a success count as trials + 1.
  double first_success_trial_median = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<std::vector<TrialRecord>> sessions;  // indexed by session
  std::vector<SessionSummary> per_session;
  PooledSummary pooled;
};

SessionSummary summarize_session(const ExperimentConfig& config,
                                 std::span<const TrialRecord> records);

/// Runs every session (possibly concurrently) and summarizes them in session order.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Writes trials.csv, dist.csv, summary.json, heatmap.txt and heatmap.svg.
/// Throws std::runtime_error on I/O failure.
void write_outputs(const ExperimentResult& result, const std::filesystem::path& out_dir);

/// Writes the exact uniform-policy final-state distribution as CSV.
void write_oracle(const std::filesystem::path& file);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace e3d
