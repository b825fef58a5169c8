#include "e3d/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "e3d/effect_model.hpp"
#include "e3d/gridworld.hpp"
#include "e3d/metrics.hpp"

namespace e3d {

std::string_view to_string(Task task) noexcept {
  return task == Task::explore ? "explore" : "reward";
}

Task parse_task(std::string_view name) {
  if (name == "explore") return Task::explore;
  if (name == "reward") return Task::reward;
  throw std::invalid_argument("unknown task '" + std::string(name) +
                              "' (expected explore or reward)");
}

ExperimentConfig ExperimentConfig::defaults(Task task, Algorithm algo) {
  ExperimentConfig c;
  c.task = task;
  c.algo = algo;
  c.sessions = task == Task::explore ? 1 : 10;
  c.beta = task == Task::explore ? 1.0 : 100.0;
  return c;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (sessions < 1) throw std::invalid_argument("sessions must be at least 1");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1]");
  params().validate();
}

std::vector<TrialRecord> run_session(const ExperimentConfig& config, std::uint32_t session) {
  config.validate();
  const TwoRoomWorld world;
  Rng rng = Rng::for_session(config.seed, session);
  LearnerState state{QTable{}, init_uniform(), EffectDistribution::uniform()};

  TrialContext ctx;
  ctx.algo = config.algo;
  ctx.params = config.params();
  ctx.epsilon = config.epsilon;
  ctx.rewarded = config.task == Task::reward;
  ctx.session = session;

  std::vector<TrialRecord> records;
  records.reserve(config.trials);
  for (std::uint64_t t = 1; t <= config.trials; ++t) {
    ctx.trial = t;
    TrialOutcome outcome = run_trial(world, state, ctx, rng);
    state = std::move(outcome.state);
    records.push_back(outcome.record);
  }
  return records;
}

SessionSummary summarize_session(const ExperimentConfig& config,
                                 std::span<const TrialRecord> records) {
  SessionSummary s;
  s.counts = visit_counts(records);
  if (!records.empty()) {
    const auto freq = EffectDistribution::from_counts(s.counts);
    s.entropy = entropy(freq);
    s.kl_to_uniform = kl_divergence(freq, EffectDistribution::uniform());
    if (config.algo == Algorithm::uniform) {
      s.tv_to_oracle = total_variation(freq, exact_uniform_final_distribution(TwoRoomWorld{}));
    }
  }
  const auto cumulative = cumulative_rewards(records);
  s.cumulative_reward_final = cumulative.empty() ? 0 : cumulative.back();
  s.first_success_trial = first_success_trial(records);
  return s;
}

namespace {

PooledSummary pool(const ExperimentConfig& config, const std::vector<SessionSummary>& sessions) {
  PooledSummary p;
  std::vector<double> finals;
  std::vector<double> firsts;
  for (const auto& s : sessions) {
    for (std::size_t i = 0; i < kStateCount; ++i) p.counts[i] += s.counts[i];
    p.cumulative_reward_total += s.cumulative_reward_final;
    finals.push_back(static_cast<double>(s.cumulative_reward_final));
    firsts.push_back(static_cast<double>(s.first_success_trial.value_or(config.trials + 1)));
  }
  const auto freq = EffectDistribution::from_counts(p.counts);
  p.entropy = entropy(freq);
  p.kl_to_uniform = kl_divergence(freq, EffectDistribution::uniform());
  if (config.algo == Algorithm::uniform) {
    p.tv_to_oracle = total_variation(freq, exact_uniform_final_distribution(TwoRoomWorld{}));
  }
  p.cumulative_reward_final_mean =
      static_cast<double>(p.cumulative_reward_total) / static_cast<double>(sessions.size());
  p.cumulative_reward_final_median = median(finals);
  p.first_success_trial_median = median(firsts);
  return p;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentResult result;
  result.config = config;
  result.sessions.resize(config.sessions);

  // Each worker claims session indices; results land in their own slot.
  std::atomic<std::uint32_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::uint32_t k = next++; k < config.sessions; k = next++) {
      try {
        result.sessions[k] = run_session(config, k);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_workers = std::min<unsigned>(hw, config.sessions);
  std::vector<std::jthread> workers;
  for (unsigned w = 1; w < n_workers; ++w) workers.emplace_back(worker);
  worker();
  workers.clear();
  if (failure) std::rethrow_exception(failure);

  for (const auto& records : result.sessions) {
    result.per_session.push_back(summarize_session(config, records));
  }
  result.pooled = pool(config, result.per_session);
  return result;
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf, end);
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& file) {
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + file.string());
}

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

void write_trials(const ExperimentResult& result, const std::filesystem::path& file) {
  auto out = open_for_write(file);
  out << "session,trial,final_state,reward,intrinsic_drive,sequence\n";
  for (const auto& records : result.sessions) {
    for (const auto& r : records) {
      out << r.session << ',' << r.trial << ',' << r.final_state.value() << ','
          << r.extrinsic_reward << ',' << format_double(r.intrinsic_drive) << ','
          << to_string(r.sequence) << '\n';
    }
  }
  finish(out, file);
}

void write_distribution(const PooledSummary& pooled, const std::filesystem::path& file) {
  const auto freq = EffectDistribution::from_counts(pooled.counts);
  auto out = open_for_write(file);
  out << "state,row,col,count,frequency\n";
  for (std::size_t i = 0; i < kStateCount; ++i) {
    const StateId s(static_cast<int>(i));
    out << s.value() << ',' << s.row() << ',' << s.col() << ',' << pooled.counts[i] << ','
        << format_double(freq[i]) << '\n';
  }
  finish(out, file);
}

void write_summary(const ExperimentResult& result, const std::filesystem::path& file) {
  using nlohmann::ordered_json;
  const auto& c = result.config;
  ordered_json doc;
  doc["config"] = {
      {"task", to_string(c.task)}, {"algo", to_string(c.algo)},
      {"trials", c.trials},        {"sessions", c.sessions},
      {"seed", c.seed},            {"alpha", c.alpha},
      {"beta", c.beta},            {"lambda", c.lambda},
      {"eta", c.eta},              {"epsilon", c.epsilon},
  };

  ordered_json sessions = ordered_json::array();
  for (std::size_t k = 0; k < result.per_session.size(); ++k) {
    const auto& s = result.per_session[k];
    ordered_json js;
    js["session"] = k;
    js["entropy"] = s.entropy;
    js["kl_to_uniform"] = s.kl_to_uniform;
    js["cumulative_reward_final"] = s.cumulative_reward_final;
    js["first_success_trial"] =
        s.first_success_trial ? ordered_json(*s.first_success_trial) : ordered_json(nullptr);
    if (c.algo == Algorithm::uniform) js["tv_to_oracle"] = optional_json(s.tv_to_oracle);
    sessions.push_back(std::move(js));
  }
  doc["sessions"] = std::move(sessions);

  const auto& p = result.pooled;
  ordered_json pooled;
  pooled["counts"] = p.counts;
  pooled["entropy"] = p.entropy;
  pooled["kl_to_uniform"] = p.kl_to_uniform;
  pooled["cumulative_reward_total"] = p.cumulative_reward_total;
  pooled["cumulative_reward_final_mean"] = p.cumulative_reward_final_mean;
  pooled["cumulative_reward_final_median"] = p.cumulative_reward_final_median;
  pooled["first_success_trial_median"] = p.first_success_trial_median;
  if (c.algo == Algorithm::uniform) pooled["tv_to_oracle"] = optional_json(p.tv_to_oracle);
  doc["pooled"] = std::move(pooled);

  auto out = open_for_write(file);
  out << doc.dump(2) << '\n';
  finish(out, file);
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * fraction);
  return buf;
}

void write_heatmap_text(const PooledSummary& pooled, const std::filesystem::path& file) {
  const auto freq = EffectDistribution::from_counts(pooled.counts);
  auto out = open_for_write(file);
  for (int row = 0; row < kGridHeight; ++row) {
    for (int col = 0; col < kGridWidth; ++col) {
      if (col > 0) out << ' ';
      out << percent(freq[StateId::from_row_col(row, col)]);
    }
    out << '\n';
  }
  finish(out, file);
}

void write_heatmap_svg(const PooledSummary& pooled, const std::filesystem::path& file) {
  constexpr int cell = 60;
  const auto freq = EffectDistribution::from_counts(pooled.counts);
  const double top = *std::max_element(freq.probs().begin(), freq.probs().end());
  auto out = open_for_write(file);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kGridWidth * cell
      << "\" height=\"" << kGridHeight * cell << "\">\n";
  for (int row = 0; row < kGridHeight; ++row) {
    for (int col = 0; col < kGridWidth; ++col) {
      const double v = freq[StateId::from_row_col(row, col)];
      const int shade = 255 - static_cast<int>(std::lround(top > 0.0 ? 255.0 * v / top : 0.0));
      out << "  <rect x=\"" << col * cell << "\" y=\"" << row * cell << "\" width=\"" << cell
          << "\" height=\"" << cell << "\" fill=\"rgb(255," << shade << ',' << shade
          << ")\" stroke=\"black\"/>\n";
      out << "  <text x=\"" << col * cell + cell / 2 << "\" y=\"" << row * cell + cell / 2 + 5
          << "\" font-size=\"12\" text-anchor=\"middle\">" << percent(v) << "</text>\n";
    }
  }
  // Wall between the rooms, leaving the door row open.
  const int x = 3 * cell;
  out << "  <line x1=\"" << x << "\" y1=\"0\" x2=\"" << x << "\" y2=\"" << cell
      << "\" stroke=\"black\" stroke-width=\"6\"/>\n";
  out << "  <line x1=\"" << x << "\" y1=\"" << 2 * cell << "\" x2=\"" << x << "\" y2=\""
      << 3 * cell << "\" stroke=\"black\" stroke-width=\"6\"/>\n";
  out << "</svg>\n";
  finish(out, file);
}

}  // namespace

void write_outputs(const ExperimentResult& result, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
  write_trials(result, out_dir / "trials.csv");
  write_distribution(result.pooled, out_dir / "dist.csv");
  write_summary(result, out_dir / "summary.json");
  write_heatmap_text(result.pooled, out_dir / "heatmap.txt");
  write_heatmap_svg(result.pooled, out_dir / "heatmap.svg");
}

void write_oracle(const std::filesystem::path& file) {
  const auto dist = exact_uniform_final_distribution(TwoRoomWorld{});
  if (file.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
  }
  auto out = open_for_write(file);
  out << "state,row,col,probability\n";
  for (std::size_t i = 0; i < kStateCount; ++i) {
    const StateId s(static_cast<int>(i));
    out << s.value() << ',' << s.row() << ',' << s.col() << ',' << format_double(dist[i]) << '\n';
  }
  finish(out, file);
}

}  // namespace e3d
