#pragma once

#include <Eigen/Dense>

#include <softarm/policy.hpp>
#include <softarm/reach_env.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace softarm {

// Scenario numbering used throughout reports: 1 nominal, 2 disturbance,
// 3 actuator failure.
int scenario_number(ScenarioKind kind);
ScenarioSpec scenario_spec_for(int scenario);

struct TrajectoryRow {
    int step = 0;        // 1-based executed step
    double time_s = 0.0;
    Eigen::Vector3d tip = Eigen::Vector3d::Zero();
    double tip_distance = 0.0;
    Eigen::VectorXd applied_forces;  // 3n, post-clamp post-mask
};

struct EpisodeMetrics {
    int episode_id = 0;
    int scenario = 1;
    int n_sections = 0;
    Architecture architecture = Architecture::centralised;
    uint64_t seed = 0;
    bool success = false;
    int episode_length = 0;          // executed control steps
    double final_distance = 0.0;     // meters
    double mean_action_magnitude = 0.0;  // Newtons, L2 of the applied 3n-vector
    int settling_steps = -1;         // scenario 2 only; -1 elsewhere
};

// One episode under the given config (seed overrides config.seed and also
// drives the action noise stream when deterministic == false).
EpisodeMetrics run_episode(const CentralisedPolicy& policy, const RodParams& rod,
                           const EnvConfig& config, bool deterministic, uint64_t seed,
                           int episode_id = 0, std::vector<TrajectoryRow>* dump = nullptr);
EpisodeMetrics run_episode(const DistributedPolicy& policy, const RodParams& rod,
                           const EnvConfig& config, bool deterministic, uint64_t seed,
                           int episode_id = 0, std::vector<TrajectoryRow>* dump = nullptr);
// Checkpoint wrapper; throws if config.n_sections mismatches the stored policy.
EpisodeMetrics run_episode(const LoadedPolicy& loaded, const EnvConfig& config,
                           bool deterministic, uint64_t seed, int episode_id = 0,
                           std::vector<TrajectoryRow>* dump = nullptr);

struct AggregateReport {
    Architecture architecture = Architecture::centralised;
    int n_sections = 0;
    int scenario = 1;
    int episodes = 0;
    double success_rate = 0.0;  // percent
    double mean_action_magnitude = 0.0;
    double mean_final_distance = 0.0;
    double std_final_distance = 0.0;
    double mean_episode_length = 0.0;
    double std_episode_length = 0.0;
    double mean_settling_steps = -1.0;  // scenario 2 only
    std::string fingerprint;
};

AggregateReport aggregate_metrics(const std::vector<EpisodeMetrics>& rows,
                                  const std::string& fingerprint);

struct SuiteRequest {
    std::vector<int> n_values;
    std::vector<int> scenarios;
    int episodes = 100;
    uint64_t base_seed = 0;
    bool deterministic = true;
    int jobs = 1;  // accepted for interface stability; episodes are seed-independent
};

struct SuiteResult {
    std::vector<EpisodeMetrics> episodes;     // grouped per cell, episode_id ascending
    std::vector<AggregateReport> aggregates;  // scenario asc, n asc, centralised first
};

// Cells = scenarios x n_values x architectures; every cell must have a
// matching checkpoint. Per-episode seeds are mix_keys(base_seed, episode_id).
// Scenario 3 is defined only for n = 8.
SuiteResult run_suite(const std::vector<LoadedPolicy>& policies, const SuiteRequest& request,
                      const std::string& fingerprint);

// ---- report files ----
void write_episodes_csv(const std::filesystem::path& path,
                        const std::vector<EpisodeMetrics>& rows, const std::string& fingerprint);
std::vector<EpisodeMetrics> read_episodes_csv(const std::filesystem::path& path);

void write_aggregates_csv(const std::filesystem::path& path,
                          const std::vector<AggregateReport>& reports);
std::vector<AggregateReport> read_aggregates_csv(const std::filesystem::path& path);

void write_aggregates_json(const std::filesystem::path& path,
                           const std::vector<AggregateReport>& reports);

// Per-scenario tables, metrics x {Centralised, Distributed} rows, columns in
// ascending n; fingerprint footer.
std::string render_markdown_report(const std::vector<AggregateReport>& reports);

void write_trajectory_csv(const std::filesystem::path& path,
                          const std::vector<TrajectoryRow>& rows, const std::string& fingerprint);

}  // namespace softarm
