#pragma once

#include <Eigen/Dense>

#include <softarm/rod.hpp>

#include <cstdint>
#include <vector>

namespace softarm {

enum class ScenarioKind { nominal, disturbance, actuator_failure };

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::nominal;
    // disturbance (kind == disturbance)
    int disturbance_step = 300;
    Eigen::Vector3d disturbance_force = Eigen::Vector3d(-10.0, 0.0, 0.0);
    int disturbance_duration = 10;
    int disturbance_node = -1;  // -1 resolves to mid-span, n_elements/2
    // actuator failure (kind == actuator_failure)
    int failed_agent = 4;
    int failure_start_step = 0;
};

struct EnvConfig {
    int n_sections = 6;
    double control_dt = 2e-3;
    double f_max = 15.0;
    double success_radius = 0.03;
    int horizon = 1000;
    Eigen::Vector3d target = Eigen::Vector3d(0.4, 0.0, 0.6);  // base + (0.4L, 0, 0.6L)
    double lambda_d = 10.0;
    double lambda_a = 1e-3;
    ScenarioSpec scenario;
    uint64_t seed = 0;

    void validate(const RodParams& rod) const;  // throws std::invalid_argument
};

struct ObservationSet {
    std::vector<Eigen::VectorXd> per_agent;  // n vectors, each 6n+4
    Eigen::VectorXd global_state;            // 6n+3
    double tip_distance = 0.0;
};

struct JointAction {
    Eigen::Matrix3Xd per_agent_forces;  // 3 x n, Newtons
};

struct StepInfo {
    double tip_distance = 0.0;
    Eigen::VectorXd agent_distances;  // d^i_t
    Eigen::VectorXd effort_costs;     // c^i_t = |f^i|/f_max, post-mask
    int step_index = 0;               // steps taken so far (1 after the first step)
    bool action_clamped = false;
};

struct StepOutcome {
    ObservationSet observation;
    double reward_centralised = 0.0;
    Eigen::VectorXd rewards_distributed;
    bool done = false;
    bool success = false;
    StepInfo info;
};

struct RewardResult {
    double centralised;
    Eigen::VectorXd distributed;
};

// Pure reward map. Positions are 3 x n forcing-node positions (tip is the last
// column); forces are post-mask applied forces.
RewardResult compute_rewards(const Eigen::Matrix3Xd& prev_positions,
                             const Eigen::Matrix3Xd& new_positions,
                             const Eigen::Matrix3Xd& applied_forces, const EnvConfig& config);

// Exact observation layouts.
Eigen::VectorXd build_local_observation(int agent_index, const Eigen::Matrix3Xd& positions,
                                        const Eigen::Matrix3Xd& prev_forces,
                                        const Eigen::Vector3d& target, int n_sections);
Eigen::VectorXd build_global_state(const Eigen::Matrix3Xd& positions,
                                   const Eigen::Matrix3Xd& prev_forces,
                                   const Eigen::Vector3d& target);

struct ScenarioEffect {
    Eigen::Matrix3Xd masked_forces;  // 3 x n
    bool disturbance_active = false;
    int disturbance_node = -1;
    Eigen::Vector3d disturbance_force = Eigen::Vector3d::Zero();
};

// step_index is the 0-based index of the step being taken; the disturbance
// window is [disturbance_step, disturbance_step + duration).
ScenarioEffect apply_scenario(const Eigen::Matrix3Xd& clamped_forces, int step_index,
                              const EnvConfig& config, int n_elements);

class ReachEnv {
  public:
    ReachEnv(const RodParams& rod, const EnvConfig& config);

    ObservationSet reset();
    StepOutcome step(const JointAction& action);  // throws std::logic_error after done

    int n_sections() const { return config_.n_sections; }
    const EnvConfig& config() const { return config_; }
    const RodParams& rod_params() const { return rod_params_; }
    const std::vector<int>& forcing_node_indices() const { return forcing_nodes_; }
    const RodState& rod_state() const { return state_; }
    int step_index() const { return step_index_; }
    bool done() const { return done_; }

  private:
    Eigen::Matrix3Xd forcing_positions() const;
    ObservationSet make_observation() const;

    RodParams rod_params_;
    EnvConfig config_;
    std::vector<int> forcing_nodes_;
    RodState state_;
    Eigen::Matrix3Xd prev_forces_;
    int step_index_ = 0;
    bool done_ = false;
};

}  // namespace softarm
