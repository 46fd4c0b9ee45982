#pragma once

#include <Eigen/Dense>

#include <softarm/mlp.hpp>
#include <softarm/policy.hpp>

#include <cstdint>
#include <vector>

namespace softarm {

struct TrainConfig {
    int updates = 10000;
    int steps_per_env_per_update = 2000;
    int num_envs = 8;
    int epochs = 5;
    int minibatch_size = 8192;
    double actor_lr = 3e-4;
    double critic_lr = 1e-3;
    double clip_eps = 0.2;
    double gamma = 0.99;
    double gae_lambda = 0.95;
    double entropy_coef = 0.01;
    double value_coef = 0.5;
    double max_grad_norm = 0.5;
    int eval_every = 200;
    uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

// One update's worth of on-policy data, env-major: column env*steps_per_env+t.
// Streams = rows of log_probs/rewards/advantages/returns: one per agent for
// the distributed architecture, a single joint stream for the centralised one.
//
// Termination bookkeeping: `terminated` marks success terminals (bootstrap
// zeroed); `episode_end` additionally marks truncations (horizon hit or buffer
// tail) where next_values carries V(s') for bootstrapping. Advantage credit
// never crosses an episode_end.
struct RolloutBuffer {
    Architecture architecture = Architecture::centralised;
    int n_sections = 0;
    int num_envs = 0;
    int steps_per_env = 0;

    Eigen::MatrixXd global_states;                // (6n+3) x T
    std::vector<Eigen::MatrixXd> per_agent_obs;   // n of (6n+4) x T; distributed only
    Eigen::MatrixXd actions;                      // 3n x T, normalised (pre-scale) draws
    Eigen::MatrixXd log_probs;                    // streams x T
    Eigen::MatrixXd rewards;                      // streams x T
    Eigen::VectorXd values;                       // T
    Eigen::VectorXd next_values;                  // T
    std::vector<uint8_t> terminated;              // T
    std::vector<uint8_t> episode_end;             // T

    // filled by prepare_advantages
    Eigen::MatrixXd advantages;                   // streams x T (normalised)
    Eigen::MatrixXd returns;                      // streams x T
    Eigen::VectorXd value_targets;                // T

    int total_steps() const { return num_envs * steps_per_env; }
    int streams() const { return architecture == Architecture::distributed ? n_sections : 1; }
};

// GAE over one stream: delta_t = r_t + gamma*next_value_t*(1-terminated_t) - V_t,
// A_t = delta_t + gamma*lambda*(1-episode_end_t)*A_{t+1}; returns = A + V.
void compute_gae(const Eigen::Ref<const Eigen::VectorXd>& rewards,
                 const Eigen::Ref<const Eigen::VectorXd>& values,
                 const Eigen::Ref<const Eigen::VectorXd>& next_values,
                 const std::vector<uint8_t>& terminated,
                 const std::vector<uint8_t>& episode_end, double gamma, double lambda,
                 Eigen::VectorXd& advantages, Eigen::VectorXd& returns);

struct GaeResult {
    Eigen::VectorXd advantages;
    Eigen::VectorXd returns;
};

// Single-trajectory convenience: dones are terminal flags; a trajectory that
// does not end in done is truncated and bootstraps `bootstrap`.
GaeResult compute_gae(const Eigen::VectorXd& rewards, const Eigen::VectorXd& values,
                      const std::vector<uint8_t>& dones, double bootstrap, double gamma,
                      double lambda);

// GAE per stream and env segment, then advantages normalised to zero mean /
// unit std per stream (population std, +1e-8 guard); value_targets = returns
// for centralised, per-state mean of per-agent returns for distributed.
void prepare_advantages(RolloutBuffer& buffer, const TrainConfig& config);

struct OptimState {
    Adam actor;
    Adam critic;
    uint64_t seed = 0;
    uint64_t update_index = 0;
};

OptimState make_optim_state(Eigen::Index actor_params, Eigen::Index critic_params,
                            uint64_t seed);

struct UpdateStats {
    double policy_loss = 0.0;  // per-agent mean for distributed
    double value_loss = 0.0;
    double entropy = 0.0;      // per-agent mean for distributed
    double grad_norm = 0.0;    // max post-clip global norm over minibatch passes
    int minibatch_passes = 0;
};

// Loss and packed analytic gradients for one minibatch (no optimiser step).
// `total` is the optimised scalar: policy + value_coef*value - entropy_coef*entropy,
// with the distributed policy/entropy terms summed over agents.
struct MinibatchEval {
    double policy_loss = 0.0;  // logged value (per-agent mean for distributed)
    double value_loss = 0.0;
    double entropy = 0.0;      // logged value
    double total = 0.0;
    Eigen::VectorXd actor_grads;
    Eigen::VectorXd critic_grads;
};

MinibatchEval eval_minibatch(const CentralisedPolicy& policy, const RolloutBuffer& buffer,
                             const std::vector<int>& indices, const TrainConfig& config);
MinibatchEval eval_minibatch(const DistributedPolicy& policy, const RolloutBuffer& buffer,
                             const std::vector<int>& indices, const TrainConfig& config);

UpdateStats ppo_update(CentralisedPolicy& policy, const RolloutBuffer& buffer,
                       const TrainConfig& config, OptimState& optim);
UpdateStats ppo_update(DistributedPolicy& policy, const RolloutBuffer& buffer,
                       const TrainConfig& config, OptimState& optim);

}  // namespace softarm
