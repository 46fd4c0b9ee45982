#pragma once

#include <softarm/ppo.hpp>
#include <softarm/reach_env.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace softarm {

// Persistent rollout workers: envs keep their episodes across updates, obs is
// the matching cursor (the observation each env will act on next).
struct EnvPool {
    std::vector<ReachEnv> envs;
    std::vector<ObservationSet> obs;

    static EnvPool make(const RodParams& rod, const EnvConfig& config, int num_envs);
};

// One on-policy batch, env-major (column env*steps_per_env + t). Action noise
// for env e comes from Rng(mix_keys(seed, e, update_index)), so results are
// independent of collection order. Throws std::runtime_error with diagnostics
// if the physics produces a non-finite observation or reward.
RolloutBuffer collect_rollouts(const CentralisedPolicy& policy, EnvPool& pool, int steps_per_env,
                               uint64_t seed, uint64_t update_index);
RolloutBuffer collect_rollouts(const DistributedPolicy& policy, EnvPool& pool, int steps_per_env,
                               uint64_t seed, uint64_t update_index);

struct TrainSetup {
    Architecture architecture = Architecture::centralised;
    RodParams rod;
    EnvConfig env;
    TrainConfig train;
    std::filesystem::path out_dir;
    int checkpoint_retention = 3;  // periodic checkpoints kept (final is always kept)
    int eval_episodes = 20;
    std::string fingerprint;       // embedded in every artifact header
};

struct TrainResult {
    std::filesystem::path final_checkpoint;
    std::filesystem::path training_log;
    std::filesystem::path eval_log;
    std::vector<std::filesystem::path> checkpoints;  // retained periodic checkpoints
    int updates_completed = 0;
    double final_eval_success_rate = 0.0;
};

// Full training loop: collect -> GAE -> PPO per update; every
// train.eval_every updates a checkpoint is written (pruned to
// checkpoint_retention) and 20 deterministic episodes are scored into
// eval_log.csv. training_log.csv rows:
// update,mean_reward,entropy,policy_loss,value_loss,grad_norm,wall_clock_s.
TrainResult train(const TrainSetup& setup);

}  // namespace softarm
