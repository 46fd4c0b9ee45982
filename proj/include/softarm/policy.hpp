#pragma once

#include <Eigen/Dense>

#include <softarm/mlp.hpp>
#include <softarm/reach_env.hpp>
#include <softarm/rng.hpp>

#include <string>
#include <variant>
#include <vector>

namespace softarm {

enum class Architecture { centralised, distributed };

std::string to_string(Architecture arch);
Architecture architecture_from_string(const std::string& name);

// Network-input scaling: positions and target divided by rod length, forces by
// f_max. Observations stay raw everywhere else; only policies apply this.
struct ObsScaler {
    double length = 1.0;
    double f_max = 15.0;

    Eigen::VectorXd local_scale(int n_sections) const;   // for o_i (6n+4)
    Eigen::VectorXd global_scale(int n_sections) const;  // for s (6n+3)
};

constexpr int kMessageDim = 16;
constexpr double kLogStdMin = -20.0;
constexpr double kLogStdMax = 2.0;

// Action distribution in normalised units: mean = tanh(raw head) ∈ (−1, 1),
// initial σ = exp(0) = 1. The environment force is f_max times the draw
// (clamped per-axis by the env), so the deterministic action is
// f_max·tanh(raw) and exploration spans roughly half the actuator range.
struct DiagGaussian {
    Eigen::VectorXd mean;
    Eigen::VectorXd log_std;

    Eigen::VectorXd sample(Rng& rng) const;
    double log_prob(const Eigen::VectorXd& action) const;
    double entropy() const;
};

// Mean-field communication message c_i. Peer tuples are the 9-vectors
// [p_j, f_j, g] (already normalised); they are encoded and mean-pooled in a
// canonical (lexicographically sorted) order so the result is bitwise
// permutation-invariant, then passed through the aggregator.
Eigen::VectorXd encode_and_aggregate(const std::vector<Eigen::VectorXd>& peer_tuples,
                                     const Mlp& encoder, const Mlp& aggregator);

class CentralisedPolicy {
  public:
    CentralisedPolicy() = default;
    static CentralisedPolicy init(int n_sections, const ObsScaler& scaler, uint64_t seed);

    int n_sections() const { return n_; }
    int action_dim() const { return 3 * n_; }
    const ObsScaler& scaler() const { return scaler_; }

    DiagGaussian actor_forward(const Eigen::VectorXd& global_state) const;
    double value(const Eigen::VectorXd& global_state) const;

    // Rollout/eval; joint log-prob over all 3n dims (normalised units).
    // `normalised` receives the pre-scale draw the log-prob refers to.
    JointAction act(const ObservationSet& obs, bool deterministic, Rng& rng,
                    double* log_prob = nullptr, Eigen::VectorXd* normalised = nullptr) const;

    // ---- batched training path (columns = samples) ----
    struct ActorCache {
        Mlp::Cache net;
        Eigen::MatrixXd squash;  // tanh(raw head)
    };
    Eigen::MatrixXd actor_mean_batch(const Eigen::MatrixXd& global_states, ActorCache& cache) const;
    struct Grads {
        Mlp::Grads actor;
        Eigen::VectorXd log_std;
        Mlp::Grads critic;
    };
    Grads zero_grads() const;
    void actor_backward_batch(const ActorCache& cache, const Eigen::MatrixXd& dl_dmean,
                              Grads& grads) const;
    Eigen::VectorXd value_batch(const Eigen::MatrixXd& global_states,
                                Mlp::Cache* cache = nullptr) const;
    void critic_backward_batch(const Mlp::Cache& cache, const Eigen::MatrixXd& dl_dvalue,
                               Grads& grads) const;

    // ---- flat parameter views for the optimiser and gradient checks ----
    Eigen::Index actor_param_count() const;
    Eigen::Index critic_param_count() const;
    Eigen::VectorXd pack_actor_params() const;
    void unpack_actor_params(const Eigen::VectorXd& flat);
    Eigen::VectorXd pack_critic_params() const;
    void unpack_critic_params(const Eigen::VectorXd& flat);
    Eigen::VectorXd pack_actor_grads(const Grads& grads) const;
    Eigen::VectorXd pack_critic_grads(const Grads& grads) const;
    void clamp_log_std();

    Mlp actor;                 // s_norm -> raw mean head (3n)
    Eigen::VectorXd log_std;   // 3n
    Mlp critic;                // s_norm -> value

  private:
    int n_ = 0;
    ObsScaler scaler_;
};

class DistributedPolicy {
  public:
    struct Agent {
        Mlp mean_net;  // [o_norm; c_i] -> raw mean head (3)
        Eigen::VectorXd log_std;
        Mlp encoder;     // 9 -> 64 -> 16
        Mlp aggregator;  // 16 -> 32 -> 16
    };

    DistributedPolicy() = default;
    static DistributedPolicy init(int n_sections, const ObsScaler& scaler, uint64_t seed);

    int n_sections() const { return n_; }
    const ObsScaler& scaler() const { return scaler_; }

    // c_i from a raw local observation (normalises internally).
    Eigen::VectorXd comm_message(int agent_index, const Eigen::VectorXd& local_obs) const;
    DiagGaussian actor_forward(int agent_index, const Eigen::VectorXd& local_obs) const;
    double value(const Eigen::VectorXd& global_state) const;

    // Decentralised execution: consumes only the local observations.
    // `normalised` receives the flattened pre-scale draw (3n).
    JointAction act(const std::vector<Eigen::VectorXd>& per_agent_obs, bool deterministic,
                    Rng& rng, Eigen::VectorXd* log_probs = nullptr,
                    Eigen::VectorXd* normalised = nullptr) const;

    // ---- batched training path ----
    struct AgentCache {
        Mlp::Cache encoder;
        Mlp::Cache aggregator;
        Mlp::Cache net;
        Eigen::MatrixXd squash;
        int batch = 0;
    };
    // local_obs_batch: (6n+4) x B raw observations for this agent
    Eigen::MatrixXd actor_mean_batch(int agent_index, const Eigen::MatrixXd& local_obs_batch,
                                     AgentCache& cache) const;
    struct AgentGrads {
        Mlp::Grads mean_net;
        Eigen::VectorXd log_std;
        Mlp::Grads encoder;
        Mlp::Grads aggregator;
    };
    struct Grads {
        std::vector<AgentGrads> agents;
        Mlp::Grads critic;
    };
    Grads zero_grads() const;
    void actor_backward_batch(int agent_index, const AgentCache& cache,
                              const Eigen::MatrixXd& dl_dmean, Grads& grads) const;
    Eigen::VectorXd value_batch(const Eigen::MatrixXd& global_states,
                                Mlp::Cache* cache = nullptr) const;
    void critic_backward_batch(const Mlp::Cache& cache, const Eigen::MatrixXd& dl_dvalue,
                               Grads& grads) const;

    Eigen::Index actor_param_count() const;  // all agents: mean nets, log_stds, comm nets
    Eigen::Index critic_param_count() const;
    Eigen::VectorXd pack_actor_params() const;
    void unpack_actor_params(const Eigen::VectorXd& flat);
    Eigen::VectorXd pack_critic_params() const;
    void unpack_critic_params(const Eigen::VectorXd& flat);
    Eigen::VectorXd pack_actor_grads(const Grads& grads) const;
    Eigen::VectorXd pack_critic_grads(const Grads& grads) const;
    void clamp_log_std();

    std::vector<Agent> agents;
    Mlp critic;

  private:
    // tuples sorted per sample; returns 9 x (B * (n-1)), sample-major
    Eigen::MatrixXd peer_tuples_batch(int agent_index,
                                      const Eigen::MatrixXd& obs_norm_batch) const;

    int n_ = 0;
    ObsScaler scaler_;
};

// Versioned binary checkpoint with embedded env/rod config and normalisation
// constants. Loading fails loudly on magic/version/shape mismatches.
struct LoadedPolicy {
    Architecture architecture = Architecture::centralised;
    EnvConfig env_config;
    RodParams rod_params;
    std::variant<CentralisedPolicy, DistributedPolicy> policy;
};

void save_checkpoint(const std::string& path, const CentralisedPolicy& policy,
                     const EnvConfig& env_config, const RodParams& rod_params);
void save_checkpoint(const std::string& path, const DistributedPolicy& policy,
                     const EnvConfig& env_config, const RodParams& rod_params);
LoadedPolicy load_checkpoint(const std::string& path);

}  // namespace softarm
