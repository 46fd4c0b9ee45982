#pragma once

#include <json.hpp>

#include <softarm/ppo.hpp>
#include <softarm/reach_env.hpp>
#include <softarm/rod.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace softarm {

struct EvalSuiteConfig {
    std::vector<int> n_values{2, 6};
    std::vector<int> scenarios{1};
    int episodes = 100;
    uint64_t base_seed = 0;
};

struct IoConfig {
    std::string output_dir = "runs";
    int checkpoint_retention = 3;
};

struct RunConfig {
    int version = 1;
    RodParams rod;
    EnvConfig env;
    TrainConfig train;
    EvalSuiteConfig eval;
    IoConfig io;
};

// Strict parse: `version` is mandatory and must equal 1; every other block
// and field is optional (defaults above); unknown keys anywhere are hard
// errors naming the offending path.
RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::filesystem::path& path);

nlohmann::json run_config_to_json(const RunConfig& config);
void save_run_config(const std::filesystem::path& path, const RunConfig& config);

// 16-hex digest of the resolved experiment (version/rod/env/train/eval). The
// io block is excluded so runs that differ only in artifact location produce
// byte-identical logs; equal fingerprints come from equal experiments.
std::string config_fingerprint(const RunConfig& config);

// desk: 500 updates x 4 envs, minibatch 4000; paper: 10000 x 8, minibatch 8192
void apply_profile(RunConfig& config, const std::string& profile);

}  // namespace softarm
