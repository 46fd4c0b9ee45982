#pragma once

#include <Eigen/Dense>

#include <softarm/rng.hpp>

#include <stdexcept>
#include <vector>

namespace softarm {

struct MlpSpec {
    std::vector<int> layer_widths;  // input, hidden..., output
    void validate(bool require_hidden) const;
};

// Plain dense net, tanh hidden activations, linear output. Batches are column
// vectors so forward/backward are straight GEMMs.
class Mlp {
  public:
    Mlp() = default;
    explicit Mlp(const MlpSpec& spec);  // zero-initialised

    // Orthogonal init (QR of a Gaussian matrix, sign-fixed), biases zero.
    // `output_gain` scales the last layer, `hidden_gain` the rest.
    static Mlp orthogonal(const MlpSpec& spec, Rng& rng, double output_gain,
                          double hidden_gain = 1.0);

    int input_dim() const { return static_cast<int>(weights.front().cols()); }
    int output_dim() const { return static_cast<int>(weights.back().rows()); }
    size_t n_layers() const { return weights.size(); }

    Eigen::MatrixXd forward(const Eigen::MatrixXd& input) const;

    struct Cache {
        std::vector<Eigen::MatrixXd> activations;  // [0] = input, [i] = layer i output
    };
    Eigen::MatrixXd forward_cached(const Eigen::MatrixXd& input, Cache& cache) const;

    struct Grads {
        std::vector<Eigen::MatrixXd> w;
        std::vector<Eigen::VectorXd> b;
        void setZero();
    };
    Grads zero_grads() const;

    // Chain rule from dL/d_output (same shape as the forward output; any batch
    // scaling must already be folded in). Accumulates into `grads`, returns
    // dL/d_input for upstream modules.
    Eigen::MatrixXd backward(const Cache& cache, const Eigen::MatrixXd& dl_doutput,
                             Grads& grads) const;

    Eigen::Index param_count() const;
    void pack_params(Eigen::VectorXd& out, Eigen::Index& offset) const;
    void unpack_params(const Eigen::VectorXd& in, Eigen::Index& offset);
    static void pack_grads(const Grads& grads, Eigen::VectorXd& out, Eigen::Index& offset);

    std::vector<Eigen::MatrixXd> weights;  // weights[i]: out_i x in_i
    std::vector<Eigen::VectorXd> biases;
};

// Adam over one flat parameter vector (elementwise, so any tensor grouping is
// equivalent); bias-corrected moments, beta1=0.9, beta2=0.999, eps=1e-8.
class Adam {
  public:
    Adam() = default;
    explicit Adam(Eigen::Index size)
        : m_(Eigen::ArrayXd::Zero(size)), v_(Eigen::ArrayXd::Zero(size)) {}

    void step(Eigen::VectorXd& params, const Eigen::VectorXd& grads, double lr);

  private:
    Eigen::ArrayXd m_, v_;
    long t_ = 0;
};

}  // namespace softarm
