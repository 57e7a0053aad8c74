#pragma once

#include <Eigen/Core>
#include <json.hpp>

#include <span>
#include <string>
#include <vector>

#include "beamtune/rng.hpp"

namespace beamtune {

enum class Activation { Relu, Tanh, Linear };

std::string activation_name(Activation a);
Activation activation_from_name(const std::string& name);

struct DenseLayer {
  Eigen::MatrixXd weight;  // out x in
  Eigen::VectorXd bias;    // out
  Activation activation = Activation::Linear;

  int input_dim() const { return static_cast<int>(weight.cols()); }
  int output_dim() const { return static_cast<int>(weight.rows()); }
};

struct LayerGradient {
  Eigen::MatrixXd weight;
  Eigen::VectorXd bias;
};

struct MlpGradients {
  std::vector<LayerGradient> layers;
  Eigen::MatrixXd input;  // d(loss)/d(input), one column per sample
};

// Dense feed-forward network. Batches are column-major: one column per sample.
class Mlp {
 public:
  Mlp() = default;
  explicit Mlp(std::vector<DenseLayer> layers);

  // Xavier-uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero biases.
  // `sizes` has one more entry than `activations`.
  static Mlp xavier(std::span<const int> sizes, std::span<const Activation> activations, Rng& rng);

  int input_dim() const;
  int output_dim() const;
  const std::vector<DenseLayer>& layers() const { return layers_; }
  std::vector<DenseLayer>& layers() { return layers_; }

  // Inference without touching the backprop cache.
  Eigen::VectorXd predict(std::span<const double> input) const;
  Eigen::MatrixXd predict_batch(const Eigen::MatrixXd& input) const;

  // Forward pass that caches activations for backward().
  const Eigen::MatrixXd& forward(const Eigen::MatrixXd& input);

  // Reverse-mode gradients of sum(upstream .* output) for the cached batch.
  // Throws std::logic_error if forward() has not run.
  MlpGradients backward(const Eigen::MatrixXd& upstream) const;

  bool same_architecture(const Mlp& other) const;
  bool all_finite() const;

  friend bool operator==(const Mlp& a, const Mlp& b);

 private:
  std::vector<DenseLayer> layers_;
  std::vector<Eigen::MatrixXd> activations_;  // [0] = input, [i + 1] = output of layer i
};

struct AdamState {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  long step = 0;
  std::vector<LayerGradient> first_moment;
  std::vector<LayerGradient> second_moment;

  static AdamState for_network(const Mlp& net, double learning_rate);
  friend bool operator==(const AdamState& a, const AdamState& b);
};

// One bias-corrected Adam update of every parameter in `net`.
void adam_step(Mlp& net, const MlpGradients& grads, AdamState& state);

// target <- (1 - tau) * target + tau * source, tau in (0, 1].
void soft_update(Mlp& target, const Mlp& source, double tau);

// Checkpoint encoding. Weights are stored row-major as JSON numbers, which
// nlohmann::json writes in shortest round-trip form, so save/load is exact.
nlohmann::json to_json(const Mlp& net);
Mlp mlp_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AdamState& state);
AdamState adam_from_json(const nlohmann::json& j);

}  // namespace beamtune
