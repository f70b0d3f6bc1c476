#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "mmnls/autodiff.hpp"

namespace mmnls {

enum class Activation { tanhshrink, identity };

/// Residual network over inputs (t, zeta): affine embedding 2 -> width,
/// n_blocks residual blocks (two affine width -> width layers, activation
/// after each, identity skip around the pair), affine width -> n_outputs.
struct NetworkSpec {
  int n_blocks = 6;
  int width = 150;
  int n_inputs = 2;
  int n_outputs = 6;   ///< 2 per mode (Re, Im)
  Activation activation = Activation::tanhshrink;

  void validate() const;
  std::uint64_t hash() const;
};

/// Flat parameter vector plus the spec and the seed it was drawn with.
struct NetworkState {
  NetworkSpec spec;
  std::vector<double> params;
  std::uint64_t seed = 0;
};

/// Offsets into the flat parameter vector.
struct ParamLayout {
  explicit ParamLayout(const NetworkSpec& spec);

  std::size_t embed_w() const { return 0; }
  std::size_t embed_b() const { return static_cast<std::size_t>(width) * 2; }
  std::size_t block_w1(int b) const { return block0_ + static_cast<std::size_t>(b) * block_stride_; }
  std::size_t block_b1(int b) const { return block_w1(b) + ww_; }
  std::size_t block_w2(int b) const { return block_b1(b) + width; }
  std::size_t block_b2(int b) const { return block_w2(b) + ww_; }
  std::size_t out_w() const { return out_; }
  std::size_t out_b() const { return out_ + static_cast<std::size_t>(n_outputs) * width; }
  std::size_t total() const { return total_; }

  int width, n_blocks, n_outputs;

private:
  std::size_t ww_, block0_, block_stride_, out_, total_;
};

/// Uniform Xavier/Glorot draw, +-sqrt(6 / (fan_in + fan_out)) per weight
/// matrix, zero biases. Bit-reproducible for a fixed seed.
NetworkState xavier_init(const NetworkSpec& spec, std::uint64_t seed);

/// Scratch buffers for one point's forward/backward sweep; reuse across points.
struct Workspace {
  std::vector<double> jets;     // forward jet buffers (AoS, 4 per neuron)
  std::vector<double> tanhs;    // tanh(pre-activation value) per activation site
  std::vector<double> adj;      // adjoint buffers, same shape as jets
  std::vector<double> values;   // value-only forward buffers
  std::vector<double> vadj;
  double t = 0.0, zeta = 0.0;
};

class NetworkEngine {
public:
  explicit NetworkEngine(const NetworkSpec& spec);

  const NetworkSpec& spec() const { return spec_; }
  const ParamLayout& layout() const { return layout_; }

  /// Value and exact d/dt, d2/dt2, d/dzeta of every output via forward-mode
  /// propagation of truncated Taylor data. Throws std::runtime_error naming
  /// the layer if an intermediate turns non-finite.
  void forward_jet(const NetworkState& state, double t, double zeta, Workspace& ws,
                   std::span<Jet> out) const;

  /// Reverse sweep over the stored jet computation: accumulates
  /// d(sum_k seed_k . jet_k)/d(theta) into grad (same layout as params).
  void backward_jet(const NetworkState& state, Workspace& ws, std::span<const Jet> out_seeds,
                    std::span<double> grad) const;

  /// Plain forward pass (no input derivatives); cheaper path for boundary
  /// losses and inference.
  void forward_value(const NetworkState& state, double t, double zeta, Workspace& ws,
                     std::span<double> out) const;
  void backward_value(const NetworkState& state, Workspace& ws, std::span<const double> out_seeds,
                      std::span<double> grad) const;

private:
  NetworkSpec spec_;
  ParamLayout layout_;
};

/// Convenience single-point evaluation.
std::vector<Jet> forward_jet(const NetworkState& state, double t, double zeta);
std::vector<double> forward_value(const NetworkState& state, double t, double zeta);

struct CollocationPoint {
  double t = 0.0;
  double zeta = 0.0;
};

/// Per-point loss: receives the output jets, writes the adjoint seeds
/// d(loss)/d(jet component), returns the point's scalar loss.
using JetLossFn =
    std::function<double(std::size_t index, std::span<const Jet> jets, std::span<Jet> seeds)>;
/// Same contract for value-only losses.
using ValueLossFn = std::function<double(std::size_t index, std::span<const double> values,
                                         std::span<double> seeds)>;

/// Sum of per-point losses and its exact parameter gradient (differentiation
/// goes through the jet computation, so the loss may contain input
/// derivatives of the network). `deterministic` selects a fixed-order chunked
/// reduction independent of thread count; otherwise per-thread buffers are
/// merged unordered.
std::pair<double, std::vector<double>> loss_gradient(const NetworkState& state,
                                                     std::span<const CollocationPoint> batch,
                                                     const JetLossFn& loss_fn,
                                                     bool deterministic = true);

std::pair<double, std::vector<double>> value_loss_gradient(const NetworkState& state,
                                                           std::span<const CollocationPoint> batch,
                                                           const ValueLossFn& loss_fn,
                                                           bool deterministic = true);

}  // namespace mmnls
