#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "icbac/features.hpp"
#include "icbac/ledger.hpp"

namespace icbac {

struct ModelDims {
  std::size_t window = 10;  // T
  std::size_t dim = kFeatureDim;
  std::size_t hidden = 32;

  std::size_t input() const { return window * dim; }
  std::size_t param_count() const {
    return input() * hidden + hidden + hidden * dim + dim;
  }

  bool operator==(const ModelDims&) const = default;
};

/// Flat parameter vector of the single-hidden-layer predictor
///   prediction = W2 * tanh(W1 * flat_window + b1) + b2
/// packed as W1 (hidden x input, row-major) | b1 | W2 (dim x hidden) | b2.
struct ModelParams {
  ModelDims dims;
  std::vector<double> theta;
  std::uint64_t sample_count = 0;
};

ModelParams init_params(const ModelDims& dims, std::uint64_t seed);
ModelParams zero_params(const ModelDims& dims);

/// Deterministic forward pass over one flattened window.
std::vector<double> predict(const ModelParams& params, std::span<const double> flat_window);

/// Squared Euclidean distance between the target and the prediction.
double loss(const ModelParams& params, const Window& window);

/// Anomaly score of an event given its preceding window; same formula as
/// loss, exposed separately for inference.
double score(const ModelParams& params, const Window& window);

/// Gradient of loss(params, window) with respect to theta, by backprop.
std::vector<double> loss_gradient(const ModelParams& params, const Window& window);

struct TrainReport {
  std::vector<double> epoch_mean_loss;
};

/// Mini-batch gradient descent on the mean window loss. Windows are
/// reshuffled every epoch from the given seed; sample_count is set to the
/// dataset size. epoch_lrs must hold one rate per epoch (a single value
/// broadcasts).
TrainReport train_local(ModelParams& params, const std::vector<Window>& dataset,
                        std::size_t epochs, const std::vector<double>& epoch_lrs,
                        std::size_t batch_size, std::uint64_t seed);

/// Nearest-rank percentile of the scores: the ceil(p/100 * n)-th smallest.
double nearest_rank_percentile(std::vector<double> scores, double percentile);

/// Threshold = the given percentile of scores on normal-only validation
/// windows (nearest-rank definition).
double calibrate_tau(const ModelParams& params, const std::vector<Window>& validation,
                     double percentile);

/// Consecutive-over-threshold flagging per actor: an actor is flagged once
/// k of their consecutive events score above tau.
class AnomalyMonitor {
 public:
  AnomalyMonitor(double tau, int flag_policy_k)
      : tau_(tau), flag_policy_k_(flag_policy_k) {}

  /// Returns true when this observation newly flags the actor.
  bool observe(const std::string& actor, double event_score);

  const std::set<std::string>& flagged() const { return flagged_; }

 private:
  double tau_;
  int flag_policy_k_;
  std::map<std::string, int> consecutive_;
  std::set<std::string> flagged_;
};

/// Score the windows in order and insert every flagged actor into the
/// channel's PRL. Returns the actors flagged by this call.
std::set<std::string> monitor(ChannelState& channel, const ModelParams& params,
                              const std::vector<Window>& windows, double tau, int flag_policy_k);

/// Checkpoint format: one JSON header line (dims, sample_count) followed by
/// the raw little-endian doubles of theta.
std::string params_to_checkpoint(const ModelParams& params);
ModelParams params_from_checkpoint(const std::string& bytes);

}  // namespace icbac
