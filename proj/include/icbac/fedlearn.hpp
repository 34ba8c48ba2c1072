#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icbac/model.hpp"

namespace icbac {

struct LrSchedule {
  double initial = 0.01;
  double final = 0.01;
  enum class Shape { Constant, Geometric } shape = Shape::Geometric;
};

/// Learning rate for one round; geometric decay hits `initial` at round 0
/// and `final` at the last round exactly.
double round_lr(const LrSchedule& schedule, std::size_t round, std::size_t total_rounds);

struct FLRoundConfig {
  std::size_t rounds = 50;
  std::size_t local_epochs = 1;
  LrSchedule lr;
  std::size_t batch_size = 32;
  double tau_percentile = 99.0;
  std::uint64_t seed = 0;
  bool parallel = true;
};

/// Sample-count-weighted element-wise mean of the client parameter vectors.
ModelParams fedavg(const std::vector<ModelParams>& clients);

struct EvalMetrics {
  double accuracy = 0.0, precision = 0.0, recall = 0.0, f1 = 0.0, mean_loss = 0.0;
  std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
};

struct Confusion {
  std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
  double loss_sum = 0.0;
  std::uint64_t n = 0;

  void add(const Confusion& other);
};

/// Confusion counts of (score > tau) against the window labels.
Confusion confusion_of(const ModelParams& params, const std::vector<Window>& eval_windows,
                       double tau);

/// Accuracy/precision/recall/F1 from counts; 0 when a denominator is 0.
EvalMetrics metrics_from(const Confusion& c);

/// Predicted-positive = (score > tau); mean_loss is the mean window score.
EvalMetrics evaluate(const ModelParams& params, const std::vector<Window>& eval_windows,
                     double tau);

/// One federated client: window views into channel-local data. run_rounds
/// only ever reads these views and moves parameter vectors; raw windows
/// never cross a channel boundary.
struct FlClient {
  std::string id;
  const std::vector<Window>* train = nullptr;
  const std::vector<Window>* val_normal = nullptr;
  const std::vector<Window>* eval = nullptr;
};

struct RoundReport {
  std::size_t round = 0;
  std::vector<double> client_losses;  // final-epoch mean loss per client
  EvalMetrics metrics;                // pooled over member eval splits
  double tau = 0.0;
  std::uint64_t bytes_shared = 0;     // cumulative serialized update volume
};

struct FlRunResult {
  std::vector<RoundReport> reports;
  ModelParams final_params;
  double final_tau = 0.0;
  std::uint64_t bytes_shared = 0;
};

/// Synchronous FedAvg over the coalition: broadcast, local training, and
/// weighted aggregation each round, with threshold recalibration on pooled
/// validation scores and pooled evaluation. With a single member this
/// degenerates to pure local training and shares zero bytes.
FlRunResult run_rounds(const ModelParams& initial, const std::vector<FlClient>& members,
                       const FLRoundConfig& config);

/// Communication-exposure accounting for one experiment run.
struct PrivacyTrace {
  std::uint64_t raw_bytes_crossed = 0;      // raw records sent across channels
  std::uint64_t update_bytes_shared = 0;    // serialized parameter uploads
  std::uint64_t total_local_data_bytes = 0; // serialized size of all local records
};

/// Headline metric: raw record bytes crossing channel boundaries over total
/// local data bytes. Zero by construction for federated runs.
double raw_leakage(const PrivacyTrace& trace);

/// Diagnostic variant: parameter-update bytes over total local data bytes.
double update_leakage(const PrivacyTrace& trace);

}  // namespace icbac
