#include "icbac/fedlearn.hpp"

#include <cmath>
#include <future>

#include "icbac/rng.hpp"

namespace icbac {

double round_lr(const LrSchedule& schedule, std::size_t round, std::size_t total_rounds) {
  if (schedule.shape == LrSchedule::Shape::Constant || total_rounds <= 1)
    return schedule.initial;
  double fraction = static_cast<double>(round) / static_cast<double>(total_rounds - 1);
  return schedule.initial * std::pow(schedule.final / schedule.initial, fraction);
}

ModelParams fedavg(const std::vector<ModelParams>& clients) {
  if (clients.empty()) throw Error(ErrorCode::ZeroSamples, "no clients to aggregate");
  const ModelDims& dims = clients.front().dims;
  std::uint64_t total = 0;
  for (const ModelParams& client : clients) {
    if (client.dims != dims || client.theta.size() != clients.front().theta.size())
      throw Error(ErrorCode::DimensionMismatch, "client parameter shapes differ");
    total += client.sample_count;
  }
  if (total == 0) throw Error(ErrorCode::ZeroSamples, "total sample count is zero");

  ModelParams out = zero_params(dims);
  out.sample_count = total;
  for (const ModelParams& client : clients) {
    double w = static_cast<double>(client.sample_count) / static_cast<double>(total);
    for (std::size_t i = 0; i < out.theta.size(); ++i) out.theta[i] += w * client.theta[i];
  }
  return out;
}

void Confusion::add(const Confusion& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  tn += other.tn;
  loss_sum += other.loss_sum;
  n += other.n;
}

Confusion confusion_of(const ModelParams& params, const std::vector<Window>& eval_windows,
                       double tau) {
  Confusion c;
  for (const Window& w : eval_windows) {
    double s = score(params, w);
    bool predicted = s > tau;
    if (predicted && w.anomalous) ++c.tp;
    else if (predicted && !w.anomalous) ++c.fp;
    else if (!predicted && w.anomalous) ++c.fn;
    else ++c.tn;
    c.loss_sum += s;
    ++c.n;
  }
  return c;
}

EvalMetrics metrics_from(const Confusion& c) {
  EvalMetrics m;
  m.tp = c.tp;
  m.fp = c.fp;
  m.fn = c.fn;
  m.tn = c.tn;
  double total = static_cast<double>(c.tp + c.fp + c.fn + c.tn);
  m.accuracy = total > 0 ? static_cast<double>(c.tp + c.tn) / total : 0.0;
  m.precision = (c.tp + c.fp) > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp)
                                  : 0.0;
  m.recall = (c.tp + c.fn) > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn)
                               : 0.0;
  m.f1 = (m.precision + m.recall) > 0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                                      : 0.0;
  m.mean_loss = c.n > 0 ? c.loss_sum / static_cast<double>(c.n) : 0.0;
  return m;
}

EvalMetrics evaluate(const ModelParams& params, const std::vector<Window>& eval_windows,
                     double tau) {
  if (eval_windows.empty()) throw Error(ErrorCode::EmptyEval, "no evaluation windows");
  return metrics_from(confusion_of(params, eval_windows, tau));
}

FlRunResult run_rounds(const ModelParams& initial, const std::vector<FlClient>& members,
                       const FLRoundConfig& config) {
  if (members.empty()) throw Error(ErrorCode::ZeroSamples, "coalition has no members");
  if (config.rounds == 0 || config.local_epochs == 0)
    throw Error(ErrorCode::InvalidConfig, "rounds and local_epochs must be positive");
  if (config.lr.initial < config.lr.final || config.lr.final <= 0.0)
    throw Error(ErrorCode::InvalidConfig, "learning-rate schedule needs initial >= final > 0");
  for (const FlClient& member : members) {
    if (member.train == nullptr || member.train->empty())
      throw Error(ErrorCode::EmptyDataset, "member '" + member.id + "' has no training windows");
  }

  FlRunResult result;
  result.final_params = initial;
  std::uint64_t update_bytes_per_round =
      members.size() > 1
          ? static_cast<std::uint64_t>(members.size()) * initial.theta.size() * sizeof(double)
          : 0;

  for (std::size_t round = 0; round < config.rounds; ++round) {
    double lr = round_lr(config.lr, round, config.rounds);

    // Local training from the broadcast model; deterministic per-client
    // seeds keep the outcome independent of scheduling.
    std::vector<ModelParams> locals(members.size());
    std::vector<double> losses(members.size(), 0.0);
    auto train_one = [&](std::size_t i) {
      ModelParams local = result.final_params;
      TrainReport report =
          train_local(local, *members[i].train, config.local_epochs, {lr}, config.batch_size,
                      derive_seed(config.seed, round * 131071 + i));
      losses[i] = report.epoch_mean_loss.back();
      locals[i] = std::move(local);
    };
    if (config.parallel && members.size() > 1) {
      std::vector<std::future<void>> tasks;
      tasks.reserve(members.size());
      for (std::size_t i = 0; i < members.size(); ++i)
        tasks.push_back(std::async(std::launch::async, train_one, i));
      for (auto& task : tasks) task.get();
    } else {
      for (std::size_t i = 0; i < members.size(); ++i) train_one(i);
    }

    result.final_params = fedavg(locals);
    result.bytes_shared += update_bytes_per_round;

    // Threshold from pooled validation scores (scalar aggregates only).
    std::vector<double> val_scores;
    for (const FlClient& member : members) {
      if (member.val_normal == nullptr) continue;
      for (const Window& w : *member.val_normal)
        val_scores.push_back(score(result.final_params, w));
    }
    double tau = val_scores.empty() ? 0.0
                                    : nearest_rank_percentile(val_scores, config.tau_percentile);

    Confusion pooled;
    for (const FlClient& member : members) {
      if (member.eval == nullptr) continue;
      pooled.add(confusion_of(result.final_params, *member.eval, tau));
    }

    RoundReport report;
    report.round = round;
    report.client_losses = losses;
    report.metrics = metrics_from(pooled);
    report.tau = tau;
    report.bytes_shared = result.bytes_shared;
    result.reports.push_back(std::move(report));
    result.final_tau = tau;
  }
  return result;
}

double raw_leakage(const PrivacyTrace& trace) {
  if (trace.total_local_data_bytes == 0) return 0.0;
  return static_cast<double>(trace.raw_bytes_crossed) /
         static_cast<double>(trace.total_local_data_bytes);
}

double update_leakage(const PrivacyTrace& trace) {
  if (trace.total_local_data_bytes == 0) return 0.0;
  return static_cast<double>(trace.update_bytes_shared) /
         static_cast<double>(trace.total_local_data_bytes);
}

}  // namespace icbac
