#include "icbac/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "icbac/revocation.hpp"
#include "icbac/rng.hpp"

#include "json.hpp"

namespace icbac {

ModelParams zero_params(const ModelDims& dims) {
  return ModelParams{dims, std::vector<double>(dims.param_count(), 0.0), 0};
}

ModelParams init_params(const ModelDims& dims, std::uint64_t seed) {
  ModelParams params = zero_params(dims);
  Rng rng(seed);
  std::size_t m = dims.input();
  std::size_t h = dims.hidden;
  std::size_t d = dims.dim;
  double w1_scale = 1.0 / std::sqrt(static_cast<double>(m));
  double w2_scale = 1.0 / std::sqrt(static_cast<double>(h));
  for (std::size_t i = 0; i < h * m; ++i) params.theta[i] = rng.uniform(-w1_scale, w1_scale);
  // b1 stays zero
  for (std::size_t i = 0; i < d * h; ++i)
    params.theta[h * m + h + i] = rng.uniform(-w2_scale, w2_scale);
  // b2 stays zero
  return params;
}

namespace {

struct ParamView {
  const double* w1;  // h x m
  const double* b1;  // h
  const double* w2;  // d x h
  const double* b2;  // d
  std::size_t m, h, d;
};

ParamView view(const ModelParams& params) {
  const ModelDims& dims = params.dims;
  std::size_t m = dims.input(), h = dims.hidden, d = dims.dim;
  const double* base = params.theta.data();
  return ParamView{base, base + h * m, base + h * m + h, base + h * m + h + d * h, m, h, d};
}

void check_dims(const ModelParams& params, std::size_t flat_size) {
  if (params.theta.size() != params.dims.param_count())
    throw Error(ErrorCode::DimensionMismatch, "theta length does not match dims");
  if (flat_size != params.dims.input())
    throw Error(ErrorCode::DimensionMismatch, "window length does not match dims");
}

// Forward pass writing the hidden activation and prediction into scratch.
void forward(const ParamView& p, const double* x, double* hidden_act, double* prediction) {
  for (std::size_t j = 0; j < p.h; ++j) {
    const double* row = p.w1 + j * p.m;
    double acc = p.b1[j];
    for (std::size_t i = 0; i < p.m; ++i) acc += row[i] * x[i];
    hidden_act[j] = std::tanh(acc);
  }
  for (std::size_t k = 0; k < p.d; ++k) {
    const double* row = p.w2 + k * p.h;
    double acc = p.b2[k];
    for (std::size_t j = 0; j < p.h; ++j) acc += row[j] * hidden_act[j];
    prediction[k] = acc;
  }
}

// Accumulates d(loss)/d(theta) into grad; returns the window loss.
double backward(const ParamView& p, const double* x, const double* target, double* grad) {
  std::vector<double> hidden_act(p.h), prediction(p.d);
  forward(p, x, hidden_act.data(), prediction.data());

  double window_loss = 0.0;
  std::vector<double> d_pred(p.d);
  for (std::size_t k = 0; k < p.d; ++k) {
    double r = prediction[k] - target[k];
    window_loss += r * r;
    d_pred[k] = 2.0 * r;
  }

  double* g_w1 = grad;
  double* g_b1 = grad + p.h * p.m;
  double* g_w2 = g_b1 + p.h;
  double* g_b2 = g_w2 + p.d * p.h;

  std::vector<double> d_hidden(p.h, 0.0);
  for (std::size_t k = 0; k < p.d; ++k) {
    double dk = d_pred[k];
    double* row = g_w2 + k * p.h;
    const double* w2_row = p.w2 + k * p.h;
    for (std::size_t j = 0; j < p.h; ++j) {
      row[j] += dk * hidden_act[j];
      d_hidden[j] += dk * w2_row[j];
    }
    g_b2[k] += dk;
  }
  for (std::size_t j = 0; j < p.h; ++j) {
    double dz = d_hidden[j] * (1.0 - hidden_act[j] * hidden_act[j]);
    double* row = g_w1 + j * p.m;
    for (std::size_t i = 0; i < p.m; ++i) row[i] += dz * x[i];
    g_b1[j] += dz;
  }
  return window_loss;
}

}  // namespace

std::vector<double> predict(const ModelParams& params, std::span<const double> flat_window) {
  check_dims(params, flat_window.size());
  ParamView p = view(params);
  std::vector<double> hidden_act(p.h), prediction(p.d);
  forward(p, flat_window.data(), hidden_act.data(), prediction.data());
  return prediction;
}

double loss(const ModelParams& params, const Window& window) {
  check_dims(params, window.flat.size());
  ParamView p = view(params);
  std::vector<double> hidden_act(p.h), prediction(p.d);
  forward(p, window.flat.data(), hidden_act.data(), prediction.data());
  double out = 0.0;
  for (std::size_t k = 0; k < p.d; ++k) {
    double r = window.target[k] - prediction[k];
    out += r * r;
  }
  return out;
}

double score(const ModelParams& params, const Window& window) { return loss(params, window); }

std::vector<double> loss_gradient(const ModelParams& params, const Window& window) {
  check_dims(params, window.flat.size());
  std::vector<double> grad(params.theta.size(), 0.0);
  backward(view(params), window.flat.data(), window.target.data(), grad.data());
  return grad;
}

TrainReport train_local(ModelParams& params, const std::vector<Window>& dataset,
                        std::size_t epochs, const std::vector<double>& epoch_lrs,
                        std::size_t batch_size, std::uint64_t seed) {
  if (dataset.empty()) throw Error(ErrorCode::EmptyDataset, "no training windows");
  if (batch_size == 0) throw Error(ErrorCode::InvalidConfig, "batch size must be positive");
  if (epoch_lrs.empty() || (epoch_lrs.size() != 1 && epoch_lrs.size() != epochs))
    throw Error(ErrorCode::InvalidConfig, "need one learning rate, or one per epoch");
  check_dims(params, dataset.front().flat.size());

  TrainReport report;
  std::vector<std::size_t> order(dataset.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  std::vector<double> grad(params.theta.size());

  for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
    double lr = epoch_lrs.size() == 1 ? epoch_lrs[0] : epoch_lrs[epoch];
    rng.shuffle(order);
    double loss_sum = 0.0;

    for (std::size_t start = 0; start < order.size(); start += batch_size) {
      std::size_t end = std::min(start + batch_size, order.size());
      std::fill(grad.begin(), grad.end(), 0.0);
      ParamView p = view(params);
      for (std::size_t i = start; i < end; ++i) {
        const Window& w = dataset[order[i]];
        loss_sum += backward(p, w.flat.data(), w.target.data(), grad.data());
      }
      double step = lr / static_cast<double>(end - start);
      for (std::size_t i = 0; i < params.theta.size(); ++i) params.theta[i] -= step * grad[i];
    }
    report.epoch_mean_loss.push_back(loss_sum / static_cast<double>(dataset.size()));
  }

  params.sample_count = dataset.size();
  return report;
}

double nearest_rank_percentile(std::vector<double> scores, double percentile) {
  if (scores.empty()) throw Error(ErrorCode::EmptyValidation, "no scores");
  std::sort(scores.begin(), scores.end());
  double rank = std::ceil(percentile / 100.0 * static_cast<double>(scores.size()));
  std::size_t index = static_cast<std::size_t>(std::max(rank, 1.0)) - 1;
  return scores[std::min(index, scores.size() - 1)];
}

double calibrate_tau(const ModelParams& params, const std::vector<Window>& validation,
                     double percentile) {
  if (validation.empty()) throw Error(ErrorCode::EmptyValidation, "no validation windows");
  std::vector<double> scores;
  scores.reserve(validation.size());
  for (const Window& w : validation) scores.push_back(score(params, w));
  return nearest_rank_percentile(std::move(scores), percentile);
}

bool AnomalyMonitor::observe(const std::string& actor, double event_score) {
  if (event_score > tau_) {
    int count = ++consecutive_[actor];
    if (count >= flag_policy_k_ && flagged_.insert(actor).second) return true;
  } else {
    consecutive_[actor] = 0;
  }
  return false;
}

std::set<std::string> monitor(ChannelState& channel, const ModelParams& params,
                              const std::vector<Window>& windows, double tau, int flag_policy_k) {
  AnomalyMonitor watch(tau, flag_policy_k);
  std::set<std::string> flagged;
  for (const Window& w : windows) {
    if (watch.observe(w.actor, score(params, w))) {
      flagged.insert(w.actor);
      if (!channel.prl.contains(w.actor)) add_prl(channel, w.actor);
    }
  }
  return flagged;
}

std::string params_to_checkpoint(const ModelParams& params) {
  nlohmann::json header{{"window", params.dims.window},
                        {"dim", params.dims.dim},
                        {"hidden", params.dims.hidden},
                        {"sample_count", params.sample_count},
                        {"dtype", "f64le"}};
  std::string out = header.dump();
  out.push_back('\n');
  std::size_t offset = out.size();
  out.resize(offset + params.theta.size() * sizeof(double));
  std::memcpy(out.data() + offset, params.theta.data(), params.theta.size() * sizeof(double));
  return out;
}

ModelParams params_from_checkpoint(const std::string& bytes) {
  std::size_t newline = bytes.find('\n');
  if (newline == std::string::npos)
    throw Error(ErrorCode::InvalidConfig, "checkpoint missing header line");
  nlohmann::json header = nlohmann::json::parse(bytes.substr(0, newline));
  ModelParams params;
  params.dims.window = header.at("window").get<std::size_t>();
  params.dims.dim = header.at("dim").get<std::size_t>();
  params.dims.hidden = header.at("hidden").get<std::size_t>();
  params.sample_count = header.at("sample_count").get<std::uint64_t>();
  std::size_t payload = bytes.size() - newline - 1;
  if (payload != params.dims.param_count() * sizeof(double))
    throw Error(ErrorCode::DimensionMismatch, "checkpoint payload size");
  params.theta.resize(params.dims.param_count());
  std::memcpy(params.theta.data(), bytes.data() + newline + 1, payload);
  return params;
}

}  // namespace icbac
