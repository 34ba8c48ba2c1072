#include "icbac/features.hpp"

#include <charconv>
#include <cmath>

namespace icbac {

static std::optional<double> parse_numeric(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

static double signed_log(double x) { return x < 0 ? -std::log1p(-x) : std::log1p(x); }

std::array<double, kNumericFeatures> derive_numerics(const RawEvent& event, EncoderContext& ctx) {
  std::array<double, kNumericFeatures> out{};

  std::optional<double> value = parse_numeric(event.value);
  std::string target_key = event.asset + kFieldSep + event.attribute;

  // 0: value change against the previous value written to the same target
  double delta = 0.0;
  if (value) {
    auto it = ctx.last_value_by_target.find(target_key);
    if (it != ctx.last_value_by_target.end()) delta = *value - it->second;
    ctx.last_value_by_target[target_key] = *value;
  }
  out[0] = signed_log(delta);

  // 1: inter-event gap for this actor (time since channel start on debut)
  double gap = event.timestamp;
  if (auto it = ctx.last_time_by_actor.find(event.participant);
      it != ctx.last_time_by_actor.end())
    gap = event.timestamp - it->second;
  ctx.last_time_by_actor[event.participant] = event.timestamp;
  out[1] = std::log1p(std::max(gap, 0.0));

  // 2: rolling share of the last 10 channel events made by this actor
  ctx.recent_actors.push_back(event.participant);
  if (ctx.recent_actors.size() > 10) ctx.recent_actors.pop_front();
  std::size_t mine = 0;
  for (const auto& actor : ctx.recent_actors)
    if (actor == event.participant) ++mine;
  out[2] = static_cast<double>(mine) / static_cast<double>(ctx.recent_actors.size());

  // 3: magnitude of the carried value
  out[3] = value ? std::log1p(std::fabs(*value)) : 0.0;

  return out;
}

double standardize_value(double raw, double mean, double stdev) { return (raw - mean) / stdev; }

double destandardize_value(double z, double mean, double stdev) { return z * stdev + mean; }

EventVector encode_event(const RawEvent& event, EncoderContext& ctx, const FeatureStats& stats) {
  if (event.role == Role::Admin)
    throw Error(ErrorCode::UnknownRole, "admin events carry no behavioral encoding");
  if (!std::isfinite(event.timestamp))
    throw Error(ErrorCode::NonFiniteFeature, "timestamp of event by " + event.participant);

  EventVector out;
  out.actor = event.participant;
  out.anomalous = event.anomalous;

  out.features[static_cast<std::size_t>(event.role)] = 1.0;
  out.features[3 + static_cast<std::size_t>(event.operation)] = 1.0;

  auto numerics = derive_numerics(event, ctx);
  for (std::size_t i = 0; i < kNumericFeatures; ++i) {
    double z = standardize_value(numerics[i], stats.mean[i], stats.stdev[i]);
    if (!std::isfinite(z))
      throw Error(ErrorCode::NonFiniteFeature, "feature " + std::to_string(i) + " of event by " +
                                                   event.participant);
    out.features[6 + i] = z;
  }
  return out;
}

FeatureStats compute_stats(const std::vector<RawEvent>& events, std::size_t train_end) {
  train_end = std::min(train_end, events.size());
  FeatureStats stats;
  if (train_end == 0) return stats;

  EncoderContext ctx;
  std::vector<std::array<double, kNumericFeatures>> rows;
  rows.reserve(train_end);
  for (std::size_t i = 0; i < train_end; ++i) rows.push_back(derive_numerics(events[i], ctx));

  for (std::size_t f = 0; f < kNumericFeatures; ++f) {
    double sum = 0.0;
    for (const auto& row : rows) sum += row[f];
    double mean = sum / static_cast<double>(rows.size());
    double var = 0.0;
    for (const auto& row : rows) var += (row[f] - mean) * (row[f] - mean);
    var /= static_cast<double>(rows.size());
    stats.mean[f] = mean;
    double sd = std::sqrt(var);
    stats.stdev[f] = sd < 1e-12 ? 1.0 : sd;
  }
  return stats;
}

std::vector<EventVector> encode_stream(const std::vector<RawEvent>& events,
                                       const FeatureStats& stats) {
  EncoderContext ctx;
  std::vector<EventVector> out;
  out.reserve(events.size());
  for (const RawEvent& event : events) out.push_back(encode_event(event, ctx, stats));
  return out;
}

std::vector<Window> build_windows(const std::vector<EventVector>& events,
                                  std::size_t window_len) {
  std::vector<Window> windows;
  if (window_len == 0 || events.size() <= window_len) return windows;
  windows.reserve(events.size() - window_len);
  for (std::size_t t = window_len; t < events.size(); ++t) {
    Window w;
    w.flat.reserve(window_len * kFeatureDim);
    for (std::size_t i = t - window_len; i < t; ++i)
      w.flat.insert(w.flat.end(), events[i].features.begin(), events[i].features.end());
    w.target = events[t].features;
    w.actor = events[t].actor;
    w.anomalous = events[t].anomalous.value_or(false);
    w.target_index = t;
    windows.push_back(std::move(w));
  }
  return windows;
}

}  // namespace icbac
