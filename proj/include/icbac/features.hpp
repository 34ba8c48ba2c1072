#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icbac/types.hpp"

namespace icbac {

/// One behavioral access record, as emitted by the scenario generator or
/// loaded from a stream CSV. `scenario` tags injected perturbations and is
/// not part of the wire format.
struct RawEvent {
  std::string channel;
  double timestamp = 0.0;  // simulated seconds since channel start
  std::string participant;
  Role role = Role::Factory;
  std::string asset;
  std::string attribute;
  Operation operation = Operation::Read;
  std::string value;  // empty for Read
  bool anomalous = false;
  std::string scenario;
};

inline constexpr std::size_t kNumericFeatures = 4;
// one-hot role (3) || one-hot operation (3) || standardized numeric block (4)
inline constexpr std::size_t kFeatureDim = 6 + kNumericFeatures;

/// Behavioral feature vector of one access event.
struct EventVector {
  std::array<double, kFeatureDim> features{};
  std::string actor;
  std::optional<bool> anomalous;
};

/// Mean/stdev of the numeric block on the training split. Constant features
/// standardize with stdev 1 so the mapping stays invertible.
struct FeatureStats {
  std::array<double, kNumericFeatures> mean{};
  std::array<double, kNumericFeatures> stdev{1.0, 1.0, 1.0, 1.0};
};

/// Rolling derivation state for the history-dependent numeric features.
/// Feed events strictly in stream order.
struct EncoderContext {
  std::map<std::string, double> last_time_by_actor;
  std::map<std::string, double> last_value_by_target;  // keyed asset 0x1f attribute
  std::deque<std::string> recent_actors;               // at most the last 10 actors
};

/// Raw (unstandardized) numeric block for one event:
///   0: signed log of the value change against the previous value of the
///      same (asset, attribute) target
///   1: log1p of the time since the actor's previous event
///   2: share of the last 10 channel events attributed to this actor
///   3: log1p of the absolute numeric value
std::array<double, kNumericFeatures> derive_numerics(const RawEvent& event, EncoderContext& ctx);

/// Encode one event with the fixed d=10 layout, standardizing the numeric
/// block with the supplied training statistics.
EventVector encode_event(const RawEvent& event, EncoderContext& ctx, const FeatureStats& stats);

/// Population mean/stdev of the numeric block over indices [0, train_end).
FeatureStats compute_stats(const std::vector<RawEvent>& events, std::size_t train_end);

/// Encode a whole channel stream in order with one shared context.
std::vector<EventVector> encode_stream(const std::vector<RawEvent>& events,
                                       const FeatureStats& stats);

double standardize_value(double raw, double mean, double stdev);
double destandardize_value(double z, double mean, double stdev);

/// Sliding window: the T events preceding the target, flattened oldest
/// first, plus the target vector being predicted. Stride 1.
struct Window {
  std::vector<double> flat;  // T * kFeatureDim values
  std::array<double, kFeatureDim> target{};
  std::string actor;         // actor of the target event
  bool anomalous = false;    // label of the target event
  std::size_t target_index = 0;
};

/// Windows for every target index in [T, n).
std::vector<Window> build_windows(const std::vector<EventVector>& events, std::size_t window_len);

}  // namespace icbac
