#include "icbac/assets.hpp"

#include <algorithm>

#include "icbac/revocation.hpp"

namespace icbac {

void create_asset(ChannelState& channel, const std::string& admin, const AssetId& asset_id,
                  const std::map<std::string, std::string>& initial_values) {
  if (!channel.is_admin(admin)) throw Error(ErrorCode::NotAdmin, admin);
  validate_asset_id(asset_id);
  if (channel.assets.contains(asset_id.id)) throw Error(ErrorCode::DuplicateAsset, asset_id.id);
  if (initial_values.size() != asset_id.attributes.size())
    throw Error(ErrorCode::AttributeMismatch, asset_id.id);
  for (const auto& attr : asset_id.attributes) {
    if (!initial_values.contains(attr))
      throw Error(ErrorCode::AttributeMismatch, "missing value for '" + attr + "'");
  }

  std::uint64_t now = channel.clock++;
  channel.assets.emplace(asset_id.id, AssetRecord{asset_id, initial_values, 0});
  append_log(channel, make_event_payload(admin, asset_id.id, "", "create", "", "created", now));
}

namespace detail {

ExecuteResult apply_allowed(ChannelState& channel, const AccessRequest& request,
                            std::uint64_t timestamp) {
  auto asset_it = channel.assets.find(request.asset);
  if (asset_it == channel.assets.end()) throw Error(ErrorCode::UnknownAsset, request.asset);
  AssetRecord& record = asset_it->second;
  auto value_it = record.values.find(request.attribute);
  if (value_it == record.values.end())
    throw Error(ErrorCode::UnknownAttribute,
                "attribute '" + request.attribute + "' on asset '" + request.asset + "'");

  ExecuteResult result = ExecAck{};
  if (request.operation == Operation::Read) {
    result = ExecValue{value_it->second};
  } else {
    // Write and Update both replace the whole value; they differ only as
    // permission labels so a policy can grant one without the other.
    value_it->second = request.value.value_or("");
    ++record.version;
    ++channel.counters.asset_mutations;
  }

  append_log(channel, make_event_payload(request.participant, request.asset, request.attribute,
                                         to_string(request.operation), request.value.value_or(""),
                                         "committed", timestamp));
  return result;
}

}  // namespace detail

ExecuteResult execute(ChannelState& channel, const AccessRequest& request) {
  AccessDecision decision = check_access(channel, request);
  if (decision != AccessDecision::Allow) return ExecDecision{decision};
  // check_access advanced the clock; reuse its timestamp for the commit entry.
  return detail::apply_allowed(channel, request, channel.clock - 1);
}

}  // namespace icbac
