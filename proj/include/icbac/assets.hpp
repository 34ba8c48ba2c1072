#pragma once

#include <variant>

#include "icbac/ledger.hpp"

namespace icbac {

/// Register a fresh asset with initial values for every declared attribute.
/// Admin only; the creation is logged.
void create_asset(ChannelState& channel, const std::string& admin, const AssetId& asset_id,
                  const std::map<std::string, std::string>& initial_values);

struct ExecValue {
  std::string value;
};  // successful Read
struct ExecAck {};  // successful Write/Update
struct ExecDecision {
  AccessDecision decision;
};  // Pending or Deny, nothing executed

using ExecuteResult = std::variant<ExecValue, ExecAck, ExecDecision>;

/// Sole request entry point: runs check_access and, on Allow, performs the
/// operation. Reads never mutate; Write and Update replace the attribute
/// value and bump the asset version. Committed operations are logged.
ExecuteResult execute(ChannelState& channel, const AccessRequest& request);

namespace detail {
// Applies an already-authorized request and logs the commit. Shared by
// execute (after Allow) and review_pending (after admin approval).
ExecuteResult apply_allowed(ChannelState& channel, const AccessRequest& request,
                            std::uint64_t timestamp);
}  // namespace detail

}  // namespace icbac
