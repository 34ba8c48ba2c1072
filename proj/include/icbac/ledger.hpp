#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "icbac/permissions.hpp"
#include "icbac/sha256.hpp"
#include "icbac/types.hpp"

namespace icbac {

/// One entry of the per-channel append-only hash chain.
/// entry_hash = SHA256(prev_hash || payload); entry 0 chains from 32 zero bytes.
struct LogEntry {
  std::uint64_t seq = 0;
  Digest prev_hash{};
  std::string payload;
  Digest entry_hash{};

  bool operator==(const LogEntry&) const = default;
};

struct AssetRecord {
  AssetId asset;
  std::map<std::string, std::string> values;
  std::uint64_t version = 0;

  bool operator==(const AssetRecord&) const = default;
};

enum class AccessDecision { Allow, Deny, Pending };

std::string to_string(AccessDecision d);

/// A request held for admin review because its requestor was on the PRL.
struct PendingRequest {
  std::uint64_t ticket = 0;  // stable id, assigned at enqueue time
  AccessRequest request;
  std::uint64_t submitted_at = 0;
  std::string requestor;
};

struct ChainStatus {
  bool valid = true;
  std::uint64_t corrupt_at = 0;  // meaningful only when !valid
};

/// Counters used by tests to check that mutations never outrun Allow
/// decisions and that federated runs move no raw records between channels.
struct ChannelCounters {
  std::uint64_t allow_decisions = 0;
  std::uint64_t asset_mutations = 0;

  bool operator==(const ChannelCounters&) const = default;
};

/// Full state of one simulated channel: membership, assets, permission
/// records, revoke list, pending queue and the hash-chained log. Single
/// writer per channel; value semantics otherwise.
struct ChannelState {
  std::string channel_id;
  std::map<std::string, Role> participants;
  std::set<std::string> admins;
  std::set<std::string> prl;
  std::map<std::string, AssetRecord> assets;
  PermissionStore permissions;
  std::deque<PendingRequest> pending;
  std::vector<LogEntry> log;
  std::uint64_t clock = 0;        // logical event counter, used as timestamp
  std::uint64_t next_ticket = 0;  // pending-queue ticket source
  ChannelCounters counters;

  bool is_member(const std::string& participant) const {
    return participants.contains(participant);
  }
  bool is_admin(const std::string& participant) const { return admins.contains(participant); }
};

ChannelState create_channel(const std::string& channel_id,
                            const std::vector<ParticipantId>& participants,
                            const std::set<std::string>& admins);

/// Append a payload to the channel log, chaining from the previous entry.
const LogEntry& append_log(ChannelState& channel, const std::string& payload);

/// Recompute every entry hash and check seq contiguity and linkage.
ChainStatus verify_chain(const ChannelState& channel);
ChainStatus verify_chain(const std::vector<LogEntry>& log);

/// Canonical event payload: fixed field order (participant, asset, attribute,
/// operation, value, decision, timestamp), length-prefix encoded.
std::string make_event_payload(const std::string& participant, const std::string& asset,
                               const std::string& attribute, const std::string& operation,
                               const std::string& value, const std::string& decision,
                               std::uint64_t timestamp);

}  // namespace icbac
