#include "icbac/ledger.hpp"

namespace icbac {

std::string to_string(AccessDecision d) {
  switch (d) {
    case AccessDecision::Allow:
      return "allow";
    case AccessDecision::Deny:
      return "deny";
    case AccessDecision::Pending:
      return "pending";
  }
  return "unknown";
}

ChannelState create_channel(const std::string& channel_id,
                            const std::vector<ParticipantId>& participants,
                            const std::set<std::string>& admins) {
  validate_identifier(channel_id);
  if (admins.empty()) throw Error(ErrorCode::EmptyAdmins, "channel '" + channel_id + "'");

  ChannelState channel;
  channel.channel_id = channel_id;
  for (const auto& p : participants) {
    validate_identifier(p.id);
    if (!channel.participants.emplace(p.id, p.role).second)
      throw Error(ErrorCode::DuplicateParticipant, p.id);
  }
  for (const auto& admin : admins) {
    if (!channel.participants.contains(admin)) throw Error(ErrorCode::AdminNotMember, admin);
  }
  channel.admins = admins;
  return channel;
}

static Digest chain_hash(const Digest& prev, const std::string& payload) {
  std::string bytes;
  bytes.reserve(prev.size() + payload.size());
  bytes.append(reinterpret_cast<const char*>(prev.data()), prev.size());
  bytes += payload;
  return sha256(bytes);
}

const LogEntry& append_log(ChannelState& channel, const std::string& payload) {
  LogEntry entry;
  entry.seq = channel.log.size();
  entry.prev_hash = channel.log.empty() ? kZeroDigest : channel.log.back().entry_hash;
  entry.payload = payload;
  entry.entry_hash = chain_hash(entry.prev_hash, payload);
  channel.log.push_back(std::move(entry));
  return channel.log.back();
}

ChainStatus verify_chain(const std::vector<LogEntry>& log) {
  Digest prev = kZeroDigest;
  for (std::uint64_t i = 0; i < log.size(); ++i) {
    const LogEntry& entry = log[i];
    if (entry.seq != i || entry.prev_hash != prev ||
        chain_hash(entry.prev_hash, entry.payload) != entry.entry_hash)
      return ChainStatus{false, i};
    prev = entry.entry_hash;
  }
  return ChainStatus{true, 0};
}

ChainStatus verify_chain(const ChannelState& channel) { return verify_chain(channel.log); }

std::string make_event_payload(const std::string& participant, const std::string& asset,
                               const std::string& attribute, const std::string& operation,
                               const std::string& value, const std::string& decision,
                               std::uint64_t timestamp) {
  return canonical_join(
      {participant, asset, attribute, operation, value, decision, std::to_string(timestamp)});
}

}  // namespace icbac
