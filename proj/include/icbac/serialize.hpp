#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "icbac/ledger.hpp"

#include "json.hpp"

namespace icbac {

/// Shortest round-trip decimal formatting; stable across runs.
std::string fmt_double(double v);

nlohmann::json log_entry_to_json(const LogEntry& entry);
LogEntry log_entry_from_json(const nlohmann::json& j);

/// One LogEntry per line, hashes hex-encoded lowercase.
std::string log_to_jsonl(const std::vector<LogEntry>& log);
std::vector<LogEntry> log_from_jsonl(std::istream& in);

/// Permission records keyed by hex digest; operation sets as sorted arrays.
nlohmann::json permissions_to_json(const PermissionStore& store);

nlohmann::json pending_to_json(const std::deque<PendingRequest>& pending);

/// Snapshot of the full channel state (log serialized separately as JSONL).
nlohmann::json channel_to_json(const ChannelState& channel);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace icbac
