#include "icbac/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace icbac {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

json log_entry_to_json(const LogEntry& entry) {
  return json{{"seq", entry.seq},
              {"prev_hash", digest_hex(entry.prev_hash)},
              {"payload", entry.payload},
              {"entry_hash", digest_hex(entry.entry_hash)}};
}

LogEntry log_entry_from_json(const json& j) {
  LogEntry entry;
  entry.seq = j.at("seq").get<std::uint64_t>();
  entry.prev_hash = digest_from_hex(j.at("prev_hash").get<std::string>());
  entry.payload = j.at("payload").get<std::string>();
  entry.entry_hash = digest_from_hex(j.at("entry_hash").get<std::string>());
  return entry;
}

std::string log_to_jsonl(const std::vector<LogEntry>& log) {
  std::string out;
  for (const LogEntry& entry : log) {
    out += log_entry_to_json(entry).dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<LogEntry> log_from_jsonl(std::istream& in) {
  std::vector<LogEntry> log;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    log.push_back(log_entry_from_json(json::parse(line)));
  }
  return log;
}

json permissions_to_json(const PermissionStore& store) {
  json out = json::object();
  for (const auto& [digest, record] : store.records()) {
    json least = json::object();
    for (const auto& [attr, ops] : record.least) least[attr] = ops.names();
    json extra = json::object();
    for (const auto& [attr, ops] : record.extra) extra[attr] = ops.names();
    out[digest_hex(digest)] = json{{"least", least}, {"extra", extra}};
  }
  return out;
}

json pending_to_json(const std::deque<PendingRequest>& pending) {
  json out = json::array();
  for (const PendingRequest& p : pending) {
    out.push_back(json{{"ticket", p.ticket},
                       {"requestor", p.requestor},
                       {"submitted_at", p.submitted_at},
                       {"participant", p.request.participant},
                       {"asset", p.request.asset},
                       {"attribute", p.request.attribute},
                       {"operation", to_string(p.request.operation)},
                       {"value", p.request.value.value_or("")}});
  }
  return out;
}

json channel_to_json(const ChannelState& channel) {
  json participants = json::object();
  for (const auto& [id, role] : channel.participants) participants[id] = to_string(role);

  json assets = json::object();
  for (const auto& [id, record] : channel.assets) {
    assets[id] = json{{"attributes", record.asset.attributes},
                      {"values", record.values},
                      {"version", record.version}};
  }

  return json{{"channel_id", channel.channel_id},
              {"participants", participants},
              {"admins", std::vector<std::string>(channel.admins.begin(), channel.admins.end())},
              {"prl", std::vector<std::string>(channel.prl.begin(), channel.prl.end())},
              {"assets", assets},
              {"permissions", permissions_to_json(channel.permissions)},
              {"pending", pending_to_json(channel.pending)},
              {"log_length", channel.log.size()},
              {"clock", channel.clock}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for read: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace icbac
