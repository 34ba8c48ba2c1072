#include "icbac/types.hpp"

#include <charconv>

namespace icbac {

std::string to_string(Role role) {
  switch (role) {
    case Role::Factory:
      return "factory";
    case Role::Distributor:
      return "distributor";
    case Role::Retailer:
      return "retailer";
    case Role::Admin:
      return "admin";
  }
  return "unknown";
}

std::string to_string(Operation op) {
  switch (op) {
    case Operation::Read:
      return "read";
    case Operation::Write:
      return "write";
    case Operation::Update:
      return "update";
  }
  return "unknown";
}

Role role_from_string(const std::string& s) {
  if (s == "factory") return Role::Factory;
  if (s == "distributor") return Role::Distributor;
  if (s == "retailer") return Role::Retailer;
  if (s == "admin") return Role::Admin;
  throw Error(ErrorCode::UnknownRole, s);
}

Operation operation_from_string(const std::string& s) {
  if (s == "read") return Operation::Read;
  if (s == "write") return Operation::Write;
  if (s == "update") return Operation::Update;
  throw Error(ErrorCode::InvalidConfig, "unknown operation '" + s + "'");
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyAdmins:
      return "EmptyAdmins";
    case ErrorCode::AdminNotMember:
      return "AdminNotMember";
    case ErrorCode::DuplicateParticipant:
      return "DuplicateParticipant";
    case ErrorCode::InvalidIdentifier:
      return "InvalidIdentifier";
    case ErrorCode::NotAdmin:
      return "NotAdmin";
    case ErrorCode::NotMember:
      return "NotMember";
    case ErrorCode::UnknownAttribute:
      return "UnknownAttribute";
    case ErrorCode::UnknownAsset:
      return "UnknownAsset";
    case ErrorCode::DuplicateAsset:
      return "DuplicateAsset";
    case ErrorCode::AttributeMismatch:
      return "AttributeMismatch";
    case ErrorCode::BadIndex:
      return "BadIndex";
    case ErrorCode::UnknownRole:
      return "UnknownRole";
    case ErrorCode::NonFiniteFeature:
      return "NonFiniteFeature";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::EmptyDataset:
      return "EmptyDataset";
    case ErrorCode::EmptyValidation:
      return "EmptyValidation";
    case ErrorCode::EmptyEval:
      return "EmptyEval";
    case ErrorCode::ZeroSamples:
      return "ZeroSamples";
    case ErrorCode::UnknownAgent:
      return "UnknownAgent";
    case ErrorCode::SelfFriend:
      return "SelfFriend";
    case ErrorCode::AgentNotInCoalition:
      return "AgentNotInCoalition";
    case ErrorCode::TooLarge:
      return "TooLarge";
    case ErrorCode::InvalidConfig:
      return "InvalidConfig";
  }
  return "Unknown";
}

void validate_identifier(const std::string& id) {
  if (id.empty()) throw Error(ErrorCode::InvalidIdentifier, "empty identifier");
  if (id.find(kFieldSep) != std::string::npos)
    throw Error(ErrorCode::InvalidIdentifier, "identifier contains separator byte 0x1f");
}

void validate_asset_id(const AssetId& asset) {
  validate_identifier(asset.id);
  if (asset.attributes.empty())
    throw Error(ErrorCode::InvalidIdentifier, "asset '" + asset.id + "' declares no attributes");
  std::set<std::string> seen;
  for (const auto& attr : asset.attributes) {
    validate_identifier(attr);
    if (!seen.insert(attr).second)
      throw Error(ErrorCode::InvalidIdentifier,
                  "duplicate attribute '" + attr + "' on asset '" + asset.id + "'");
  }
}

std::vector<std::string> OpSet::names() const {
  std::vector<std::string> out;
  // Sorted alphabetically: read < update < write.
  if (contains(Operation::Read)) out.push_back("read");
  if (contains(Operation::Update)) out.push_back("update");
  if (contains(Operation::Write)) out.push_back("write");
  return out;
}

std::string canonical_join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(kFieldSep);
    out += std::to_string(fields[i].size());
    out.push_back(kFieldSep);
    out += fields[i];
  }
  return out;
}

std::string to_hex(const unsigned char* data, std::size_t len) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(digits[data[i] >> 4]);
    out.push_back(digits[data[i] & 0xf]);
  }
  return out;
}

static int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw Error(ErrorCode::InvalidConfig, "bad hex digit");
}

std::vector<unsigned char> from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw Error(ErrorCode::InvalidConfig, "odd hex length");
  std::vector<unsigned char> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<unsigned char>(hex_value(hex[2 * i]) * 16 + hex_value(hex[2 * i + 1]));
  return out;
}

}  // namespace icbac
