#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace icbac {

// Separator byte used by canonical encodings. Forbidden in identifiers.
inline constexpr char kFieldSep = '\x1f';

enum class Role { Factory, Distributor, Retailer, Admin };

enum class Operation { Read, Write, Update };

inline constexpr std::array<Operation, 3> kAllOperations{Operation::Read, Operation::Write,
                                                         Operation::Update};

std::string to_string(Role role);
std::string to_string(Operation op);
Role role_from_string(const std::string& s);
Operation operation_from_string(const std::string& s);

enum class ErrorCode {
  EmptyAdmins,
  AdminNotMember,
  DuplicateParticipant,
  InvalidIdentifier,
  NotAdmin,
  NotMember,
  UnknownAttribute,
  UnknownAsset,
  DuplicateAsset,
  AttributeMismatch,
  BadIndex,
  UnknownRole,
  NonFiniteFeature,
  DimensionMismatch,
  EmptyDataset,
  EmptyValidation,
  EmptyEval,
  ZeroSamples,
  UnknownAgent,
  SelfFriend,
  AgentNotInCoalition,
  TooLarge,
  InvalidConfig,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct ParticipantId {
  std::string id;
  Role role = Role::Factory;
};

struct AssetId {
  std::string id;
  std::vector<std::string> attributes;
};

// Throws InvalidIdentifier on empty ids or ids containing the separator byte.
void validate_identifier(const std::string& id);
void validate_asset_id(const AssetId& asset);

/// Request tuple evaluated by the contracts. `value` must be absent for Read.
struct AccessRequest {
  std::string participant;
  std::string asset;
  std::string attribute;
  Operation operation = Operation::Read;
  std::optional<std::string> value;
};

/// Set of allowed operations, stored as a 3-bit mask.
class OpSet {
 public:
  OpSet() = default;
  explicit OpSet(std::initializer_list<Operation> ops) {
    for (Operation op : ops) insert(op);
  }

  static OpSet from_mask(unsigned mask) {
    OpSet s;
    s.mask_ = mask & 0x7u;
    return s;
  }

  bool contains(Operation op) const { return (mask_ >> bit(op)) & 1u; }
  void insert(Operation op) { mask_ |= 1u << bit(op); }
  void erase(Operation op) { mask_ &= ~(1u << bit(op)); }
  bool empty() const { return mask_ == 0; }
  unsigned mask() const { return mask_; }

  OpSet united(OpSet other) const { return from_mask(mask_ | other.mask_); }

  bool operator==(const OpSet&) const = default;

  /// Sorted operation names, the external serialization of the set.
  std::vector<std::string> names() const;

 private:
  static unsigned bit(Operation op) { return static_cast<unsigned>(op); }
  unsigned mask_ = 0;
};

// Canonical multi-field encoding: every field is emitted as
//   <decimal byte length> 0x1f <field bytes>
// with fields joined by a further 0x1f. Length prefixes keep the
// encoding injective even when field values contain the separator.
std::string canonical_join(const std::vector<std::string>& fields);

std::string to_hex(const unsigned char* data, std::size_t len);
std::vector<unsigned char> from_hex(const std::string& hex);

}  // namespace icbac
