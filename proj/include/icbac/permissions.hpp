#pragma once

#include <map>
#include <set>
#include <string>

#include "icbac/sha256.hpp"
#include "icbac/types.hpp"

namespace icbac {

/// Least/extra privilege maps for one (participant, asset) pair, keyed by the
/// SHA-256 index of the pair. Least privileges are the static baseline; extra
/// privileges are the only sets promote/demote may touch.
struct PermissionRecord {
  Digest index{};
  std::map<std::string, OpSet> least;
  std::map<std::string, OpSet> extra;

  bool operator==(const PermissionRecord&) const = default;
};

/// SHA-256 over the participant and asset ids joined by the 0x1f separator.
Digest index_of(const std::string& participant, const std::string& asset);

class PermissionStore {
 public:
  /// Record for the pair, or nullptr when none exists (deny by default).
  const PermissionRecord* find(const std::string& participant, const std::string& asset) const;

  PermissionRecord& obtain(const std::string& participant, const std::string& asset);

  const std::map<Digest, PermissionRecord>& records() const { return records_; }

  bool operator==(const PermissionStore&) const = default;

 private:
  std::map<Digest, PermissionRecord> records_;
};

/// Replace the least-privilege operation set for one attribute. Admin only.
void set_least(PermissionStore& store, const std::set<std::string>& admins,
               const std::string& caller, const std::string& participant, const AssetId& asset,
               const std::string& attribute, OpSet ops);

/// True iff the operation is in the union of least and extra privileges.
/// A missing record or attribute entry reads as the empty set.
bool check_permission(const PermissionStore& store, const std::string& participant,
                      const std::string& asset, const std::string& attribute, Operation op);

/// Add one operation to the extra-privilege set. Least privileges untouched.
void promote(PermissionStore& store, const std::set<std::string>& admins,
             const std::string& caller, const std::string& participant, const AssetId& asset,
             const std::string& attribute, Operation op);

/// Remove one operation from the extra-privilege set. Least privileges untouched.
void demote(PermissionStore& store, const std::set<std::string>& admins, const std::string& caller,
            const std::string& participant, const AssetId& asset, const std::string& attribute,
            Operation op);

}  // namespace icbac
