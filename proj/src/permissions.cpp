#include "icbac/permissions.hpp"

#include <algorithm>

namespace icbac {

Digest index_of(const std::string& participant, const std::string& asset) {
  validate_identifier(participant);
  validate_identifier(asset);
  std::string bytes;
  bytes.reserve(participant.size() + 1 + asset.size());
  bytes += participant;
  bytes.push_back(kFieldSep);
  bytes += asset;
  return sha256(bytes);
}

const PermissionRecord* PermissionStore::find(const std::string& participant,
                                              const std::string& asset) const {
  auto it = records_.find(index_of(participant, asset));
  return it == records_.end() ? nullptr : &it->second;
}

PermissionRecord& PermissionStore::obtain(const std::string& participant,
                                          const std::string& asset) {
  Digest key = index_of(participant, asset);
  PermissionRecord& rec = records_[key];
  rec.index = key;
  return rec;
}

static void require_admin(const std::set<std::string>& admins, const std::string& caller) {
  if (!admins.contains(caller)) throw Error(ErrorCode::NotAdmin, caller);
}

static void require_attribute(const AssetId& asset, const std::string& attribute) {
  if (std::find(asset.attributes.begin(), asset.attributes.end(), attribute) ==
      asset.attributes.end())
    throw Error(ErrorCode::UnknownAttribute,
                "attribute '" + attribute + "' not declared on asset '" + asset.id + "'");
}

void set_least(PermissionStore& store, const std::set<std::string>& admins,
               const std::string& caller, const std::string& participant, const AssetId& asset,
               const std::string& attribute, OpSet ops) {
  require_admin(admins, caller);
  require_attribute(asset, attribute);
  store.obtain(participant, asset.id).least[attribute] = ops;
}

bool check_permission(const PermissionStore& store, const std::string& participant,
                      const std::string& asset, const std::string& attribute, Operation op) {
  const PermissionRecord* rec = store.find(participant, asset);
  if (rec == nullptr) return false;
  OpSet allowed;
  if (auto it = rec->least.find(attribute); it != rec->least.end()) allowed = it->second;
  if (auto it = rec->extra.find(attribute); it != rec->extra.end())
    allowed = allowed.united(it->second);
  return allowed.contains(op);
}

void promote(PermissionStore& store, const std::set<std::string>& admins,
             const std::string& caller, const std::string& participant, const AssetId& asset,
             const std::string& attribute, Operation op) {
  require_admin(admins, caller);
  require_attribute(asset, attribute);
  store.obtain(participant, asset.id).extra[attribute].insert(op);
}

void demote(PermissionStore& store, const std::set<std::string>& admins, const std::string& caller,
            const std::string& participant, const AssetId& asset, const std::string& attribute,
            Operation op) {
  require_admin(admins, caller);
  require_attribute(asset, attribute);
  store.obtain(participant, asset.id).extra[attribute].erase(op);
}

}  // namespace icbac
