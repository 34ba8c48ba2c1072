#include "icbac/revocation.hpp"

#include <algorithm>

#include "icbac/assets.hpp"

namespace icbac {

std::string to_string(ReviewOutcome outcome) {
  switch (outcome) {
    case ReviewOutcome::Executed:
      return "executed";
    case ReviewOutcome::Denied:
      return "review-denied";
    case ReviewOutcome::Rejected:
      return "rejected";
  }
  return "unknown";
}

void add_prl(ChannelState& channel, const std::string& participant) {
  if (!channel.is_member(participant)) throw Error(ErrorCode::NotMember, participant);
  std::uint64_t now = channel.clock++;
  channel.prl.insert(participant);
  append_log(channel, make_event_payload(participant, "", "", "", "", "prl-add", now));
}

void remove_prl(ChannelState& channel, const std::string& caller,
                const std::string& participant) {
  if (!channel.is_admin(caller)) throw Error(ErrorCode::NotAdmin, caller);
  std::uint64_t now = channel.clock++;
  channel.prl.erase(participant);
  append_log(channel, make_event_payload(participant, "", "", "", "", "prl-remove", now));
}

static void log_decision(ChannelState& channel, const AccessRequest& request, AccessDecision d,
                         std::uint64_t timestamp) {
  append_log(channel,
             make_event_payload(request.participant, request.asset, request.attribute,
                                to_string(request.operation), request.value.value_or(""),
                                to_string(d), timestamp));
}

AccessDecision check_access(ChannelState& channel, const AccessRequest& request) {
  std::uint64_t now = channel.clock++;

  AccessDecision decision;
  if (!channel.is_member(request.participant)) {
    decision = AccessDecision::Deny;
  } else if (channel.prl.contains(request.participant)) {
    decision = AccessDecision::Pending;
    channel.pending.push_back(
        PendingRequest{channel.next_ticket++, request, now, request.participant});
  } else if (!check_permission(channel.permissions, request.participant, request.asset,
                               request.attribute, request.operation)) {
    decision = AccessDecision::Deny;
  } else {
    decision = AccessDecision::Allow;
    ++channel.counters.allow_decisions;
  }

  log_decision(channel, request, decision, now);
  return decision;
}

ReviewOutcome review_pending(ChannelState& channel, const std::string& admin,
                             std::uint64_t ticket, ReviewVerdict verdict) {
  if (!channel.is_admin(admin)) throw Error(ErrorCode::NotAdmin, admin);
  auto it = std::find_if(channel.pending.begin(), channel.pending.end(),
                         [&](const PendingRequest& p) { return p.ticket == ticket; });
  if (it == channel.pending.end())
    throw Error(ErrorCode::BadIndex, "no pending ticket " + std::to_string(ticket));

  PendingRequest item = *it;
  channel.pending.erase(it);
  std::uint64_t now = channel.clock++;

  auto asset_it = channel.assets.find(item.request.asset);
  bool applicable =
      asset_it != channel.assets.end() && asset_it->second.values.contains(item.request.attribute);

  ReviewOutcome outcome;
  if (verdict == ReviewVerdict::Reject) {
    outcome = ReviewOutcome::Rejected;
  } else if (channel.is_member(item.requestor) && applicable &&
             check_permission(channel.permissions, item.requestor, item.request.asset,
                              item.request.attribute, item.request.operation)) {
    // PRL hold lifted by the admin; privileges were re-checked above.
    ++channel.counters.allow_decisions;
    detail::apply_allowed(channel, item.request, now);
    outcome = ReviewOutcome::Executed;
  } else {
    outcome = ReviewOutcome::Denied;
  }

  append_log(channel, make_event_payload(item.requestor, item.request.asset,
                                         item.request.attribute, to_string(item.request.operation),
                                         item.request.value.value_or(""), to_string(outcome), now));
  return outcome;
}

}  // namespace icbac
