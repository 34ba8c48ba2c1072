#pragma once

#include "icbac/ledger.hpp"

namespace icbac {

/// Flag a participant as anomalous: all further requests come back Pending
/// until an admin reviews them. Idempotent.
void add_prl(ChannelState& channel, const std::string& participant);

/// Release a participant from the revoke list. Admin only.
void remove_prl(ChannelState& channel, const std::string& caller, const std::string& participant);

/// Three-way access decision:
///   Deny     - requestor is not a channel member, or lacks the privilege
///   Pending  - requestor is on the PRL; the request is queued for review
///   Allow    - member, not revoked, operation in least-or-extra privileges
/// Every call appends a decision entry to the channel log.
AccessDecision check_access(ChannelState& channel, const AccessRequest& request);

enum class ReviewVerdict { Approve, Reject };

enum class ReviewOutcome {
  Executed,  // approved and permitted by least/extra privileges; applied
  Denied,    // approved but not permitted; nothing applied
  Rejected,  // rejected by the admin; nothing applied
};

std::string to_string(ReviewOutcome outcome);

/// Settle one queued request by ticket. Approval lifts the PRL hold for this
/// request only; privileges are re-checked before anything executes, and PRL
/// membership itself is untouched (release needs remove_prl).
ReviewOutcome review_pending(ChannelState& channel, const std::string& admin,
                             std::uint64_t ticket, ReviewVerdict verdict);

}  // namespace icbac
