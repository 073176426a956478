#pragma once

#include <optional>
#include <string>
#include <vector>

#include "refrank/fetch.hpp"
#include "refrank/scholar.hpp"

namespace refrank::email {

struct EmailCandidate {
    std::string address;
    std::string source_url;
    bool domain_verified = false;  // address domain equals the profile's verified domain
};

enum class EmailFailure { no_homepage, none_found, cache_miss, http_error };

std::string to_string(EmailFailure f);

struct EmailOutcome {
    std::optional<EmailCandidate> found;
    std::optional<EmailFailure> failure;
};

/// Full-string check against the address shape: local part over
/// [A-Za-z0-9._-], exactly one '@', domain with at least one dot.
bool is_valid_email(const std::string& s);

/// All non-overlapping address matches in `text`, de-duplicated
/// case-insensitively, in order of first appearance.
std::vector<std::string> extract_emails(const std::string& text);

/// Fetches the profile's homepage and picks an address, preferring
/// (1) the profile's verified domain, then (2) a local part sharing a name
/// token, then (3) the first found. Obfuscated forms are not decoded.
EmailOutcome find_reviewer_email(const scholar::ScholarProfile& profile,
                                 fetch::Fetcher& fetcher);

}  // namespace refrank::email
