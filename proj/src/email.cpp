#include "refrank/email.hpp"

#include <algorithm>
#include <regex>
#include <unordered_set>

#include "refrank/strings.hpp"

namespace refrank::email {

namespace {

bool is_local_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '.' || c == '_' || c == '-';
}

bool is_domain_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '-' || c == '_';
}

std::string domain_of(const std::string& address) {
    const auto at = address.find('@');
    return at == std::string::npos ? std::string() : address.substr(at + 1);
}

// Lowercase alphanumeric runs of length >= 2; initials are too weak a signal.
std::vector<std::string> name_tokens(const std::string& s) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : strings::to_lower_ascii(s)) {
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
            cur.push_back(c);
        } else if (!cur.empty()) {
            if (cur.size() >= 2) tokens.push_back(cur);
            cur.clear();
        }
    }
    if (cur.size() >= 2) tokens.push_back(cur);
    return tokens;
}

}  // namespace

std::string to_string(EmailFailure f) {
    switch (f) {
        case EmailFailure::no_homepage: return "no_homepage";
        case EmailFailure::none_found: return "none_found";
        case EmailFailure::cache_miss: return "cache_miss";
        case EmailFailure::http_error: return "http_error";
    }
    return "unknown";
}

bool is_valid_email(const std::string& s) {
    const auto at = s.find('@');
    if (at == std::string::npos || at == 0 || at + 1 >= s.size()) return false;
    if (s.find('@', at + 1) != std::string::npos) return false;
    bool dot_in_domain = false;
    for (std::size_t i = 0; i < at; ++i) {
        if (!is_local_char(s[i])) return false;
    }
    for (std::size_t i = at + 1; i < s.size(); ++i) {
        if (s[i] == '.') {
            // No empty labels.
            if (i == at + 1 || i + 1 >= s.size() || s[i + 1] == '.') return false;
            dot_in_domain = true;
        } else if (!is_domain_char(s[i])) {
            return false;
        }
    }
    return dot_in_domain;
}

std::vector<std::string> extract_emails(const std::string& text) {
    static const std::regex kAddress(
        R"([A-Za-z0-9._-]+@[A-Za-z0-9_-]+(?:\.[A-Za-z0-9_-]+)+)");
    std::vector<std::string> found;
    std::unordered_set<std::string> seen;  // folded
    for (auto it = std::sregex_iterator(text.begin(), text.end(), kAddress);
         it != std::sregex_iterator(); ++it) {
        const std::size_t pos = static_cast<std::size_t>(it->position());
        // "a@b@c.d": the trailing "b@c.d" piece is not an address on its own.
        if (pos > 0 && text[pos - 1] == '@') continue;
        const std::string address = it->str();
        if (!is_valid_email(address)) continue;
        const std::string folded = strings::to_lower_ascii(address);
        if (seen.insert(folded).second) found.push_back(address);
    }
    return found;
}

EmailOutcome find_reviewer_email(const scholar::ScholarProfile& profile,
                                 fetch::Fetcher& fetcher) {
    EmailOutcome out;
    if (!profile.homepage_url) {
        out.failure = EmailFailure::no_homepage;
        return out;
    }

    const auto page = fetcher.fetch(*profile.homepage_url);
    if (!page) {
        out.failure = EmailFailure::cache_miss;
        return out;
    }
    if (page->status >= 400) {
        out.failure = EmailFailure::http_error;
        return out;
    }

    const std::vector<std::string> addresses = extract_emails(page->body);
    if (addresses.empty()) {
        out.failure = EmailFailure::none_found;
        return out;
    }

    const auto verified_domain =
        profile.verified_email_domain ? strings::to_lower_ascii(*profile.verified_email_domain)
                                      : std::string();

    auto tokens = name_tokens(profile.short_name);
    for (const auto& t : name_tokens(profile.full_name)) tokens.push_back(t);

    const std::string* best = nullptr;
    // (1) verified domain
    if (!verified_domain.empty()) {
        for (const auto& a : addresses) {
            if (strings::to_lower_ascii(domain_of(a)) == verified_domain) {
                best = &a;
                break;
            }
        }
    }
    // (2) local part shares a name token
    if (!best) {
        for (const auto& a : addresses) {
            const auto local_tokens = name_tokens(a.substr(0, a.find('@')));
            const bool shares = std::any_of(
                local_tokens.begin(), local_tokens.end(), [&](const std::string& lt) {
                    return std::find(tokens.begin(), tokens.end(), lt) != tokens.end();
                });
            if (shares) {
                best = &a;
                break;
            }
        }
    }
    // (3) first found
    if (!best) best = &addresses.front();

    EmailCandidate candidate;
    candidate.address = *best;
    candidate.source_url = *profile.homepage_url;
    candidate.domain_verified =
        !verified_domain.empty() && strings::to_lower_ascii(domain_of(*best)) == verified_domain;
    out.found = std::move(candidate);
    return out;
}

}  // namespace refrank::email
