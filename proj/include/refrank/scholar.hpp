#pragma once

#include <optional>
#include <string>
#include <vector>

#include "refrank/fetch.hpp"

namespace refrank::scholar {

/// A public scholar profile id: exactly 12 characters, each an ASCII
/// letter, digit, underscore or hyphen.
struct ScholarId {
    std::string id;

    static bool is_valid(const std::string& s);
    static ScholarId parse(const std::string& s);  // throws IdNotFound on invalid input
};

struct ScholarProfile {
    ScholarId id;
    std::string short_name;  // the query name that resolved to this profile
    std::string full_name;
    std::string affiliation;
    int h_index = 0;
    int i10_index = 0;
    long citations = 0;
    std::optional<std::string> verified_email_domain;
    std::optional<std::string> homepage_url;
    std::vector<std::string> warnings;  // soft consistency findings, e.g. h^2 > citations
};

/// URL templates and extraction patterns. Page markup drifts; the patterns
/// live here rather than in code. Each field pattern is a regular
/// expression with one capture group.
struct ScholarConfig {
    std::string search_url_template =
        "https://scholar.google.com/citations?view_op=search_authors&mauthors={name}";
    std::string profile_url_template = "https://scholar.google.com/citations?user={id}&hl=en";
    std::string id_pattern = R"re(user=([A-Za-z0-9_-]{12})(?=[^A-Za-z0-9_-]|$))re";
    std::string full_name_pattern = R"re(<div id="gsc_prf_in">([^<]*)</div>)re";
    std::string affiliation_pattern = R"re(<div class="gsc_prf_il">([^<]*)</div>)re";
    std::string citations_pattern = R"re(Citations</td><td class="gsc_rsb_std">([0-9]+)</td>)re";
    std::string h_index_pattern = R"re(h-index</td><td class="gsc_rsb_std">([0-9]+)</td>)re";
    std::string i10_index_pattern = R"re(i10-index</td><td class="gsc_rsb_std">([0-9]+)</td>)re";
    std::string email_domain_pattern = R"re(Verified email at ([A-Za-z0-9.-]+))re";
    std::string homepage_pattern = R"re(<a href="([^"]+)" class="gsc_prf_ila">)re";
    std::string coauthor_pattern = R"re(<a class="gsc_coa_name" href="[^"]*">([^<]+)</a>)re";
    int parallelism = 4;
    int politeness_delay_ms = 1000;
};

enum class ResolveFailure { id_not_found, profile_parse_error, http_error, cache_miss };

std::string to_string(ResolveFailure f);

/// Outcome of resolving one name: either a profile or a failure reason.
struct Resolution {
    std::string name;
    std::optional<ScholarProfile> profile;
    std::optional<ResolveFailure> failure;
    std::string detail;
};

/// Collapses whitespace runs in the name to single '+' and substitutes into
/// the template's {name} placeholder. Throws EmptyName.
std::string build_search_url(const std::string& name, const ScholarConfig& config);

std::string build_profile_url(const ScholarId& id, const ScholarConfig& config);

/// First substring matching the configured id pattern that validates as a
/// ScholarId. Throws IdNotFound when there is none.
ScholarId extract_profile_id(const std::string& html, const ScholarConfig& config);

/// Pulls the profile fields out of a profile page. Missing optional fields
/// (email domain, homepage) yield absent values; any other missing field
/// throws ProfileParseError naming it.
ScholarProfile parse_profile(const std::string& html, const std::string& query_name,
                             const ScholarConfig& config);

/// Names listed in a profile's co-author section, in page order.
std::vector<std::string> extract_coauthors(const std::string& html, const ScholarConfig& config);

/// search -> id -> profile page -> parse. Soft failures (no id, parse
/// error, HTTP >= 400, cache miss) produce an absent profile with a reason;
/// transport failures in live mode propagate as FetchError.
Resolution resolve(const std::string& name, fetch::Fetcher& fetcher, const ScholarConfig& config);

}  // namespace refrank::scholar
