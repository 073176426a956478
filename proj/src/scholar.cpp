#include "refrank/scholar.hpp"

#include <map>
#include <mutex>
#include <regex>

#include "refrank/errors.hpp"
#include "refrank/strings.hpp"

namespace refrank::scholar {

namespace {

constexpr std::size_t kIdLength = 12;

// Config patterns are compiled once and shared. Serializing construction
// also keeps concurrent resolve() calls away from libstdc++'s lazily
// initialized locale tables; matching against a const regex is safe.
const std::regex& compiled_pattern(const std::string& pattern) {
    static std::mutex mu;
    static std::map<std::string, std::regex> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(pattern);
    if (it == cache.end()) {
        try {
            it = cache.emplace(pattern, std::regex(pattern)).first;
        } catch (const std::regex_error& e) {
            throw ConfigError("bad extraction pattern '" + pattern + "': " + e.what());
        }
    }
    return it->second;
}

bool is_id_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-';
}

std::optional<std::string> first_capture(const std::string& html, const std::string& pattern) {
    std::smatch m;
    if (std::regex_search(html, m, compiled_pattern(pattern)) && m.size() >= 2) {
        return m[1].str();
    }
    return std::nullopt;
}

long required_number(const std::string& html, const std::string& pattern,
                     const std::string& field) {
    const auto raw = first_capture(html, pattern);
    if (!raw) throw ProfileParseError(field, "profile field not found: " + field);
    try {
        return std::stol(*raw);
    } catch (const std::exception&) {
        throw ProfileParseError(field, "profile field not numeric: " + field);
    }
}

}  // namespace

bool ScholarId::is_valid(const std::string& s) {
    if (s.size() != kIdLength) return false;
    for (char c : s) {
        if (!is_id_char(c)) return false;
    }
    return true;
}

ScholarId ScholarId::parse(const std::string& s) {
    if (!is_valid(s)) throw IdNotFound("not a valid scholar id: " + s);
    return ScholarId{s};
}

std::string to_string(ResolveFailure f) {
    switch (f) {
        case ResolveFailure::id_not_found: return "id_not_found";
        case ResolveFailure::profile_parse_error: return "profile_parse_error";
        case ResolveFailure::http_error: return "http_error";
        case ResolveFailure::cache_miss: return "cache_miss";
    }
    return "unknown";
}

std::string build_search_url(const std::string& name, const ScholarConfig& config) {
    const std::string collapsed = strings::collapse_whitespace(strings::trim(name));
    if (collapsed.empty()) throw EmptyName("search name is empty");
    const std::string joined = strings::replace_all(collapsed, " ", "+");
    return strings::replace_all(config.search_url_template, "{name}", joined);
}

std::string build_profile_url(const ScholarId& id, const ScholarConfig& config) {
    return strings::replace_all(config.profile_url_template, "{id}", id.id);
}

ScholarId extract_profile_id(const std::string& html, const ScholarConfig& config) {
    if (html.empty()) throw IdNotFound("empty search page");
    const std::regex& re = compiled_pattern(config.id_pattern);
    auto begin = std::sregex_iterator(html.begin(), html.end(), re);
    const auto end = std::sregex_iterator();
    for (auto it = begin; it != end; ++it) {
        if (it->size() < 2) continue;
        const std::string candidate = (*it)[1].str();
        // First match that validates wins; short names with several hits
        // keep the engine's own result ordering.
        if (ScholarId::is_valid(candidate)) return ScholarId{candidate};
    }
    throw IdNotFound("no profile id in search page");
}

ScholarProfile parse_profile(const std::string& html, const std::string& query_name,
                             const ScholarConfig& config) {
    if (html.empty()) throw ProfileParseError("page", "empty profile page");

    ScholarProfile profile;
    profile.short_name = query_name;

    const auto name = first_capture(html, config.full_name_pattern);
    if (!name) throw ProfileParseError("full_name", "profile field not found: full_name");
    profile.full_name = strings::trim(*name);

    const auto affiliation = first_capture(html, config.affiliation_pattern);
    if (!affiliation) throw ProfileParseError("affiliation", "profile field not found: affiliation");
    profile.affiliation = strings::trim(*affiliation);

    profile.citations = required_number(html, config.citations_pattern, "citations");
    profile.h_index = static_cast<int>(required_number(html, config.h_index_pattern, "h_index"));
    profile.i10_index =
        static_cast<int>(required_number(html, config.i10_index_pattern, "i10_index"));

    if (profile.h_index > profile.citations) {
        throw ProfileParseError("h_index", "h_index exceeds total citations");
    }
    if (profile.i10_index > profile.citations) {
        throw ProfileParseError("i10_index", "i10_index exceeds total citations");
    }
    // Scraped stats can be mid-update; this inconsistency is only a warning.
    if (static_cast<long>(profile.h_index) * profile.h_index > profile.citations) {
        profile.warnings.push_back("h_index^2 exceeds total citations");
    }

    if (auto domain = first_capture(html, config.email_domain_pattern)) {
        profile.verified_email_domain = strings::trim(*domain);
    }
    if (auto homepage = first_capture(html, config.homepage_pattern)) {
        profile.homepage_url = strings::trim(*homepage);
    }
    return profile;
}

std::vector<std::string> extract_coauthors(const std::string& html,
                                           const ScholarConfig& config) {
    std::vector<std::string> names;
    const std::regex& re = compiled_pattern(config.coauthor_pattern);
    for (auto it = std::sregex_iterator(html.begin(), html.end(), re);
         it != std::sregex_iterator(); ++it) {
        if (it->size() >= 2) names.push_back(strings::trim((*it)[1].str()));
    }
    return names;
}

Resolution resolve(const std::string& name, fetch::Fetcher& fetcher,
                   const ScholarConfig& config) {
    Resolution result;
    result.name = name;

    const std::string search_url = build_search_url(name, config);
    auto search = fetcher.fetch(search_url);
    if (!search) {
        result.failure = ResolveFailure::cache_miss;
        result.detail = "search page not cached: " + search_url;
        return result;
    }
    if (search->status >= 400) {
        result.failure = ResolveFailure::http_error;
        result.detail = "search returned status " + std::to_string(search->status);
        return result;
    }

    ScholarId id;
    try {
        id = extract_profile_id(search->body, config);
    } catch (const IdNotFound& e) {
        result.failure = ResolveFailure::id_not_found;
        result.detail = e.what();
        return result;
    }

    const std::string profile_url = build_profile_url(id, config);
    auto page = fetcher.fetch(profile_url);
    if (!page) {
        result.failure = ResolveFailure::cache_miss;
        result.detail = "profile page not cached: " + profile_url;
        return result;
    }
    if (page->status >= 400) {
        result.failure = ResolveFailure::http_error;
        result.detail = "profile returned status " + std::to_string(page->status);
        return result;
    }

    try {
        ScholarProfile profile = parse_profile(page->body, name, config);
        profile.id = id;
        result.profile = std::move(profile);
    } catch (const ProfileParseError& e) {
        result.failure = ResolveFailure::profile_parse_error;
        result.detail = e.what();
    }
    return result;
}

}  // namespace refrank::scholar
