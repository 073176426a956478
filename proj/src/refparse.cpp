#include "refrank/refparse.hpp"

#include <algorithm>
#include <array>
#include <fstream>

#include "refrank/errors.hpp"
#include "refrank/strings.hpp"

namespace refrank::refparse {

namespace {

using strings::trim;

constexpr std::string_view kCurlyQuote = "\xE2\x80\x9C";  // U+201C

// Venue words, connectives and bibliographic boilerplate that never form an
// author name on their own.
constexpr std::array kDefaultStopwords = {
    "proceedings", "proc",         "journal",   "conference", "conf",
    "transactions", "trans",       "transaction", "ieee",     "acm",
    "springer",    "elsevier",     "wiley",     "vol",        "volume",
    "no",          "issue",        "pp",        "page",       "pages",
    "et al",       "and",          "in",        "of",         "the",
    "on",          "press",        "university", "dept",      "department",
    "edition",     "ed",           "eds",       "editor",     "editors",
    "symposium",   "workshop",     "international", "intl",   "int",
    "tech",        "technical",    "report",    "arxiv",      "preprint",
    "doi",         "http",         "https",     "www",        "url",
    "online",      "available",    "accessed",  "published",  "submitted",
    "january",     "february",     "march",     "april",      "may",
    "june",        "july",         "august",    "september",  "october",
    "november",    "december",     "jan",       "feb",        "mar",
    "apr",         "jun",          "jul",       "aug",        "sep",
    "sept",        "oct",          "nov",       "dec",        "annual",
    "letters",     "magazine",     "review",    "advances",   "thesis",
};

bool begins_with_quote(std::string_view s) {
    if (s.empty()) return false;
    if (s.front() == '"') return true;
    return s.substr(0, kCurlyQuote.size()) == kCurlyQuote;
}

bool is_word_char(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// Whole-word, case-insensitive containment. `entry` is already lowercase;
// multi-word entries match across single spaces.
bool contains_word(const std::string& folded_token, const std::string& entry) {
    std::size_t pos = 0;
    while ((pos = folded_token.find(entry, pos)) != std::string::npos) {
        const bool left_ok = pos == 0 || !is_word_char(folded_token[pos - 1]);
        const std::size_t end = pos + entry.size();
        const bool right_ok = end >= folded_token.size() || !is_word_char(folded_token[end]);
        if (left_ok && right_ok) return true;
        ++pos;
    }
    return false;
}

// Positions of line starts whose content (after indentation) begins with `keyword`.
std::vector<std::size_t> line_anchored_occurrences(const std::string& text,
                                                   std::string_view keyword) {
    std::vector<std::size_t> hits;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t i = line_start;
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        if (text.compare(i, keyword.size(), keyword) == 0) hits.push_back(i);
        const std::size_t nl = text.find('\n', line_start);
        if (nl == std::string::npos) break;
        line_start = nl + 1;
    }
    return hits;
}

}  // namespace

StopwordList StopwordList::builtin_default() {
    StopwordList list;
    list.entries_.assign(kDefaultStopwords.begin(), kDefaultStopwords.end());
    return list;
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open stop-word list: " + path.string());
    StopwordList list;
    std::string line;
    while (std::getline(in, line)) {
        const std::string entry = trim(line);
        if (entry.empty() || entry.front() == '#') continue;
        list.entries_.push_back(strings::fold_name(entry));
    }
    return list;
}

bool StopwordList::matches(const std::string& token) const {
    const std::string folded = strings::fold_name(token);
    for (const auto& entry : entries_) {
        if (folded == entry || contains_word(folded, entry)) return true;
    }
    return false;
}

ReferenceSection isolate_reference_section(const ingest::NormalizedText& text) {
    struct Candidate {
        std::string_view keyword;
        Marker marker;
    };
    static constexpr Candidate kCandidates[] = {{"REFERENCES", Marker::upper},
                                                {"References", Marker::sentence}};
    for (const auto& cand : kCandidates) {
        const auto hits = line_anchored_occurrences(text.text, cand.keyword);
        if (hits.empty()) continue;
        // Reference sections terminate documents, so the LAST marker wins.
        const std::size_t after = hits.back() + cand.keyword.size();
        std::size_t begin = after;
        while (begin < text.text.size() &&
               (text.text[begin] == ' ' || text.text[begin] == '\t' ||
                text.text[begin] == '\n')) {
            ++begin;
        }
        ReferenceSection section;
        section.raw = text.text.substr(begin);
        section.marker_used = cand.marker;
        return section;
    }
    throw NoReferenceSection("no REFERENCES/References marker found");
}

std::vector<Citation> split_citations(const ReferenceSection& section) {
    if (trim(section.raw).empty()) throw NoCitationsFound("reference section is empty");

    std::vector<Citation> citations;

    // Primary pattern: bracketed labels [1], [2], ... consumed in ascending
    // order so that bracket references inside an entry do not split it.
    const std::string& raw = section.raw;
    std::size_t pos = raw.find("[1]");
    if (pos != std::string::npos) {
        int label = 1;
        std::size_t body_start = pos + 3;
        while (true) {
            const std::string next = "[" + std::to_string(label + 1) + "]";
            const std::size_t next_pos = raw.find(next, body_start);
            Citation c;
            c.index = label;
            c.raw = trim(raw.substr(body_start,
                                    (next_pos == std::string::npos ? raw.size() : next_pos) -
                                        body_start));
            citations.push_back(std::move(c));
            if (next_pos == std::string::npos) break;
            ++label;
            body_start = next_pos + next.size();
        }
        return citations;
    }

    // Fallback: numbered lines "1. ...".
    std::vector<std::size_t> starts;       // offset of each segment body
    std::vector<std::size_t> label_pos;    // offset of each "N." label
    std::size_t line_start = 0;
    while (line_start <= raw.size()) {
        std::size_t i = line_start;
        while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
        std::size_t d = i;
        while (d < raw.size() && raw[d] >= '0' && raw[d] <= '9') ++d;
        if (d > i && d < raw.size() && raw[d] == '.') {
            label_pos.push_back(i);
            starts.push_back(d + 1);
        }
        const std::size_t nl = raw.find('\n', line_start);
        if (nl == std::string::npos) break;
        line_start = nl + 1;
    }
    if (starts.empty()) throw NoCitationsFound("no citation labels matched");
    for (std::size_t k = 0; k < starts.size(); ++k) {
        const std::size_t end = (k + 1 < starts.size()) ? label_pos[k + 1] : raw.size();
        Citation c;
        c.index = static_cast<int>(k + 1);
        c.raw = trim(raw.substr(starts[k], end - starts[k]));
        citations.push_back(std::move(c));
    }
    return citations;
}

std::string normalize_citation(const std::string& raw) {
    std::string step;
    step.reserve(raw.size());
    for (char c : raw) {
        if (c == '\r' || c == '\n') {
            step.push_back(' ');
        } else if (c >= '0' && c <= '9') {
            continue;
        } else {
            step.push_back(c);
        }
    }
    return trim(strings::collapse_whitespace(step));
}

bool is_valid_author_name(const std::string& token, const StopwordList& stopwords) {
    if (token.empty()) return false;
    if (begins_with_quote(token)) return false;
    if (strings::contains_digit(token)) return false;
    if (token.size() > 60) return false;
    if (stopwords.matches(token)) return false;
    return true;
}

std::vector<std::string> extract_author_tokens(const std::string& normalized,
                                               const StopwordList& stopwords) {
    // Connectives act as separators in an author run.
    std::string prepared = strings::replace_all(normalized, " and ", ", ");
    prepared = strings::replace_all(prepared, " et al.", ", ");
    prepared = strings::replace_all(prepared, " et al", ", ");

    std::vector<std::string> tokens;
    for (const auto& part : strings::split(prepared, ',')) {
        const std::string candidate = trim(part);
        if (begins_with_quote(candidate)) break;  // title starts here
        if (is_valid_author_name(candidate, stopwords)) tokens.push_back(candidate);
    }
    return tokens;
}

std::vector<Citation> parse_citations(const ReferenceSection& section,
                                      const StopwordList& stopwords) {
    std::vector<Citation> citations = split_citations(section);
    for (auto& c : citations) {
        c.normalized = normalize_citation(c.raw);
        c.author_tokens = extract_author_tokens(c.normalized, stopwords);
    }
    return citations;
}

std::vector<AuthorMention> collect_mentions(const std::vector<Citation>& citations) {
    std::vector<AuthorMention> mentions;
    for (const auto& c : citations) {
        for (const auto& token : c.author_tokens) {
            AuthorMention m;
            m.canonical_name = strings::collapse_whitespace(token);
            m.citation_index = c.index;
            mentions.push_back(std::move(m));
        }
    }
    return mentions;
}

}  // namespace refrank::refparse
