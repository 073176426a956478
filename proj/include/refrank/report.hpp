#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "refrank/config.hpp"
#include "refrank/fetch.hpp"
#include "refrank/freq.hpp"
#include "refrank/ingest.hpp"
#include "refrank/rank.hpp"

namespace refrank::report {

/// Where a report came from: input/config digests, fetch counters and a
/// timestamp. In cached / cache_only modes the timestamp is the newest
/// fetched_at among the records used, so repeated offline runs emit
/// byte-identical reports.
struct Provenance {
    std::string input_name;
    std::string input_digest;
    std::string config_digest;
    std::string fetch_mode;
    long cache_hits = 0;
    long cache_misses = 0;
    long live_fetches = 0;
    std::string timestamp;
};

struct UnresolvedEntry {
    std::string name;
    int frequency = 0;
    std::string reason;  // id_not_found, cache_miss, ...
    std::string detail;
};

struct ReviewerReport {
    std::vector<rank::RankedCandidate> rows;       // final ranked output, <= top_n
    std::vector<rank::RankedCandidate> discarded;  // conflicted, with reasons
    std::vector<UnresolvedEntry> unresolved;       // pool members without a profile
    Provenance provenance;
};

/// Runs ingest -> refparse -> freq -> scholar -> rank -> coi -> email and
/// assembles the report. Per-candidate failures never abort the run;
/// NoReferenceSection / NoCitationsFound / FetchError (live) propagate.
///
/// submitting_authors: nullopt reads the author line from the manuscript
/// header (text before the first Abstract line); an explicit empty list
/// disables conflict matching entirely.
///
/// fetcher_override replaces the config-selected fetcher (tests use this to
/// count network activity); pdf_adapter replaces the bundled PDF adapter.
ReviewerReport run_pipeline(const ingest::SourceDocument& doc,
                            const std::optional<std::vector<std::string>>& submitting_authors,
                            const config::PipelineConfig& cfg,
                            const std::string& input_name = "input",
                            fetch::Fetcher* fetcher_override = nullptr,
                            const ingest::TextExtractionAdapter* pdf_adapter = nullptr);

/// Renders a report. Table format prints exactly the columns
///   Author's (Rank by Score) | Total Score | Verified Email Domain |
///   Homepage Link | Email
/// csv and json carry the same fields plus the discarded and unresolved
/// sections. Output is deterministic: same report, same bytes.
std::string emit(const ReviewerReport& report, config::OutputFormat format);

ReviewerReport report_from_json(const std::string& json_text);

/// "name count" lines, most frequent first.
std::string frequency_lines(const freq::FrequencyTable& table);

/// Candidates found in the manuscript header region (before the first
/// "Abstract" line): the first line that comma-splits into two or more
/// valid author names.
std::vector<std::string> detect_submitting_authors(const ingest::NormalizedText& text,
                                                   const refparse::StopwordList& stopwords);

// ---- evaluation against hand-labeled ground truth ----

/// Hand-labeled truth for one candidate. nullopt means the attribute is
/// genuinely absent (e.g. no public profile, no reachable email).
struct CandidateLabel {
    std::optional<int> frequency;
    std::optional<std::string> id;
    std::optional<std::string> email_domain;
    std::optional<std::string> professional_info;
    std::optional<int> h_index;
    std::optional<int> i10_index;
    std::optional<long> citations;
    std::optional<std::string> homepage;
    std::optional<std::string> email;
};

/// Labels keyed by input name, then by folded candidate name. Every
/// candidate visible in an evaluated report must be covered.
struct GroundTruth {
    std::map<std::string, std::map<std::string, CandidateLabel>> by_input;

    static GroundTruth from_file(const std::filesystem::path& path);
    static GroundTruth from_json_text(const std::string& text, const std::string& origin);
};

struct AttributeAccuracy {
    std::string attribute;
    int correct = 0;
    int total = 0;
    double percent = 0.0;
};

struct AccuracyTable {
    std::vector<AttributeAccuracy> attributes;  // fixed order, Frequency first
    int wrong_id_count = 0;
    int evaluated_candidates = 0;
    double wrong_id_rate_percent = 0.0;
    double unweighted_mean_percent = 0.0;  // mean over the attribute vector
};

/// Per-attribute accuracy over all candidates of all reports (rows,
/// discarded and unresolved alike). Throws MissingLabel when truth does not
/// cover a candidate. Wrong-ID counts candidates that resolved to an id
/// different from their labeled one.
AccuracyTable evaluate(const std::vector<ReviewerReport>& reports, const GroundTruth& truth);

std::string accuracy_csv(const AccuracyTable& table);
std::string accuracy_json(const AccuracyTable& table);

}  // namespace refrank::report
