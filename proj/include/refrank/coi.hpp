#pragma once

#include <string>
#include <vector>

#include "refrank/rank.hpp"
#include "refrank/refparse.hpp"

namespace refrank::coi {

/// Per-rule enable flags, in evaluation order. The first matching rule
/// names the conflict.
struct ConflictRules {
    bool is_submitting_author = true;
    bool co_cited_with_submitter = true;
    bool same_email_domain = true;
    bool scholar_coauthor = false;  // needs fetched co-author lists
};

/// Everything the rules compare against. submitter_domains and
/// submitter_coauthors are resolved upstream (they need the scholar
/// fetcher); empty means the corresponding rule can never fire.
struct ConflictContext {
    std::vector<std::string> submitting_authors;  // normalized like mentions
    std::vector<refparse::Citation> citations;
    std::vector<std::string> submitter_domains;
    std::vector<std::string> submitter_coauthors;
};

struct ConflictOutcome {
    std::vector<rank::RankedCandidate> kept;       // ranks reassigned 1..K
    std::vector<rank::RankedCandidate> discarded;  // conflict reason set
};

/// Annotates each candidate with the first matching conflict reason and
/// removes it from the ranked list; survivors keep their relative order.
ConflictOutcome detect_conflicts(const std::vector<rank::RankedCandidate>& candidates,
                                 const ConflictContext& context, const ConflictRules& rules);

}  // namespace refrank::coi
