#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "refrank/freq.hpp"
#include "refrank/scholar.hpp"

namespace refrank::rank {

/// Composite-score weights: alpha on h-index, beta on i10-index, gamma on
/// log10(1 + citations). All non-negative, at least one positive.
struct ScoreWeights {
    double alpha = 1.0;
    double beta = 0.5;
    double gamma = 5.0;
};

struct RankedCandidate {
    std::string name;
    int frequency = 0;
    std::optional<scholar::ScholarProfile> profile;
    double score = 0.0;
    int rank = 0;  // 1-based, contiguous within a report
    std::optional<std::string> conflict;
    std::optional<std::string> email;
    bool email_domain_verified = false;
    std::optional<std::string> email_source_url;
    std::optional<std::string> email_reason;  // why no email, when absent
};

/// frequency x (alpha*h + beta*i10 + gamma*log10(1 + citations)).
/// Monotone in every input; scaling all weights preserves score order.
double score(int frequency, const scholar::ScholarProfile& profile, const ScoreWeights& w);

/// Scores every candidate of the table (profile-less ones score 0 and sort
/// after all profiled ones), orders by descending score with descending
/// frequency then ascending name as tie-breaks, assigns contiguous ranks
/// and truncates to top_n.
std::vector<RankedCandidate> rank_candidates(
    const freq::FrequencyTable& table,
    const std::map<std::string, std::optional<scholar::ScholarProfile>>& profiles,
    const ScoreWeights& weights, int top_n);

}  // namespace refrank::rank
