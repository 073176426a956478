#include "refrank/coi.hpp"

#include <algorithm>
#include <optional>

#include "refrank/strings.hpp"

namespace refrank::coi {

namespace {

using strings::fold_name;

bool name_in(const std::string& folded, const std::vector<std::string>& names) {
    return std::any_of(names.begin(), names.end(),
                       [&](const std::string& n) { return fold_name(n) == folded; });
}

bool citation_has(const refparse::Citation& c, const std::string& folded) {
    return std::any_of(c.author_tokens.begin(), c.author_tokens.end(),
                       [&](const std::string& t) { return fold_name(t) == folded; });
}

std::optional<std::string> first_conflict(const rank::RankedCandidate& cand,
                                          const ConflictContext& ctx,
                                          const ConflictRules& rules) {
    const std::string folded = fold_name(cand.name);

    if (rules.is_submitting_author && name_in(folded, ctx.submitting_authors)) {
        return "is_submitting_author";
    }

    if (rules.co_cited_with_submitter) {
        for (const auto& citation : ctx.citations) {
            if (!citation_has(citation, folded)) continue;
            for (const auto& submitter : ctx.submitting_authors) {
                if (citation_has(citation, fold_name(submitter))) {
                    return "co_cited_with_submitter";
                }
            }
        }
    }

    if (rules.same_email_domain && cand.profile && cand.profile->verified_email_domain) {
        const std::string domain = fold_name(*cand.profile->verified_email_domain);
        if (name_in(domain, ctx.submitter_domains)) return "same_email_domain";
    }

    if (rules.scholar_coauthor && name_in(folded, ctx.submitter_coauthors)) {
        return "scholar_coauthor";
    }

    return std::nullopt;
}

}  // namespace

ConflictOutcome detect_conflicts(const std::vector<rank::RankedCandidate>& candidates,
                                 const ConflictContext& context, const ConflictRules& rules) {
    ConflictOutcome out;
    for (const auto& cand : candidates) {
        if (auto reason = first_conflict(cand, context, rules)) {
            rank::RankedCandidate flagged = cand;
            flagged.conflict = std::move(reason);
            out.discarded.push_back(std::move(flagged));
        } else {
            out.kept.push_back(cand);
        }
    }
    for (std::size_t i = 0; i < out.kept.size(); ++i) {
        out.kept[i].rank = static_cast<int>(i + 1);
    }
    return out;
}

}  // namespace refrank::coi
