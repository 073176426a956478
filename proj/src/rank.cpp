#include "refrank/rank.hpp"

#include <algorithm>
#include <cmath>

#include "refrank/strings.hpp"

namespace refrank::rank {

double score(int frequency, const scholar::ScholarProfile& profile, const ScoreWeights& w) {
    const double publication_weight = w.alpha * profile.h_index + w.beta * profile.i10_index +
                                      w.gamma * std::log10(1.0 + static_cast<double>(profile.citations));
    return frequency * publication_weight;
}

std::vector<RankedCandidate> rank_candidates(
    const freq::FrequencyTable& table,
    const std::map<std::string, std::optional<scholar::ScholarProfile>>& profiles,
    const ScoreWeights& weights, int top_n) {
    std::vector<RankedCandidate> out;
    out.reserve(table.entries().size());
    for (const auto& entry : table.entries()) {
        RankedCandidate c;
        c.name = entry.name;
        c.frequency = entry.count;
        if (const auto it = profiles.find(entry.name); it != profiles.end() && it->second) {
            c.profile = it->second;
            c.score = score(c.frequency, *c.profile, weights);
        }
        out.push_back(std::move(c));
    }

    std::stable_sort(out.begin(), out.end(), [](const RankedCandidate& a, const RankedCandidate& b) {
        if (a.score != b.score) return a.score > b.score;
        // Profile-less candidates (score 0 by definition) sort after scored ones.
        if (a.profile.has_value() != b.profile.has_value()) return a.profile.has_value();
        if (a.frequency != b.frequency) return a.frequency > b.frequency;
        const std::string fa = strings::fold_name(a.name);
        const std::string fb = strings::fold_name(b.name);
        if (fa != fb) return fa < fb;
        return a.name < b.name;
    });

    if (top_n >= 0 && out.size() > static_cast<std::size_t>(top_n)) out.resize(top_n);
    for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i + 1);
    return out;
}

}  // namespace refrank::rank
