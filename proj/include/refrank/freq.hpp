#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "refrank/refparse.hpp"

namespace refrank::freq {

struct FrequencyEntry {
    std::string name;  // first-seen surface form
    int count = 0;
};

/// Author-name -> mention-count mapping. Name equality is case-insensitive
/// after whitespace collapsing; the first-seen surface form is the stored
/// key. Entries keep first-seen order; use sort_by_frequency for ranking.
class FrequencyTable {
public:
    void add(const std::string& canonical_name);

    /// Rebuilds a table from already-counted entries (e.g. a pool slice).
    static FrequencyTable from_entries(const std::vector<FrequencyEntry>& entries);

    const std::vector<FrequencyEntry>& entries() const { return entries_; }
    std::optional<int> count_of(const std::string& name) const;
    long total_mentions() const { return total_; }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<FrequencyEntry> entries_;
    std::unordered_map<std::string, std::size_t> index_;  // folded name -> slot
    long total_ = 0;
};

FrequencyTable count_frequencies(const std::vector<refparse::AuthorMention>& mentions);

/// Descending by count; ties broken by ascending case-insensitive name.
/// The ordering is total, so output is deterministic.
std::vector<FrequencyEntry> sort_by_frequency(const FrequencyTable& table);

}  // namespace refrank::freq
