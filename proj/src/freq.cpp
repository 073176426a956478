#include "refrank/freq.hpp"

#include <algorithm>

#include "refrank/strings.hpp"

namespace refrank::freq {

void FrequencyTable::add(const std::string& canonical_name) {
    const std::string key = strings::fold_name(canonical_name);
    if (auto it = index_.find(key); it != index_.end()) {
        ++entries_[it->second].count;
    } else {
        index_.emplace(key, entries_.size());
        entries_.push_back({strings::collapse_whitespace(strings::trim(canonical_name)), 1});
    }
    ++total_;
}

FrequencyTable FrequencyTable::from_entries(const std::vector<FrequencyEntry>& entries) {
    FrequencyTable table;
    for (const auto& e : entries) {
        table.index_.emplace(strings::fold_name(e.name), table.entries_.size());
        table.entries_.push_back(e);
        table.total_ += e.count;
    }
    return table;
}

std::optional<int> FrequencyTable::count_of(const std::string& name) const {
    const auto it = index_.find(strings::fold_name(name));
    if (it == index_.end()) return std::nullopt;
    return entries_[it->second].count;
}

FrequencyTable count_frequencies(const std::vector<refparse::AuthorMention>& mentions) {
    FrequencyTable table;
    for (const auto& m : mentions) table.add(m.canonical_name);
    return table;
}

std::vector<FrequencyEntry> sort_by_frequency(const FrequencyTable& table) {
    std::vector<FrequencyEntry> out = table.entries();
    std::sort(out.begin(), out.end(), [](const FrequencyEntry& a, const FrequencyEntry& b) {
        if (a.count != b.count) return a.count > b.count;
        const std::string fa = strings::fold_name(a.name);
        const std::string fb = strings::fold_name(b.name);
        if (fa != fb) return fa < fb;
        return a.name < b.name;
    });
    return out;
}

}  // namespace refrank::freq
