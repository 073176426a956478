#include <doctest.h>

#include <cmath>
#include <random>

#include "refrank/rank.hpp"

using namespace refrank;
using rank::RankedCandidate;
using rank::ScoreWeights;

namespace {

scholar::ScholarProfile profile_of(int h, int i10, long citations) {
    scholar::ScholarProfile p;
    p.id.id = "AAAAAAAAAAAJ";
    p.h_index = h;
    p.i10_index = i10;
    p.citations = citations;
    return p;
}

freq::FrequencyTable table_of(std::initializer_list<std::pair<const char*, int>> entries) {
    std::vector<freq::FrequencyEntry> v;
    for (const auto& [name, count] : entries) v.push_back({name, count});
    return freq::FrequencyTable::from_entries(v);
}

std::vector<std::string> names_of(const std::vector<RankedCandidate>& ranked) {
    std::vector<std::string> out;
    for (const auto& c : ranked) out.push_back(c.name);
    return out;
}

}  // namespace

TEST_CASE("score: zero profile scores zero") {
    CHECK(rank::score(1, profile_of(0, 0, 0), {}) == 0.0);
    CHECK(rank::score(1, profile_of(0, 0, 0), {3.0, 2.0, 1.0}) == 0.0);
}

TEST_CASE("score: frequency times weighted publication metrics") {
    // Independent evaluation of the same closed form.
    const ScoreWeights w;  // defaults 1.0 / 0.5 / 5.0
    const double expected = 2.0 * (1.0 * 10 + 0.5 * 4 + 5.0 * std::log10(1.0 + 99.0));
    CHECK(rank::score(2, profile_of(10, 4, 99), w) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(rank::score(2, profile_of(10, 4, 99), w) == doctest::Approx(44.0).epsilon(1e-12));
}

TEST_CASE("score on a heavyweight profile") {
    const ScoreWeights w;
    const double expected = 99.0 + 0.5 * 220.0 + 5.0 * std::log10(54429.0);
    const double got = rank::score(1, profile_of(99, 220, 54428), w);
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    CHECK(got > 232.6);
    CHECK(got < 232.8);
}

TEST_CASE("rank_candidates orders, ranks and truncates") {
    std::map<std::string, std::optional<scholar::ScholarProfile>> profiles;
    profiles["A"] = profile_of(10, 4, 99);
    profiles["B"] = std::nullopt;

    const auto ranked = rank::rank_candidates(table_of({{"A", 2}, {"B", 1}}), profiles, {}, 10);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].name == "A");
    CHECK(ranked[0].rank == 1);
    CHECK(ranked[0].score == doctest::Approx(44.0));
    CHECK(ranked[1].name == "B");
    CHECK(ranked[1].rank == 2);
    CHECK(ranked[1].score == 0.0);
    CHECK_FALSE(ranked[1].profile.has_value());
}

TEST_CASE("score ties break by frequency, then name") {
    std::map<std::string, std::optional<scholar::ScholarProfile>> profiles;
    profiles["Low Freq"] = profile_of(10, 0, 0);
    profiles["High Freq"] = profile_of(5, 0, 0);
    // 1 * 10 == 2 * 5: same score, so the higher-frequency candidate wins.
    auto ranked =
        rank::rank_candidates(table_of({{"Low Freq", 1}, {"High Freq", 2}}), profiles, {}, 10);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].name == "High Freq");

    // Full tie: ascending name decides.
    profiles.clear();
    profiles["b same"] = profile_of(5, 0, 0);
    profiles["A same"] = profile_of(5, 0, 0);
    ranked = rank::rank_candidates(table_of({{"b same", 1}, {"A same", 1}}), profiles, {}, 10);
    CHECK(ranked[0].name == "A same");
}

TEST_CASE("profile-less candidates sort after scored ones, even at score zero") {
    std::map<std::string, std::optional<scholar::ScholarProfile>> profiles;
    profiles["Zero Scored"] = profile_of(0, 0, 0);
    profiles["No Profile"] = std::nullopt;
    const auto ranked =
        rank::rank_candidates(table_of({{"No Profile", 9}, {"Zero Scored", 1}}), profiles, {}, 10);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].name == "Zero Scored");
    CHECK(ranked[1].name == "No Profile");
}

TEST_CASE("truncation keeps ranks contiguous from 1") {
    std::map<std::string, std::optional<scholar::ScholarProfile>> profiles;
    profiles["A"] = profile_of(30, 0, 0);
    profiles["B"] = profile_of(20, 0, 0);
    profiles["C"] = profile_of(10, 0, 0);
    const auto ranked =
        rank::rank_candidates(table_of({{"A", 1}, {"B", 1}, {"C", 1}}), profiles, {}, 2);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].rank == 1);
    CHECK(ranked[1].rank == 2);
    CHECK(ranked[0].name == "A");
    CHECK(ranked[1].name == "B");

    CHECK(rank::rank_candidates(freq::FrequencyTable(), {}, {}, 3).empty());
}

TEST_CASE("score is monotone in every input") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> h(0, 120), i10(0, 400);
    std::uniform_int_distribution<long> cit(0, 200000);
    std::uniform_int_distribution<int> freq_d(1, 9);
    const ScoreWeights w{1.0, 0.5, 5.0};
    for (int iter = 0; iter < 300; ++iter) {
        const int hh = h(rng), ii = i10(rng), ff = freq_d(rng);
        const long cc = cit(rng);
        const double base = rank::score(ff, profile_of(hh, ii, cc), w);
        CHECK(rank::score(ff, profile_of(hh + 1, ii, cc), w) >= base);
        CHECK(rank::score(ff, profile_of(hh, ii + 3, cc), w) >= base);
        CHECK(rank::score(ff, profile_of(hh, ii, cc + 1000), w) >= base);
        CHECK(rank::score(ff + 1, profile_of(hh, ii, cc), w) >= base);
    }
}

TEST_CASE("uniform weight scaling preserves the output order") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> h(0, 90), i10(0, 250);
    std::uniform_int_distribution<long> cit(0, 80000);
    std::uniform_int_distribution<int> freq_d(1, 7), n_d(1, 8);
    // Powers of two scale doubles exactly, so even near-ties stay put.
    const double scales[] = {0.25, 0.5, 2.0, 4.0, 8.0};
    for (int iter = 0; iter < 120; ++iter) {
        const int n = n_d(rng);
        std::vector<freq::FrequencyEntry> entries;
        std::map<std::string, std::optional<scholar::ScholarProfile>> profiles;
        for (int k = 0; k < n; ++k) {
            const std::string name = "Cand " + std::to_string(k);
            entries.push_back({name, freq_d(rng)});
            if (k % 5 == 4) {
                profiles[name] = std::nullopt;
            } else {
                profiles[name] = profile_of(h(rng), i10(rng), cit(rng));
            }
        }
        const auto table = freq::FrequencyTable::from_entries(entries);
        const ScoreWeights w{1.0, 0.5, 5.0};
        const double c = scales[iter % std::size(scales)];
        const ScoreWeights scaled{w.alpha * c, w.beta * c, w.gamma * c};
        CHECK(names_of(rank::rank_candidates(table, profiles, w, n)) ==
              names_of(rank::rank_candidates(table, profiles, scaled, n)));
    }
}

TEST_CASE("ranking is deterministic") {
    std::map<std::string, std::optional<scholar::ScholarProfile>> profiles;
    profiles["X"] = profile_of(12, 30, 500);
    profiles["Y"] = profile_of(12, 30, 500);
    profiles["Z"] = std::nullopt;
    const auto table = table_of({{"X", 2}, {"Y", 2}, {"Z", 2}});
    const auto a = rank::rank_candidates(table, profiles, {}, 3);
    const auto b = rank::rank_candidates(table, profiles, {}, 3);
    CHECK(names_of(a) == names_of(b));
}
