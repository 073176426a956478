#pragma once

// Shared helpers for the test binaries: fixture paths, cache seeding from
// the recorded-web manifest, temp dirs and instrumented fetchers.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "refrank/errors.hpp"
#include "refrank/fetch.hpp"

namespace testsupport {

inline std::filesystem::path fixture_dir() {
    return std::filesystem::path(REFRANK_FIXTURE_DIR);
}

inline std::filesystem::path fixture(const std::string& name) {
    return fixture_dir() / name;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Fresh directory under the system temp dir, unique per call.
inline std::filesystem::path make_temp_dir(const std::string& tag) {
    static std::atomic<unsigned> counter{0};
    std::random_device rd;
    const auto dir = std::filesystem::temp_directory_path() /
                     ("refrank_" + tag + "_" + std::to_string(rd()) + "_" +
                      std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(dir);
    return dir;
}

/// Loads the recorded-web corpus into a cache directory; returns the number
/// of records written.
inline int seed_cache_from_manifest(const std::filesystem::path& cache_dir,
                                    const std::filesystem::path& manifest_path =
                                        fixture("manifest.json")) {
    const auto manifest = nlohmann::json::parse(read_file(manifest_path));
    const std::string fetched_at = manifest.at("fetched_at").get<std::string>();
    const refrank::fetch::CacheStore store(cache_dir);
    int n = 0;
    for (const auto& entry : manifest.at("entries")) {
        refrank::fetch::FetchRecord rec;
        rec.url = entry.at("url").get<std::string>();
        rec.status = entry.value("status", 200);
        rec.fetched_at = fetched_at;
        rec.body = read_file(fixture("web") / entry.at("file").get<std::string>());
        rec.source = refrank::fetch::Source::live;
        store.put(rec);
        ++n;
    }
    return n;
}

/// Counts fetches and delegates; used to show offline runs never hit the
/// network (the `live_calls` of a wrapped live stub stays zero).
class CountingFetcher final : public refrank::fetch::Fetcher {
public:
    explicit CountingFetcher(refrank::fetch::Fetcher& inner) : inner_(&inner) {}

    std::optional<refrank::fetch::FetchRecord> fetch(const std::string& url) override {
        ++calls;
        return inner_->fetch(url);
    }

    std::atomic<long> calls{0};

private:
    refrank::fetch::Fetcher* inner_;
};

/// Stands in for the network: any fetch attempt is recorded and fails hard.
class NetworkProbeFetcher final : public refrank::fetch::Fetcher {
public:
    std::optional<refrank::fetch::FetchRecord> fetch(const std::string& url) override {
        ++attempts;
        throw refrank::FetchError("network access attempted in a hermetic test: " + url);
    }

    std::atomic<long> attempts{0};
};

/// In-memory fetcher for unit tests: url -> (status, body).
class MapFetcher final : public refrank::fetch::Fetcher {
public:
    void add(const std::string& url, std::string body, int status = 200) {
        pages_[url] = {status, std::move(body)};
    }

    std::optional<refrank::fetch::FetchRecord> fetch(const std::string& url) override {
        ++calls;
        const auto it = pages_.find(url);
        if (it == pages_.end()) return std::nullopt;
        refrank::fetch::FetchRecord rec;
        rec.url = url;
        rec.status = it->second.first;
        rec.body = it->second.second;
        rec.fetched_at = "2025-11-20T10:00:00Z";
        rec.source = refrank::fetch::Source::cache;
        return rec;
    }

    std::atomic<long> calls{0};

private:
    std::map<std::string, std::pair<int, std::string>> pages_;
};

}  // namespace testsupport
