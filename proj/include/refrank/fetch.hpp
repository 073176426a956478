#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace refrank::fetch {

enum class Source { live, cache };

/// One recorded HTTP exchange. Cache hits carry the original fetched_at.
struct FetchRecord {
    std::string url;
    std::string body;
    int status = 0;  // 100..599
    std::string fetched_at;  // ISO-8601 UTC
    Source source = Source::live;
};

/// Where a pipeline run got its pages from; surfaced in report provenance.
struct FetchStats {
    std::atomic<long> cache_hits{0};
    std::atomic<long> cache_misses{0};
    std::atomic<long> live_fetches{0};
};

/// fetch() returns the record for a URL, nullopt when the URL is not
/// available in the backing store (cache miss in offline modes). Transport
/// failures in live mode throw FetchError. Implementations are safe to call
/// from multiple threads.
class Fetcher {
public:
    virtual ~Fetcher() = default;
    virtual std::optional<FetchRecord> fetch(const std::string& url) = 0;
};

/// On-disk store of recorded responses. Each entry is a pair of files named
/// by the lowercase hex SHA-256 of the URL: `<digest>.body` (raw bytes) and
/// `<digest>.meta` (json: url, status, fetched_at). Writes replace
/// atomically; concurrent reads are safe.
class CacheStore {
public:
    explicit CacheStore(std::filesystem::path dir);

    std::optional<FetchRecord> get(const std::string& url) const;
    void put(const FetchRecord& record) const;
    bool contains(const std::string& url) const;
    const std::filesystem::path& dir() const { return dir_; }

    static std::string key_for(const std::string& url);

private:
    std::filesystem::path dir_;
};

/// Serves from the cache only; misses yield nullopt, never network traffic.
class CacheOnlyFetcher final : public Fetcher {
public:
    explicit CacheOnlyFetcher(CacheStore store, FetchStats* stats = nullptr);
    std::optional<FetchRecord> fetch(const std::string& url) override;

private:
    CacheStore store_;
    FetchStats* stats_;
};

/// Read-through: cache hit wins, otherwise delegates to `upstream` and
/// records the response.
class CachedFetcher final : public Fetcher {
public:
    CachedFetcher(CacheStore store, std::shared_ptr<Fetcher> upstream,
                  FetchStats* stats = nullptr);
    std::optional<FetchRecord> fetch(const std::string& url) override;

private:
    CacheStore store_;
    std::shared_ptr<Fetcher> upstream_;
    FetchStats* stats_;
};

/// Plain HTTP client with a per-host politeness delay. HTTPS requires a
/// TLS-enabled build; without one, https URLs raise FetchError.
class LiveFetcher final : public Fetcher {
public:
    explicit LiveFetcher(std::chrono::milliseconds politeness_delay = std::chrono::milliseconds(1000),
                         FetchStats* stats = nullptr);
    std::optional<FetchRecord> fetch(const std::string& url) override;

private:
    void wait_for_host(const std::string& host);

    std::chrono::milliseconds delay_;
    FetchStats* stats_;
    std::mutex mu_;
    std::map<std::string, std::chrono::steady_clock::time_point> last_request_;
};

/// Current time as ISO-8601 UTC, second resolution.
std::string now_utc_iso8601();

}  // namespace refrank::fetch
