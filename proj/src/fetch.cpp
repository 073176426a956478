#include "refrank/fetch.hpp"

#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "refrank/digest.hpp"
#include "refrank/errors.hpp"

#include <httplib.h>

namespace refrank::fetch {

namespace fs = std::filesystem;

std::string now_utc_iso8601() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

CacheStore::CacheStore(fs::path dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
}

std::string CacheStore::key_for(const std::string& url) {
    return digest::sha256_hex(url);
}

std::optional<FetchRecord> CacheStore::get(const std::string& url) const {
    const std::string key = key_for(url);
    const fs::path meta_path = dir_ / (key + ".meta");
    const fs::path body_path = dir_ / (key + ".body");
    std::ifstream meta_in(meta_path);
    if (!meta_in) return std::nullopt;

    nlohmann::json meta;
    try {
        meta_in >> meta;
    } catch (const nlohmann::json::exception& e) {
        throw FetchError("corrupt cache meta " + meta_path.string() + ": " + e.what());
    }

    std::ifstream body_in(body_path, std::ios::binary);
    if (!body_in) return std::nullopt;
    std::ostringstream body;
    body << body_in.rdbuf();

    FetchRecord rec;
    rec.url = meta.value("url", url);
    rec.status = meta.value("status", 200);
    rec.fetched_at = meta.value("fetched_at", "");
    rec.body = body.str();
    rec.source = Source::cache;
    return rec;
}

void CacheStore::put(const FetchRecord& record) const {
    const std::string key = key_for(record.url);
    nlohmann::ordered_json meta;
    meta["url"] = record.url;
    meta["status"] = record.status;
    meta["fetched_at"] = record.fetched_at;

    // Write to a unique temp file, then rename: readers never see a torn
    // entry and concurrent writers are last-writer-wins.
    const auto write_atomic = [&](const fs::path& final_path, const std::string& content) {
        std::ostringstream tmp_name;
        tmp_name << final_path.filename().string() << ".tmp."
                 << std::hash<std::thread::id>{}(std::this_thread::get_id());
        const fs::path tmp = final_path.parent_path() / tmp_name.str();
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw FetchError("cannot write cache file " + tmp.string());
            out.write(content.data(), static_cast<std::streamsize>(content.size()));
        }
        fs::rename(tmp, final_path);
    };
    write_atomic(dir_ / (key + ".body"), record.body);
    write_atomic(dir_ / (key + ".meta"), meta.dump(2) + "\n");
}

bool CacheStore::contains(const std::string& url) const {
    return fs::exists(dir_ / (key_for(url) + ".meta"));
}

CacheOnlyFetcher::CacheOnlyFetcher(CacheStore store, FetchStats* stats)
    : store_(std::move(store)), stats_(stats) {}

std::optional<FetchRecord> CacheOnlyFetcher::fetch(const std::string& url) {
    auto rec = store_.get(url);
    if (stats_) {
        if (rec) ++stats_->cache_hits;
        else ++stats_->cache_misses;
    }
    return rec;
}

CachedFetcher::CachedFetcher(CacheStore store, std::shared_ptr<Fetcher> upstream,
                             FetchStats* stats)
    : store_(std::move(store)), upstream_(std::move(upstream)), stats_(stats) {}

std::optional<FetchRecord> CachedFetcher::fetch(const std::string& url) {
    if (auto hit = store_.get(url)) {
        if (stats_) ++stats_->cache_hits;
        return hit;
    }
    if (stats_) ++stats_->cache_misses;
    auto rec = upstream_->fetch(url);
    if (rec) store_.put(*rec);
    return rec;
}

LiveFetcher::LiveFetcher(std::chrono::milliseconds politeness_delay, FetchStats* stats)
    : delay_(politeness_delay < std::chrono::milliseconds(0) ? std::chrono::milliseconds(0)
                                                             : politeness_delay),
      stats_(stats) {}

void LiveFetcher::wait_for_host(const std::string& host) {
    // Serializes requests per host: sleep until the politeness window of the
    // previous request to the same host has elapsed.
    while (true) {
        std::chrono::steady_clock::time_point wake;
        {
            std::lock_guard<std::mutex> lock(mu_);
            const auto now = std::chrono::steady_clock::now();
            const auto it = last_request_.find(host);
            if (it == last_request_.end() || it->second + delay_ <= now) {
                last_request_[host] = now;
                return;
            }
            wake = it->second + delay_;
        }
        std::this_thread::sleep_until(wake);
    }
}

std::optional<FetchRecord> LiveFetcher::fetch(const std::string& url) {
    std::string scheme, host, path;
    const std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw FetchError("malformed url: " + url);
    scheme = url.substr(0, scheme_end);
    const std::size_t host_start = scheme_end + 3;
    const std::size_t path_start = url.find('/', host_start);
    host = url.substr(host_start,
                      (path_start == std::string::npos ? url.size() : path_start) - host_start);
    path = path_start == std::string::npos ? "/" : url.substr(path_start);
    if (host.empty()) throw FetchError("malformed url: " + url);

    if (scheme == "https") {
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
        throw FetchError("https not supported in this build: " + url);
#endif
    } else if (scheme != "http") {
        throw FetchError("unsupported url scheme: " + url);
    }

    wait_for_host(host);

    httplib::Client client((scheme + "://" + host).c_str());
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path.c_str());
    if (!res) {
        throw FetchError("transport failure fetching " + url + ": " +
                         httplib::to_string(res.error()));
    }
    if (stats_) ++stats_->live_fetches;

    FetchRecord rec;
    rec.url = url;
    rec.body = res->body;
    rec.status = res->status;
    rec.fetched_at = now_utc_iso8601();
    rec.source = Source::live;
    return rec;
}

}  // namespace refrank::fetch
