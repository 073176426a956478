#include "refrank/report.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "refrank/coi.hpp"
#include "refrank/digest.hpp"
#include "refrank/email.hpp"
#include "refrank/errors.hpp"
#include "refrank/pdf_adapter.hpp"
#include "refrank/refparse.hpp"
#include "refrank/scholar.hpp"
#include "refrank/strings.hpp"

namespace refrank::report {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

/// Remembers the newest fetched_at seen, for deterministic offline
/// provenance timestamps. ISO-8601 strings compare lexicographically.
class TrackingFetcher final : public fetch::Fetcher {
public:
    explicit TrackingFetcher(fetch::Fetcher& inner) : inner_(inner) {}

    std::optional<fetch::FetchRecord> fetch(const std::string& url) override {
        auto rec = inner_.fetch(url);
        if (rec && !rec->fetched_at.empty()) {
            std::lock_guard<std::mutex> lock(mu_);
            if (rec->fetched_at > latest_) latest_ = rec->fetched_at;
        }
        return rec;
    }

    std::string latest() const {
        std::lock_guard<std::mutex> lock(mu_);
        return latest_;
    }

private:
    fetch::Fetcher& inner_;
    mutable std::mutex mu_;
    std::string latest_;
};

std::unique_ptr<fetch::Fetcher> build_fetcher(const config::PipelineConfig& cfg,
                                              fetch::FetchStats& stats) {
    const auto delay = std::chrono::milliseconds(cfg.scholar.politeness_delay_ms);
    switch (cfg.fetch_mode) {
        case config::FetchMode::cache_only:
            return std::make_unique<fetch::CacheOnlyFetcher>(fetch::CacheStore(cfg.cache_dir),
                                                             &stats);
        case config::FetchMode::cached:
            return std::make_unique<fetch::CachedFetcher>(
                fetch::CacheStore(cfg.cache_dir),
                std::make_shared<fetch::LiveFetcher>(delay, &stats), &stats);
        case config::FetchMode::live:
            return std::make_unique<fetch::LiveFetcher>(delay, &stats);
    }
    throw ConfigError("unknown fetch mode");
}

std::vector<scholar::Resolution> resolve_pool(const std::vector<freq::FrequencyEntry>& pool,
                                              fetch::Fetcher& fetcher,
                                              const scholar::ScholarConfig& cfg) {
    std::vector<scholar::Resolution> resolutions(pool.size());
    if (pool.empty()) return resolutions;

    const int workers = std::clamp<int>(cfg.parallelism, 1, static_cast<int>(pool.size()));
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;

    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pool.size()) return;
            try {
                resolutions[i] = scholar::resolve(pool[i].name, fetcher, cfg);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return resolutions;
}

std::string format_score(double score) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << score;
    return out.str();
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

ordered_json candidate_json(const rank::RankedCandidate& c) {
    ordered_json j;
    j["rank"] = c.rank;
    j["name"] = c.name;
    j["frequency"] = c.frequency;
    j["score"] = c.score;
    if (c.profile) {
        ordered_json p;
        p["id"] = c.profile->id.id;
        p["full_name"] = c.profile->full_name;
        p["affiliation"] = c.profile->affiliation;
        p["h_index"] = c.profile->h_index;
        p["i10_index"] = c.profile->i10_index;
        p["citations"] = c.profile->citations;
        p["verified_email_domain"] =
            c.profile->verified_email_domain ? ordered_json(*c.profile->verified_email_domain)
                                             : ordered_json(nullptr);
        p["homepage_url"] = c.profile->homepage_url ? ordered_json(*c.profile->homepage_url)
                                                    : ordered_json(nullptr);
        j["profile"] = std::move(p);
    } else {
        j["profile"] = nullptr;
    }
    if (c.email) {
        ordered_json e;
        e["address"] = *c.email;
        e["source_url"] = c.email_source_url.value_or("");
        e["domain_verified"] = c.email_domain_verified;
        j["email"] = std::move(e);
    } else {
        j["email"] = nullptr;
    }
    j["email_reason"] = c.email_reason ? ordered_json(*c.email_reason) : ordered_json(nullptr);
    if (c.conflict) j["conflict"] = *c.conflict;
    return j;
}

rank::RankedCandidate candidate_from_json(const json& j) {
    rank::RankedCandidate c;
    c.rank = j.value("rank", 0);
    c.name = j.value("name", "");
    c.frequency = j.value("frequency", 0);
    c.score = j.value("score", 0.0);
    if (j.contains("profile") && !j["profile"].is_null()) {
        const json& p = j["profile"];
        scholar::ScholarProfile profile;
        profile.id.id = p.value("id", "");
        profile.short_name = c.name;
        profile.full_name = p.value("full_name", "");
        profile.affiliation = p.value("affiliation", "");
        profile.h_index = p.value("h_index", 0);
        profile.i10_index = p.value("i10_index", 0);
        profile.citations = p.value("citations", 0L);
        if (p.contains("verified_email_domain") && !p["verified_email_domain"].is_null()) {
            profile.verified_email_domain = p["verified_email_domain"].get<std::string>();
        }
        if (p.contains("homepage_url") && !p["homepage_url"].is_null()) {
            profile.homepage_url = p["homepage_url"].get<std::string>();
        }
        c.profile = std::move(profile);
    }
    if (j.contains("email") && !j["email"].is_null()) {
        const json& e = j["email"];
        c.email = e.value("address", "");
        c.email_source_url = e.value("source_url", "");
        c.email_domain_verified = e.value("domain_verified", false);
    }
    if (j.contains("email_reason") && !j["email_reason"].is_null()) {
        c.email_reason = j["email_reason"].get<std::string>();
    }
    if (j.contains("conflict") && !j["conflict"].is_null()) {
        c.conflict = j["conflict"].get<std::string>();
    }
    return c;
}

std::string emit_table(const ReviewerReport& report) {
    static const std::array<std::string, 5> kHeader = {"Author's (Rank by Score)", "Total Score",
                                                       "Verified Email Domain", "Homepage Link",
                                                       "Email"};
    std::vector<std::array<std::string, 5>> rows;
    for (const auto& c : report.rows) {
        std::array<std::string, 5> row;
        row[0] = c.name;
        row[1] = format_score(c.score);
        row[2] = c.profile && c.profile->verified_email_domain ? *c.profile->verified_email_domain
                                                               : "";
        row[3] = c.profile && c.profile->homepage_url ? *c.profile->homepage_url : "";
        row[4] = c.email.value_or("");
        rows.push_back(std::move(row));
    }

    std::array<std::size_t, 5> width{};
    for (std::size_t i = 0; i < 5; ++i) width[i] = kHeader[i].size();
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], row[i].size());
    }

    std::ostringstream out;
    auto put_row = [&](const std::array<std::string, 5>& row) {
        std::string line;
        for (std::size_t i = 0; i < 5; ++i) {
            if (i) line += " | ";
            line += row[i];
            if (i + 1 < 5) line.append(width[i] - row[i].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    };
    put_row({kHeader[0], kHeader[1], kHeader[2], kHeader[3], kHeader[4]});
    for (const auto& row : rows) put_row(row);
    return out.str();
}

std::string emit_csv(const ReviewerReport& report) {
    std::ostringstream out;
    out << "section,rank,name,frequency,score,verified_email_domain,homepage,email,reason\n";
    auto put = [&](const std::string& section, const rank::RankedCandidate& c,
                   const std::string& reason) {
        out << section << ',' << (c.rank > 0 ? std::to_string(c.rank) : "") << ','
            << csv_quote(c.name) << ',' << c.frequency << ',' << format_score(c.score) << ','
            << csv_quote(c.profile && c.profile->verified_email_domain
                             ? *c.profile->verified_email_domain
                             : "")
            << ','
            << csv_quote(c.profile && c.profile->homepage_url ? *c.profile->homepage_url : "")
            << ',' << csv_quote(c.email.value_or("")) << ',' << csv_quote(reason) << "\n";
    };
    for (const auto& c : report.rows) put("row", c, c.email_reason.value_or(""));
    for (const auto& c : report.discarded) put("discarded", c, c.conflict.value_or(""));
    for (const auto& u : report.unresolved) {
        out << "unresolved,," << csv_quote(u.name) << ',' << u.frequency << ",,,,,"
            << csv_quote(u.reason) << "\n";
    }
    return out.str();
}

std::string emit_json(const ReviewerReport& report) {
    ordered_json j;
    ordered_json prov;
    prov["input_name"] = report.provenance.input_name;
    prov["input_digest"] = report.provenance.input_digest;
    prov["config_digest"] = report.provenance.config_digest;
    prov["fetch_mode"] = report.provenance.fetch_mode;
    prov["cache_hits"] = report.provenance.cache_hits;
    prov["cache_misses"] = report.provenance.cache_misses;
    prov["live_fetches"] = report.provenance.live_fetches;
    prov["timestamp"] = report.provenance.timestamp;
    j["provenance"] = std::move(prov);

    j["rows"] = ordered_json::array();
    for (const auto& c : report.rows) j["rows"].push_back(candidate_json(c));
    j["discarded"] = ordered_json::array();
    for (const auto& c : report.discarded) j["discarded"].push_back(candidate_json(c));
    j["unresolved"] = ordered_json::array();
    for (const auto& u : report.unresolved) {
        ordered_json e;
        e["name"] = u.name;
        e["frequency"] = u.frequency;
        e["reason"] = u.reason;
        e["detail"] = u.detail;
        j["unresolved"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

}  // namespace

ReviewerReport run_pipeline(const ingest::SourceDocument& doc,
                            const std::optional<std::vector<std::string>>& submitting_authors,
                            const config::PipelineConfig& cfg, const std::string& input_name,
                            fetch::Fetcher* fetcher_override,
                            const ingest::TextExtractionAdapter* pdf_adapter) {
    cfg.validate();

    static const ingest::BasicPdfTextAdapter default_pdf_adapter;
    const ingest::NormalizedText text =
        ingest::extract_text(doc, pdf_adapter ? pdf_adapter : &default_pdf_adapter);

    const refparse::StopwordList stopwords =
        cfg.stopword_path.empty() ? refparse::StopwordList::builtin_default()
                                  : refparse::StopwordList::from_file(cfg.stopword_path);

    const refparse::ReferenceSection section = refparse::isolate_reference_section(text);
    const std::vector<refparse::Citation> citations = refparse::parse_citations(section, stopwords);
    const freq::FrequencyTable table = freq::count_frequencies(refparse::collect_mentions(citations));

    std::vector<freq::FrequencyEntry> pool = freq::sort_by_frequency(table);
    if (pool.size() > static_cast<std::size_t>(cfg.candidate_pool)) {
        pool.resize(cfg.candidate_pool);
    }

    std::vector<std::string> submitters;
    if (submitting_authors) {
        for (const auto& s : *submitting_authors) {
            const std::string cleaned = strings::collapse_whitespace(strings::trim(s));
            if (!cleaned.empty()) submitters.push_back(cleaned);
        }
    } else {
        submitters = detect_submitting_authors(text, stopwords);
    }

    fetch::FetchStats stats;
    std::unique_ptr<fetch::Fetcher> owned;
    fetch::Fetcher* base = fetcher_override;
    if (!base) {
        owned = build_fetcher(cfg, stats);
        base = owned.get();
    }
    TrackingFetcher fetcher(*base);

    const std::vector<scholar::Resolution> resolutions = resolve_pool(pool, fetcher, cfg.scholar);

    std::map<std::string, std::optional<scholar::ScholarProfile>> profiles;
    for (std::size_t i = 0; i < pool.size(); ++i) profiles[pool[i].name] = resolutions[i].profile;

    std::vector<rank::RankedCandidate> ranked = rank::rank_candidates(
        freq::FrequencyTable::from_entries(pool), profiles, cfg.weights,
        static_cast<int>(pool.size()));

    coi::ConflictContext ctx;
    ctx.submitting_authors = submitters;
    ctx.citations = citations;
    if (!submitters.empty() && (cfg.rules.same_email_domain || cfg.rules.scholar_coauthor)) {
        for (const auto& submitter : submitters) {
            const scholar::Resolution res = scholar::resolve(submitter, fetcher, cfg.scholar);
            if (!res.profile) continue;
            if (cfg.rules.same_email_domain && res.profile->verified_email_domain) {
                ctx.submitter_domains.push_back(*res.profile->verified_email_domain);
            }
            if (cfg.rules.scholar_coauthor) {
                const auto page =
                    fetcher.fetch(scholar::build_profile_url(res.profile->id, cfg.scholar));
                if (page && page->status < 400) {
                    for (auto& name : scholar::extract_coauthors(page->body, cfg.scholar)) {
                        ctx.submitter_coauthors.push_back(std::move(name));
                    }
                }
            }
        }
    }

    coi::ConflictOutcome outcome = coi::detect_conflicts(ranked, ctx, cfg.rules);

    ReviewerReport rep;
    rep.rows = std::move(outcome.kept);
    if (rep.rows.size() > static_cast<std::size_t>(cfg.top_n)) rep.rows.resize(cfg.top_n);
    rep.discarded = std::move(outcome.discarded);

    for (auto& row : rep.rows) {
        if (!row.profile) {
            row.email_reason = "no_profile";
            continue;
        }
        const email::EmailOutcome found = email::find_reviewer_email(*row.profile, fetcher);
        if (found.found) {
            row.email = found.found->address;
            row.email_domain_verified = found.found->domain_verified;
            row.email_source_url = found.found->source_url;
        } else if (found.failure) {
            row.email_reason = email::to_string(*found.failure);
        }
    }

    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (resolutions[i].failure) {
            rep.unresolved.push_back({pool[i].name, pool[i].count,
                                      scholar::to_string(*resolutions[i].failure),
                                      resolutions[i].detail});
        }
    }

    rep.provenance.input_name = input_name;
    rep.provenance.input_digest = digest::sha256_hex(doc.bytes);
    rep.provenance.config_digest = config::config_digest(cfg);
    rep.provenance.fetch_mode = config::to_string(cfg.fetch_mode);
    rep.provenance.cache_hits = stats.cache_hits.load();
    rep.provenance.cache_misses = stats.cache_misses.load();
    rep.provenance.live_fetches = stats.live_fetches.load();
    // Offline runs must be reproducible byte for byte, so their timestamp
    // comes from the cache records, not the wall clock.
    rep.provenance.timestamp = cfg.fetch_mode == config::FetchMode::live
                                   ? fetch::now_utc_iso8601()
                                   : fetcher.latest();
    return rep;
}

std::string emit(const ReviewerReport& report, config::OutputFormat format) {
    switch (format) {
        case config::OutputFormat::table: return emit_table(report);
        case config::OutputFormat::csv: return emit_csv(report);
        case config::OutputFormat::json: return emit_json(report);
    }
    throw ConfigError("unknown output format");
}

ReviewerReport report_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(std::string("cannot parse report json: ") + e.what());
    }
    ReviewerReport rep;
    if (j.contains("provenance")) {
        const json& p = j["provenance"];
        rep.provenance.input_name = p.value("input_name", "");
        rep.provenance.input_digest = p.value("input_digest", "");
        rep.provenance.config_digest = p.value("config_digest", "");
        rep.provenance.fetch_mode = p.value("fetch_mode", "");
        rep.provenance.cache_hits = p.value("cache_hits", 0L);
        rep.provenance.cache_misses = p.value("cache_misses", 0L);
        rep.provenance.live_fetches = p.value("live_fetches", 0L);
        rep.provenance.timestamp = p.value("timestamp", "");
    }
    for (const auto& c : j.value("rows", json::array())) rep.rows.push_back(candidate_from_json(c));
    for (const auto& c : j.value("discarded", json::array())) {
        rep.discarded.push_back(candidate_from_json(c));
    }
    for (const auto& u : j.value("unresolved", json::array())) {
        rep.unresolved.push_back({u.value("name", ""), u.value("frequency", 0),
                                  u.value("reason", ""), u.value("detail", "")});
    }
    return rep;
}

std::string frequency_lines(const freq::FrequencyTable& table) {
    std::ostringstream out;
    for (const auto& entry : freq::sort_by_frequency(table)) {
        out << entry.name << ' ' << entry.count << "\n";
    }
    return out.str();
}

std::vector<std::string> detect_submitting_authors(const ingest::NormalizedText& text,
                                                   const refparse::StopwordList& stopwords) {
    constexpr std::size_t kHeaderLineLimit = 40;
    std::istringstream in(text.text);
    std::string line;
    std::size_t line_no = 0;
    while (line_no < kHeaderLineLimit && std::getline(in, line)) {
        ++line_no;
        const std::string folded = strings::fold_name(line);
        if (folded.rfind("abstract", 0) == 0) break;  // header region ends
        const std::string normalized = refparse::normalize_citation(line);
        const auto tokens = refparse::extract_author_tokens(normalized, stopwords);
        if (tokens.size() >= 2) return tokens;  // first plausible author line
    }
    return {};
}

GroundTruth GroundTruth::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open ground-truth file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str(), path.string());
}

GroundTruth GroundTruth::from_json_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError("cannot parse ground truth " + origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("ground truth root must be an object: " + origin);

    static const char* kKeys[] = {"frequency", "id",        "email_domain",
                                  "professional_info", "h_index", "i10_index",
                                  "citations", "homepage",  "email"};
    GroundTruth truth;
    for (auto input_it = doc.begin(); input_it != doc.end(); ++input_it) {
        auto& labels = truth.by_input[input_it.key()];
        for (auto cand_it = input_it->begin(); cand_it != input_it->end(); ++cand_it) {
            const json& v = cand_it.value();
            for (const char* k : kKeys) {
                if (!v.contains(k)) {
                    throw MissingLabel("label '" + std::string(k) + "' missing for candidate '" +
                                       cand_it.key() + "' in " + origin);
                }
            }
            CandidateLabel label;
            if (!v["frequency"].is_null()) label.frequency = v["frequency"].get<int>();
            if (!v["id"].is_null()) label.id = v["id"].get<std::string>();
            if (!v["email_domain"].is_null()) label.email_domain = v["email_domain"].get<std::string>();
            if (!v["professional_info"].is_null()) {
                label.professional_info = v["professional_info"].get<std::string>();
            }
            if (!v["h_index"].is_null()) label.h_index = v["h_index"].get<int>();
            if (!v["i10_index"].is_null()) label.i10_index = v["i10_index"].get<int>();
            if (!v["citations"].is_null()) label.citations = v["citations"].get<long>();
            if (!v["homepage"].is_null()) label.homepage = v["homepage"].get<std::string>();
            if (!v["email"].is_null()) label.email = v["email"].get<std::string>();
            labels[strings::fold_name(cand_it.key())] = std::move(label);
        }
    }
    return truth;
}

namespace {

// A candidate pulled out of a report for scoring against its label.
struct EvalView {
    std::string name;
    int frequency = 0;
    const scholar::ScholarProfile* profile = nullptr;
    std::optional<std::string> email;
};

bool eq_opt_str(const std::optional<std::string>& got, const std::optional<std::string>& want,
                bool fold) {
    if (got.has_value() != want.has_value()) return false;
    if (!got) return true;
    if (fold) return strings::fold_name(*got) == strings::fold_name(*want);
    return *got == *want;
}

template <typename T>
bool eq_opt_num(const std::optional<T>& got, const std::optional<T>& want) {
    if (got.has_value() != want.has_value()) return false;
    return !got || *got == *want;
}

}  // namespace

AccuracyTable evaluate(const std::vector<ReviewerReport>& reports, const GroundTruth& truth) {
    static const char* kAttributes[] = {"Frequency", "ID",        "Email Domain",
                                        "Professional Info", "H-index", "i10-index",
                                        "Citations", "Homepage",  "Email"};
    constexpr int kAttributeCount = 9;
    int correct[kAttributeCount] = {};
    int total = 0;
    int wrong_id = 0;

    for (const auto& report : reports) {
        const auto input_it = truth.by_input.find(report.provenance.input_name);
        if (input_it == truth.by_input.end()) {
            throw MissingLabel("no labels for input '" + report.provenance.input_name + "'");
        }
        const auto& labels = input_it->second;

        std::vector<EvalView> views;
        std::vector<std::string> seen;
        auto add = [&](const std::string& name, int frequency,
                       const scholar::ScholarProfile* profile,
                       const std::optional<std::string>& email) {
            const std::string folded = strings::fold_name(name);
            if (std::find(seen.begin(), seen.end(), folded) != seen.end()) return;
            seen.push_back(folded);
            views.push_back({name, frequency, profile, email});
        };
        for (const auto& c : report.rows) {
            add(c.name, c.frequency, c.profile ? &*c.profile : nullptr, c.email);
        }
        for (const auto& c : report.discarded) {
            add(c.name, c.frequency, c.profile ? &*c.profile : nullptr, c.email);
        }
        for (const auto& u : report.unresolved) add(u.name, u.frequency, nullptr, std::nullopt);

        for (const auto& v : views) {
            const auto label_it = labels.find(strings::fold_name(v.name));
            if (label_it == labels.end()) {
                throw MissingLabel("no label for candidate '" + v.name + "' in input '" +
                                   report.provenance.input_name + "'");
            }
            const CandidateLabel& label = label_it->second;
            ++total;

            const std::optional<int> frequency = v.frequency;
            const std::optional<std::string> id =
                v.profile ? std::optional<std::string>(v.profile->id.id) : std::nullopt;
            const std::optional<std::string> domain =
                v.profile ? v.profile->verified_email_domain : std::nullopt;
            const std::optional<std::string> affiliation =
                v.profile ? std::optional<std::string>(v.profile->affiliation) : std::nullopt;
            const std::optional<int> h =
                v.profile ? std::optional<int>(v.profile->h_index) : std::nullopt;
            const std::optional<int> i10 =
                v.profile ? std::optional<int>(v.profile->i10_index) : std::nullopt;
            const std::optional<long> citations =
                v.profile ? std::optional<long>(v.profile->citations) : std::nullopt;
            const std::optional<std::string> homepage =
                v.profile ? v.profile->homepage_url : std::nullopt;

            if (eq_opt_num(frequency, label.frequency)) ++correct[0];
            if (eq_opt_str(id, label.id, false)) ++correct[1];
            if (eq_opt_str(domain, label.email_domain, true)) ++correct[2];
            if (eq_opt_str(affiliation, label.professional_info, false)) ++correct[3];
            if (eq_opt_num(h, label.h_index)) ++correct[4];
            if (eq_opt_num(i10, label.i10_index)) ++correct[5];
            if (eq_opt_num(citations, label.citations)) ++correct[6];
            if (eq_opt_str(homepage, label.homepage, false)) ++correct[7];
            if (eq_opt_str(v.email, label.email, true)) ++correct[8];

            // Wrong-ID: a profile was selected but it is not the labeled one.
            if (id && label.id && *id != *label.id) ++wrong_id;
        }
    }

    AccuracyTable out;
    double percent_sum = 0.0;
    for (int i = 0; i < kAttributeCount; ++i) {
        AttributeAccuracy acc;
        acc.attribute = kAttributes[i];
        acc.correct = correct[i];
        acc.total = total;
        acc.percent = total > 0 ? 100.0 * correct[i] / total : 0.0;
        percent_sum += acc.percent;
        out.attributes.push_back(std::move(acc));
    }
    out.wrong_id_count = wrong_id;
    out.evaluated_candidates = total;
    out.wrong_id_rate_percent = total > 0 ? 100.0 * wrong_id / total : 0.0;
    out.unweighted_mean_percent = percent_sum / kAttributeCount;
    return out;
}

std::string accuracy_csv(const AccuracyTable& table) {
    std::ostringstream out;
    out << "attribute,correct,total,accuracy_percent\n";
    out << std::fixed << std::setprecision(2);
    for (const auto& a : table.attributes) {
        out << a.attribute << ',' << a.correct << ',' << a.total << ',' << a.percent << "\n";
    }
    out << "Wrong-ID," << table.wrong_id_count << ',' << table.evaluated_candidates << ','
        << table.wrong_id_rate_percent << "\n";
    out << "Mean,,," << table.unweighted_mean_percent << "\n";
    return out.str();
}

std::string accuracy_json(const AccuracyTable& table) {
    ordered_json j;
    j["attributes"] = ordered_json::array();
    for (const auto& a : table.attributes) {
        ordered_json e;
        e["attribute"] = a.attribute;
        e["correct"] = a.correct;
        e["total"] = a.total;
        e["percent"] = a.percent;
        j["attributes"].push_back(std::move(e));
    }
    j["wrong_id"] = {{"count", table.wrong_id_count},
                     {"total", table.evaluated_candidates},
                     {"rate_percent", table.wrong_id_rate_percent}};
    j["unweighted_mean_percent"] = table.unweighted_mean_percent;
    return j.dump(2) + "\n";
}

}  // namespace refrank::report
