#include "refrank/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "refrank/digest.hpp"
#include "refrank/errors.hpp"

namespace refrank::config {

using nlohmann::json;
using nlohmann::ordered_json;

FetchMode fetch_mode_from_string(const std::string& s) {
    if (s == "live") return FetchMode::live;
    if (s == "cached") return FetchMode::cached;
    if (s == "cache_only") return FetchMode::cache_only;
    throw ConfigError("unknown fetch mode: " + s);
}

std::string to_string(FetchMode mode) {
    switch (mode) {
        case FetchMode::live: return "live";
        case FetchMode::cached: return "cached";
        case FetchMode::cache_only: return "cache_only";
    }
    return "cache_only";
}

OutputFormat output_format_from_string(const std::string& s) {
    if (s == "table") return OutputFormat::table;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw ConfigError("unknown output format: " + s);
}

std::string to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::table: return "table";
        case OutputFormat::csv: return "csv";
        case OutputFormat::json: return "json";
    }
    return "table";
}

void PipelineConfig::validate() const {
    if (top_n < 1) throw ConfigError("top_n must be >= 1");
    if (candidate_pool < 1) throw ConfigError("candidate_pool must be >= 1");
    if (top_n > candidate_pool) throw ConfigError("top_n must not exceed candidate_pool");
    if (weights.alpha < 0 || weights.beta < 0 || weights.gamma < 0) {
        throw ConfigError("score weights must be non-negative");
    }
    if (weights.alpha + weights.beta + weights.gamma <= 0) {
        throw ConfigError("at least one score weight must be positive");
    }
    if (scholar.parallelism < 1) throw ConfigError("parallelism must be >= 1");
    if (scholar.politeness_delay_ms < 0) throw ConfigError("politeness_delay_ms must be >= 0");
    if (fetch_mode == FetchMode::cache_only && cache_dir.empty()) {
        throw ConfigError("cache_only mode needs a cache directory");
    }
}

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known) {
            if (it.key() == k) {
                ok = true;
                break;
            }
        }
        if (!ok) throw ConfigError("unknown config key '" + it.key() + "' in " + where);
    }
}

}  // namespace

void apply_json_text(PipelineConfig& config, const std::string& json_text,
                     const std::string& origin) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError("cannot parse config " + origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be an object: " + origin);

    reject_unknown_keys(doc,
                        {"fetch_mode", "cache_dir", "weights", "top_n", "candidate_pool",
                         "stopword_path", "rules", "output_format", "scholar"},
                        origin);
    try {
        if (doc.contains("fetch_mode")) {
            config.fetch_mode = fetch_mode_from_string(doc["fetch_mode"].get<std::string>());
        }
        if (doc.contains("cache_dir")) {
            config.cache_dir = doc["cache_dir"].get<std::string>();
        }
        if (doc.contains("weights")) {
            const json& w = doc["weights"];
            reject_unknown_keys(w, {"alpha", "beta", "gamma"}, origin + " weights");
            if (w.contains("alpha")) config.weights.alpha = w["alpha"].get<double>();
            if (w.contains("beta")) config.weights.beta = w["beta"].get<double>();
            if (w.contains("gamma")) config.weights.gamma = w["gamma"].get<double>();
        }
        if (doc.contains("top_n")) config.top_n = doc["top_n"].get<int>();
        if (doc.contains("candidate_pool")) config.candidate_pool = doc["candidate_pool"].get<int>();
        if (doc.contains("stopword_path")) {
            config.stopword_path = doc["stopword_path"].get<std::string>();
        }
        if (doc.contains("rules")) {
            const json& r = doc["rules"];
            reject_unknown_keys(r,
                                {"is_submitting_author", "co_cited_with_submitter",
                                 "same_email_domain", "scholar_coauthor"},
                                origin + " rules");
            if (r.contains("is_submitting_author")) {
                config.rules.is_submitting_author = r["is_submitting_author"].get<bool>();
            }
            if (r.contains("co_cited_with_submitter")) {
                config.rules.co_cited_with_submitter = r["co_cited_with_submitter"].get<bool>();
            }
            if (r.contains("same_email_domain")) {
                config.rules.same_email_domain = r["same_email_domain"].get<bool>();
            }
            if (r.contains("scholar_coauthor")) {
                config.rules.scholar_coauthor = r["scholar_coauthor"].get<bool>();
            }
        }
        if (doc.contains("output_format")) {
            config.output_format = output_format_from_string(doc["output_format"].get<std::string>());
        }
        if (doc.contains("scholar")) {
            const json& s = doc["scholar"];
            reject_unknown_keys(s,
                                {"search_url_template", "profile_url_template", "id_pattern",
                                 "full_name_pattern", "affiliation_pattern", "citations_pattern",
                                 "h_index_pattern", "i10_index_pattern", "email_domain_pattern",
                                 "homepage_pattern", "coauthor_pattern", "parallelism",
                                 "politeness_delay_ms"},
                                origin + " scholar");
            auto& sc = config.scholar;
            if (s.contains("search_url_template")) sc.search_url_template = s["search_url_template"];
            if (s.contains("profile_url_template")) sc.profile_url_template = s["profile_url_template"];
            if (s.contains("id_pattern")) sc.id_pattern = s["id_pattern"];
            if (s.contains("full_name_pattern")) sc.full_name_pattern = s["full_name_pattern"];
            if (s.contains("affiliation_pattern")) sc.affiliation_pattern = s["affiliation_pattern"];
            if (s.contains("citations_pattern")) sc.citations_pattern = s["citations_pattern"];
            if (s.contains("h_index_pattern")) sc.h_index_pattern = s["h_index_pattern"];
            if (s.contains("i10_index_pattern")) sc.i10_index_pattern = s["i10_index_pattern"];
            if (s.contains("email_domain_pattern")) sc.email_domain_pattern = s["email_domain_pattern"];
            if (s.contains("homepage_pattern")) sc.homepage_pattern = s["homepage_pattern"];
            if (s.contains("coauthor_pattern")) sc.coauthor_pattern = s["coauthor_pattern"];
            if (s.contains("parallelism")) sc.parallelism = s["parallelism"].get<int>();
            if (s.contains("politeness_delay_ms")) {
                sc.politeness_delay_ms = s["politeness_delay_ms"].get<int>();
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError("bad value in config " + origin + ": " + e.what());
    }
}

PipelineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    PipelineConfig config;
    apply_json_text(config, buf.str(), path.string());
    return config;
}

std::string config_digest(const PipelineConfig& config) {
    ordered_json j;
    j["fetch_mode"] = to_string(config.fetch_mode);
    j["cache_dir"] = config.cache_dir.string();
    j["weights"] = {{"alpha", config.weights.alpha},
                    {"beta", config.weights.beta},
                    {"gamma", config.weights.gamma}};
    j["top_n"] = config.top_n;
    j["candidate_pool"] = config.candidate_pool;
    j["stopword_path"] = config.stopword_path.string();
    j["rules"] = {{"is_submitting_author", config.rules.is_submitting_author},
                  {"co_cited_with_submitter", config.rules.co_cited_with_submitter},
                  {"same_email_domain", config.rules.same_email_domain},
                  {"scholar_coauthor", config.rules.scholar_coauthor}};
    j["output_format"] = to_string(config.output_format);
    j["scholar"] = {{"search_url_template", config.scholar.search_url_template},
                    {"profile_url_template", config.scholar.profile_url_template},
                    {"id_pattern", config.scholar.id_pattern},
                    {"full_name_pattern", config.scholar.full_name_pattern},
                    {"affiliation_pattern", config.scholar.affiliation_pattern},
                    {"citations_pattern", config.scholar.citations_pattern},
                    {"h_index_pattern", config.scholar.h_index_pattern},
                    {"i10_index_pattern", config.scholar.i10_index_pattern},
                    {"email_domain_pattern", config.scholar.email_domain_pattern},
                    {"homepage_pattern", config.scholar.homepage_pattern},
                    {"coauthor_pattern", config.scholar.coauthor_pattern},
                    {"parallelism", config.scholar.parallelism},
                    {"politeness_delay_ms", config.scholar.politeness_delay_ms}};
    return digest::sha256_hex(j.dump());
}

}  // namespace refrank::config
