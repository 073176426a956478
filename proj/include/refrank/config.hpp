#pragma once

#include <filesystem>
#include <string>

#include "refrank/coi.hpp"
#include "refrank/rank.hpp"
#include "refrank/scholar.hpp"

namespace refrank::config {

enum class FetchMode { live, cached, cache_only };
enum class OutputFormat { table, csv, json };

FetchMode fetch_mode_from_string(const std::string& s);
std::string to_string(FetchMode mode);
OutputFormat output_format_from_string(const std::string& s);
std::string to_string(OutputFormat format);

struct PipelineConfig {
    FetchMode fetch_mode = FetchMode::cache_only;
    std::filesystem::path cache_dir = "cache";
    rank::ScoreWeights weights;
    int top_n = 3;
    int candidate_pool = 10;  // how many frequency leaders get profile lookups
    std::filesystem::path stopword_path;  // empty: bundled default list
    coi::ConflictRules rules;
    OutputFormat output_format = OutputFormat::table;
    scholar::ScholarConfig scholar;

    /// Throws ConfigError on bad combinations (top_n > candidate_pool,
    /// all-zero weights, ...).
    void validate() const;
};

/// Reads a json config file; keys not present keep their defaults, unknown
/// keys raise ConfigError.
PipelineConfig load_config(const std::filesystem::path& path);

/// Applies json content onto an existing config (used by load_config and
/// by CLI --config handling).
void apply_json_text(PipelineConfig& config, const std::string& json_text,
                     const std::string& origin);

/// SHA-256 over the canonical serialized form; part of report provenance.
std::string config_digest(const PipelineConfig& config);

}  // namespace refrank::config
