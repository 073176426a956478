// refrank: rank reviewer candidates for a manuscript from the authors it
// cites, using public scholar profiles fetched live or from a recorded cache.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "refrank/config.hpp"
#include "refrank/errors.hpp"
#include "refrank/report.hpp"
#include "refrank/strings.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseFailure = 2;
constexpr int kExitFetchFailure = 3;
constexpr int kExitConfigError = 4;

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw refrank::ConfigError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string input_label(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::vector<std::string> parse_authors(const std::string& arg) {
    std::vector<std::string> out;
    for (const auto& part : refrank::strings::split(arg, ';')) {
        const std::string name = refrank::strings::trim(part);
        if (!name.empty()) out.push_back(name);
    }
    return out;
}

refrank::rank::ScoreWeights parse_weights(const std::string& arg) {
    const auto parts = refrank::strings::split(arg, ',');
    if (parts.size() != 3) {
        throw refrank::ConfigError("--weights expects three comma-separated numbers: a,b,g");
    }
    try {
        refrank::rank::ScoreWeights w;
        w.alpha = std::stod(parts[0]);
        w.beta = std::stod(parts[1]);
        w.gamma = std::stod(parts[2]);
        return w;
    } catch (const std::exception&) {
        throw refrank::ConfigError("--weights values must be numbers: " + arg);
    }
}

struct RunOptions {
    std::string input;
    std::string authors;
    bool authors_given = false;
    std::string mode;
    std::string cache_dir;
    int top_n = 0;
    bool top_given = false;
    int pool = 0;
    bool pool_given = false;
    std::string weights;
    std::string format;
    std::string config_path;
};

refrank::config::PipelineConfig assemble_config(const RunOptions& opt) {
    using refrank::config::PipelineConfig;
    PipelineConfig cfg;
    if (!opt.config_path.empty()) cfg = refrank::config::load_config(opt.config_path);
    if (const char* env_cache = std::getenv("REFRANK_CACHE"); env_cache && *env_cache) {
        cfg.cache_dir = env_cache;
    }
    // CLI flags win over env and config file.
    if (!opt.mode.empty()) cfg.fetch_mode = refrank::config::fetch_mode_from_string(opt.mode);
    if (!opt.cache_dir.empty()) cfg.cache_dir = opt.cache_dir;
    if (opt.top_given) cfg.top_n = opt.top_n;
    if (opt.pool_given) cfg.candidate_pool = opt.pool;
    if (!opt.weights.empty()) cfg.weights = parse_weights(opt.weights);
    if (!opt.format.empty()) {
        cfg.output_format = refrank::config::output_format_from_string(opt.format);
    }
    cfg.validate();
    return cfg;
}

int run_command(const RunOptions& opt, bool warm_only) {
    refrank::config::PipelineConfig cfg = assemble_config(opt);
    if (warm_only) cfg.fetch_mode = refrank::config::FetchMode::cached;

    refrank::ingest::SourceDocument doc;
    doc.bytes = read_file_bytes(opt.input);
    doc.format_hint = refrank::ingest::Format::auto_detect;

    std::optional<std::vector<std::string>> authors;
    if (opt.authors_given) authors = parse_authors(opt.authors);

    const refrank::report::ReviewerReport report =
        refrank::report::run_pipeline(doc, authors, cfg, input_label(opt.input));

    if (warm_only) {
        std::cout << "cache " << cfg.cache_dir.string() << ": " << report.provenance.live_fetches
                  << " fetched, " << report.provenance.cache_hits << " already cached\n";
    } else {
        std::cout << refrank::report::emit(report, cfg.output_format);
    }
    return kExitOk;
}

int eval_command(const std::string& truth_path, const std::vector<std::string>& report_paths,
                 const std::string& format) {
    const auto truth = refrank::report::GroundTruth::from_file(truth_path);
    std::vector<refrank::report::ReviewerReport> reports;
    reports.reserve(report_paths.size());
    for (const auto& path : report_paths) {
        reports.push_back(refrank::report::report_from_json(read_file_bytes(path)));
    }
    const auto table = refrank::report::evaluate(reports, truth);
    if (format == "json") {
        std::cout << refrank::report::accuracy_json(table);
    } else {
        std::cout << refrank::report::accuracy_csv(table);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ranked reviewer candidates from a manuscript's reference section"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "Run the pipeline and emit the reviewer report");
    run->add_option("input", run_opt.input, "Manuscript file (plain text or pdf)")->required();
    auto* authors_opt =
        run->add_option("--authors", run_opt.authors,
                        "Submitting authors, ';'-separated; empty disables conflict checks");
    run->add_option("--mode", run_opt.mode, "Fetch mode: live, cached or cache_only")
        ->check(CLI::IsMember({"live", "cached", "cache_only"}));
    run->add_option("--cache", run_opt.cache_dir, "Cache directory");
    auto* top_opt = run->add_option("--top", run_opt.top_n, "Rows in the final report");
    auto* pool_opt =
        run->add_option("--pool", run_opt.pool, "Frequency leaders sent to profile lookup");
    run->add_option("--weights", run_opt.weights, "Score weights a,b,g");
    run->add_option("--format", run_opt.format, "Output format: table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    run->add_option("--config", run_opt.config_path, "Config file (json)");

    std::string truth_path;
    std::vector<std::string> report_paths;
    std::string eval_format = "csv";
    CLI::App* eval = app.add_subcommand("eval", "Score reports against hand-labeled ground truth");
    eval->add_option("--truth", truth_path, "Ground-truth json file")->required();
    eval->add_option("--reports", report_paths, "Report json files")->required()->expected(-1);
    eval->add_option("--format", eval_format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    RunOptions warm_opt;
    CLI::App* cache = app.add_subcommand("cache", "Cache maintenance");
    cache->require_subcommand(1);
    CLI::App* warm = cache->add_subcommand("warm", "Live-fetch everything a run needs into the cache");
    warm->add_option("input", warm_opt.input, "Manuscript file (plain text or pdf)")->required();
    auto* warm_authors_opt = warm->add_option("--authors", warm_opt.authors,
                                              "Submitting authors, ';'-separated");
    warm->add_option("--cache", warm_opt.cache_dir, "Cache directory");
    warm->add_option("--config", warm_opt.config_path, "Config file (json)");
    auto* warm_pool_opt =
        warm->add_option("--pool", warm_opt.pool, "Frequency leaders sent to profile lookup");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (run->parsed()) {
            run_opt.authors_given = authors_opt->count() > 0;
            run_opt.top_given = top_opt->count() > 0;
            run_opt.pool_given = pool_opt->count() > 0;
            return run_command(run_opt, false);
        }
        if (eval->parsed()) {
            return eval_command(truth_path, report_paths, eval_format);
        }
        if (cache->parsed() && warm->parsed()) {
            warm_opt.authors_given = warm_authors_opt->count() > 0;
            warm_opt.pool_given = warm_pool_opt->count() > 0;
            return run_command(warm_opt, true);
        }
    } catch (const refrank::NoReferenceSection& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseFailure;
    } catch (const refrank::NoCitationsFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseFailure;
    } catch (const refrank::UnsupportedFormat& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseFailure;
    } catch (const refrank::ExtractionFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseFailure;
    } catch (const refrank::FetchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFetchFailure;
    } catch (const refrank::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const refrank::MissingLabel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
