// Command-line front end: runs verification campaigns and lists the suite
// catalog.  Exit codes: 0 all pass, 1 failures, 2 configuration error.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hermite2d/harness.hpp"

namespace {

// minimal glob: '*' any run, '?' one character
bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback, bool& present) {
    const char* v = std::getenv(name);
    present = (v != nullptr);
    return present ? std::strtoull(v, nullptr, 10) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verify: numerical verification harness for 2D Hermite identities"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a verification campaign");
    std::string config_path, filter, out_path, format;
    int jobs = -1;
    std::int64_t seed = -1;
    run->add_option("--config", config_path, "campaign config file (bundled default if omitted)");
    run->add_option("--jobs", jobs, "worker bound for parallel kernels");
    run->add_option("--seed", seed, "override the campaign seed");
    run->add_option("--filter", filter, "suite id glob, e.g. 'ks.*'");
    run->add_option("--out", out_path, "write records to this path");
    run->add_option("--format", format, "records format: json or csv");

    auto* list = app.add_subcommand("list", "list available suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& info : h2d::harness::list_suites())
                std::cout << info.id << "  [" << info.tag << "]  " << info.description << "\n";
            return 0;
        }

        h2d::harness::CampaignConfig config =
            config_path.empty() ? h2d::harness::CampaignConfig::parse(h2d::harness::default_config_text())
                                : h2d::harness::CampaignConfig::parse_file(config_path);

        bool env_present = false;
        const std::uint64_t env_seed = env_u64("VERIFY_SEED", config.seed, env_present);
        if (env_present) config.seed = env_seed;
        const std::uint64_t env_jobs = env_u64("VERIFY_JOBS", 0, env_present);
        if (env_present) config.jobs = static_cast<int>(env_jobs);
        if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
        if (jobs >= 0) config.jobs = jobs;
        if (!format.empty()) {
            if (format != "json" && format != "csv") throw h2d::ConfigError("format must be json or csv");
            config.format = format;
        }
        if (!out_path.empty()) config.output = out_path;

        if (!filter.empty()) {
            std::vector<h2d::harness::SuiteConfig> kept;
            for (auto& s : config.suites)
                if (glob_match(filter, s.id)) kept.push_back(std::move(s));
            config.suites = std::move(kept);
        }

        const h2d::harness::CampaignResult result = h2d::harness::run_campaign(config);
        std::cout << h2d::harness::summary_lines(result);

        if (!config.output.empty()) {
            std::ofstream out(config.output);
            if (!out) throw h2d::IoError("cannot write: " + config.output);
            out << (config.format == "csv" ? h2d::harness::to_csv(result)
                                           : h2d::harness::to_json(result));
        }
        return result.ok(config.fail_on_not_converged) ? 0 : 1;
    } catch (const h2d::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const h2d::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
