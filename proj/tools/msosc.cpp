#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "msosc/analysis.hpp"
#include "msosc/coefficients.hpp"
#include "msosc/errors.hpp"
#include "msosc/harness.hpp"

namespace {

constexpr int kExitInvalidSpec = 2;
constexpr int kExitNumericalFailure = 3;

std::vector<msosc::MethodVariant> parse_variants(const std::string& list) {
    if (list == "all") return {msosc::kAllVariants.begin(), msosc::kAllVariants.end()};
    std::vector<msosc::MethodVariant> out;
    std::istringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(msosc::variant_from_name(item));
    }
    return out;
}

std::vector<long> parse_steps(const std::string& list) {
    std::vector<long> out;
    std::istringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stol(item));
    }
    return out;
}

// Config file mirrors the flags; explicitly passed flags win.
struct Options {
    std::string problem;
    std::string variants = "all";
    std::string steps;
    std::string out;
    std::string traj;
    std::string variant;
    long solve_steps = 0;
    double span = 0.0;
    int jobs = 0;
};

void apply_config(const std::string& path, Options& opt, const CLI::App& cmd) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    auto maybe = [&cfg, &cmd](const char* key, auto& slot) {
        if (!cfg.contains(key) || !cmd.get_option_no_throw(std::string("--") + key) ||
            cmd.count(std::string("--") + key) != 0)
            return;
        const nlohmann::json& value = cfg.at(key);
        try {
            // Lists may be given either as JSON arrays or as comma strings.
            if constexpr (std::is_same_v<std::decay_t<decltype(slot)>, std::string>) {
                if (value.is_array()) {
                    std::string joined;
                    for (const auto& item : value) {
                        if (!joined.empty()) joined += ',';
                        joined += item.is_string() ? item.get<std::string>() : item.dump();
                    }
                    slot = joined;
                    return;
                }
                if (value.is_number_integer()) {
                    slot = std::to_string(value.get<long>());
                    return;
                }
            }
            slot = value.get<std::decay_t<decltype(slot)>>();
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("config field '") + key + "': " + e.what());
        }
    };
    maybe("problem", opt.problem);
    maybe("variants", opt.variants);
    maybe("steps", opt.steps);
    maybe("out", opt.out);
    maybe("traj", opt.traj);
    maybe("variant", opt.variant);
    maybe("span", opt.span);
    maybe("jobs", opt.jobs);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"msosc: eight-step symmetric multistep methods for oscillatory y'' = f(x,y)"};
    app.require_subcommand(1);

    Options opt;
    std::string config_path;

    CLI::App* analyze = app.add_subcommand("analyze", "report phase-lag/stability properties");
    analyze->add_option("variant", opt.variant, "method name")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "work-precision sweep to CSV");
    sweep->add_option("--problem", opt.problem, "problem id");
    sweep->add_option("--variants", opt.variants, "comma list or 'all'");
    sweep->add_option("--steps", opt.steps, "comma list of total step counts");
    sweep->add_option("--out", opt.out, "output CSV path");
    sweep->add_option("--span", opt.span, "N-body span override (days)");
    sweep->add_option("--jobs", opt.jobs, "parallel sweep cells");
    sweep->add_option("--config", config_path, "JSON config mirroring the flags");

    CLI::App* solve = app.add_subcommand("solve", "single integration, report error");
    solve->add_option("--problem", opt.problem, "problem id");
    solve->add_option("--variant", opt.variant, "method name");
    solve->add_option("--steps", opt.solve_steps, "total steps");
    solve->add_option("--traj", opt.traj, "trajectory CSV path");
    solve->add_option("--span", opt.span, "N-body span override (days)");
    solve->add_option("--config", config_path, "JSON config mirroring the flags");

    CLI::App* stability = app.add_subcommand("stability", "intervals of periodicity");
    bool all = false;
    stability->add_flag("--all", all, "report every variant");
    stability->add_option("variant", opt.variant, "method name (when not --all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty())
            apply_config(config_path, opt, sweep->parsed() ? *sweep : *solve);

        if (analyze->parsed()) {
            std::cout << msosc::analyze_report(msosc::variant_from_name(opt.variant));
            return 0;
        }
        if (stability->parsed()) {
            std::vector<msosc::MethodVariant> list =
                all ? std::vector<msosc::MethodVariant>(msosc::kAllVariants.begin(),
                                                        msosc::kAllVariants.end())
                    : std::vector<msosc::MethodVariant>{msosc::variant_from_name(opt.variant)};
            std::cout << "variant,s0,interval_end\n";
            std::cout.precision(10);
            for (msosc::MethodVariant m : list) {
                const msosc::StabilityReport r = msosc::periodicity_interval(m);
                std::cout << msosc::variant_name(m) << ',' << r.s0 << ',' << r.interval_end
                          << "\n";
            }
            return 0;
        }
        if (sweep->parsed()) {
            msosc::SweepSpec spec;
            spec.problem = opt.problem;
            spec.variants = parse_variants(opt.variants);
            spec.steps = parse_steps(opt.steps);
            spec.span_end = opt.span;
            spec.jobs = opt.jobs;
            const auto rows = msosc::run_sweep(spec);
            if (opt.out.empty()) {
                msosc::emit_csv(rows, "/dev/stdout");
            } else {
                msosc::emit_csv(rows, opt.out);
                std::cout << rows.size() << " rows -> " << opt.out << "\n";
            }
            return 0;
        }
        if (solve->parsed()) {
            msosc::SweepSpec spec;
            spec.problem = opt.problem;
            spec.span_end = opt.span;
            if (opt.solve_steps <= 0) throw std::invalid_argument("--steps must be positive");
            const double error = msosc::run_single(
                spec, msosc::variant_from_name(opt.variant), opt.solve_steps, opt.traj);
            std::cout.precision(17);
            std::cout << "error: " << error << "\n";
            std::cout << "-log10(error): " << -std::log10(std::max(error, msosc::kErrorFloor))
                      << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidSpec;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericalFailure;
    }
    return 0;
}
