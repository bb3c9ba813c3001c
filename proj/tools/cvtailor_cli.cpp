// Command-line front end: one subcommand per figure dataset, plus `check`.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cvtailor/acceptance.hpp"
#include "cvtailor/config.hpp"
#include "cvtailor/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Flags {
    std::optional<std::size_t> lambda_points;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<double> alpha;
    std::optional<double> s;
    std::optional<std::string> out;
    std::optional<double> tol;
    std::optional<std::string> config;
    std::optional<std::size_t> threads;
};

void apply_flags(cvtailor::ExperimentConfig& config, const Flags& f) {
    if (f.lambda_points) config.lambda_grid = cvtailor::lambda_grid(*f.lambda_points);
    if (f.samples) config.n_samples = *f.samples;
    if (f.seed) config.seed = *f.seed;
    if (f.alpha) config.alpha_line = *f.alpha;
    if (f.s) config.s = *f.s;
    if (f.out) config.output_path = *f.out;
    if (f.tol) config.tol = *f.tol;
    if (f.threads) config.threads = *f.threads;
}

int emit(const cvtailor::Dataset& data, const cvtailor::ExperimentConfig& config) {
    if (config.output_path.empty()) {
        cvtailor::write_csv(data, std::cout);
        cvtailor::write_summary(data, std::cerr);
    } else {
        cvtailor::write_csv_file(data, config.output_path);
        cvtailor::write_summary(data, std::cout);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tailored continuous-variable teleportation: figure datasets and acceptance checks"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    app.add_option("--lambda-points", flags.lambda_points, "uniform points on [0, 0.98]; 0.999 is appended")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    app.add_option("--samples", flags.samples, "Monte Carlo samples per grid point");
    app.add_option("--seed", flags.seed, "base seed; point i uses seed XOR i");
    app.add_option("--alpha", flags.alpha, "target amplitude |alpha| for line/circle runs");
    app.add_option("--out", flags.out, "CSV output path (default: stdout, summary to stderr)");
    app.add_option("--tol", flags.tol, "optimizer abscissa tolerance");
    app.add_option("--config", flags.config, "key = value config file; flags override it");
    app.add_option("--threads", flags.threads, "worker threads for Monte Carlo chunks");

    auto* fig1 = app.add_subcommand("fig1", "standard vs tailored-displacement fidelity (line alphabet)");
    auto* fig3 = app.add_subcommand("fig3", "full tailoring, displacement only, standard; optimal eta and g2");
    auto* gaussian = app.add_subcommand("gaussian", "gain-optimised fidelity for a Gaussian alphabet");
    gaussian->add_option("--s", flags.s, "alphabet standard deviation")->required();
    auto* circle = app.add_subcommand("circle-vs-line", "Monte Carlo circle and line curves");
    auto* check = app.add_subcommand("check", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    cvtailor::ExperimentConfig config;
    try {
        if (flags.config) cvtailor::apply_config(config, cvtailor::load_config_file(*flags.config));
        apply_flags(config, flags);
    } catch (const cvtailor::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        config.validate();
    } catch (const std::exception& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kExitFailure;
    }

    try {
        if (*check) {
            const auto results = cvtailor::run_acceptance({.seed = config.seed, .threads = config.threads});
            return cvtailor::report_acceptance(results, std::cout) ? kExitOk : kExitFailure;
        }
        if (*fig1) return emit(cvtailor::run_fig1(config), config);
        if (*fig3) return emit(cvtailor::run_fig3(config), config);
        if (*gaussian) return emit(cvtailor::run_gaussian_alphabet(config), config);
        if (*circle) return emit(cvtailor::run_circle_vs_line(config), config);
    } catch (const cvtailor::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
