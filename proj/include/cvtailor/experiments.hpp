#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cvtailor/optimizer.hpp"

namespace cvtailor {

/// `points` uniform values on [0, 0.98] followed by kLambdaCap (0.999).
std::vector<double> lambda_grid(std::size_t points);

struct ExperimentConfig {
    std::vector<double> lambda_grid = cvtailor::lambda_grid(50);
    std::size_t n_samples = 100000;
    std::uint64_t seed = 20021017;
    double alpha_line = 5.0;
    double s = 0.2;
    std::string output_path;  // empty: stdout
    double tol = kDefaultTolerance;
    std::size_t threads = 1;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// A CSV table plus the key=value numbers it produced for automated checks.
struct Dataset {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> summary;

    std::size_t column(const std::string& name) const;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(std::string path);
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Line alphabet: analytic standard curve vs Monte Carlo tailored displacement.
Dataset run_fig1(const ExperimentConfig& config);
/// Full tailoring, displacement only, and standard curves with the optimal (eta, g2).
Dataset run_fig3(const ExperimentConfig& config);
/// Gain-optimised Gaussian-alphabet fidelity at width config.s.
Dataset run_gaussian_alphabet(const ExperimentConfig& config);
/// Monte Carlo line vs circle at |alpha| = config.alpha_line.
Dataset run_circle_vs_line(const ExperimentConfig& config);

/// Nine significant digits, locale independent.
std::string format_real(double x);

void write_csv(const Dataset& data, std::ostream& out);
/// Throws IoError if the file cannot be written.
void write_csv_file(const Dataset& data, const std::string& path);
void write_summary(const Dataset& data, std::ostream& out);

}  // namespace cvtailor
