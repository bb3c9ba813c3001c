#include "cvtailor/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace cvtailor {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw std::invalid_argument("bad value for " + key + ": '" + text + "'");
    }
    return value;
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
        entries[key] = trim(line.substr(eq + 1));
    }
    return entries;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path);
    return parse_config(in);
}

void apply_config(ExperimentConfig& config, const std::map<std::string, std::string>& entries) {
    for (const auto& [key, value] : entries) {
        if (key == "lambda_points") {
            config.lambda_grid = lambda_grid(parse_number<std::size_t>(key, value));
        } else if (key == "samples") {
            config.n_samples = parse_number<std::size_t>(key, value);
        } else if (key == "seed") {
            config.seed = parse_number<std::uint64_t>(key, value);
        } else if (key == "alpha") {
            config.alpha_line = parse_number<double>(key, value);
        } else if (key == "s") {
            config.s = parse_number<double>(key, value);
        } else if (key == "out") {
            config.output_path = value;
        } else if (key == "tol") {
            config.tol = parse_number<double>(key, value);
        } else if (key == "threads") {
            config.threads = parse_number<std::size_t>(key, value);
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
}

}  // namespace cvtailor
