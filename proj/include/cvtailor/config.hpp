#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "cvtailor/experiments.hpp"

namespace cvtailor {

/// Plain `key = value` lines; `#` starts a comment. Throws
/// std::invalid_argument with the line number on malformed input.
std::map<std::string, std::string> parse_config(std::istream& in);
/// Throws IoError if the file cannot be opened.
std::map<std::string, std::string> load_config_file(const std::string& path);

/// Recognised keys: lambda_points, samples, seed, alpha, s, out, tol, threads.
/// Unknown keys and unparsable values throw std::invalid_argument.
void apply_config(ExperimentConfig& config, const std::map<std::string, std::string>& entries);

}  // namespace cvtailor
