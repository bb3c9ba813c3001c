#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cvtailor {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AcceptanceOptions {
    std::uint64_t seed = 20021017;
    std::size_t threads = 1;
};

/// Runs every acceptance criterion with its pinned tolerances.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// One "[PASS]"/"[FAIL]" line per criterion. Returns true if all passed.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace cvtailor
