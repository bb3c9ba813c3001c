// Acceptance suite: one pass/fail line per criterion; nonzero exit on failure.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "cvtailor/acceptance.hpp"

int main(int argc, char** argv) {
    cvtailor::AcceptanceOptions options;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--threads") == 0) options.threads = std::stoul(argv[++i]);
        else if (std::strcmp(argv[i], "--seed") == 0) options.seed = std::stoull(argv[++i]);
    }
    const auto start = std::chrono::steady_clock::now();
    const auto results = cvtailor::run_acceptance(options);
    const bool ok = cvtailor::report_acceptance(results, std::cout);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << "elapsed " << elapsed.count() << " s\n";
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
