// Runs the full verification suite and prints one PASS/FAIL line per
// criterion. Exit code 0 iff everything passed.

#include <cstring>
#include <iostream>

#include "combperm/acceptance.hpp"

int main(int argc, char** argv) {
    bool timings = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--timings") == 0) timings = true;
    const auto results = combperm::run_acceptance();
    const bool ok = combperm::print_acceptance(std::cout, results, timings);
    return ok ? 0 : 1;
}
