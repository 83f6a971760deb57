#pragma once

// Executable property families over the bundled catalog.  Each family
// checks one structural law on every applicable instance; the runner
// reports one line per instance and the set of families with failures.
// Family tokens (for --only) are short opaque ids, stable across releases.

#include <cstdint>
#include <string>
#include <vector>

#include "alglab/kernels.hpp"

namespace alglab {

struct SuiteOptions {
    bool quick = false;   // restrict to algebras with at most 8 elements
    std::string only;     // run a single family; empty runs all
    int bound = 24;       // lattice enumeration cap
    uint64_t seed = 1;    // randomised parser instances
    Exec exec = default_exec();
};

struct SuiteLine {
    std::string family;
    std::string instance;
    bool pass = false;
    std::string detail;  // failure diagnostic or skip note
};

struct SuiteResult {
    std::vector<SuiteLine> lines;
    std::vector<std::string> failed_families;  // unique, first-failure order
};

SuiteResult run_suite(const SuiteOptions& opt);
const std::vector<std::string>& suite_family_names();

}  // namespace alglab
