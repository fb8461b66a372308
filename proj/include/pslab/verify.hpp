#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pslab::verify {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;      // deterministic (no timings)
    double elapsed_seconds;  // informational only
};

struct VerifyOptions {
    bool quick = false;           // reduced scales for the reproduce meta-command
    std::string output_dir;       // when nonempty, write artifacts there
    uint64_t seed = 0x5EED;
    int workers = 2;
};

// Runs the ten verification criteria and returns one result per criterion.
std::vector<CriterionResult> run_suite(const VerifyOptions& opts);

// Writes the deterministic data artifacts (bracket table, admissibility
// grid, certificate summary, counting table) into dir.  Used by the
// reproduce command and by the determinism criterion.
void write_artifacts(const std::string& dir, bool quick, uint64_t seed, int workers);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace pslab::verify
