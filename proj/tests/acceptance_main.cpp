// Full-scale verification suite: one pass/fail line per criterion.
#include <cstdio>

#include "pslab/verify.hpp"

int main() {
    pslab::verify::VerifyOptions opts;
    opts.quick = false;
    auto results = pslab::verify::run_suite(opts);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s criterion %d: %s  [%s]  (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.elapsed_seconds);
        if (!r.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
