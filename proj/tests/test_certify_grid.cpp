// Grid-refinement stress of the partial-product certificate: the three
// committed steps must all come back clean.  The finest step walks ~4.3e9
// points, so this suite runs in certification-only mode.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pslab/partial_products.hpp"

using namespace pslab::partition;

TEST_CASE("zero counterexamples at steps 1e-2, 5e-3, 2e-3") {
    for (double step : {1e-2, 5e-3, 2e-3}) {
        auto rep = exhaustive_certify(step, 0.01, {}, 2, /*compute_margin=*/false);
        INFO("step = " << step);
        CHECK(rep.counterexamples.empty());
        CHECK(rep.points_checked > 0);
    }
}
