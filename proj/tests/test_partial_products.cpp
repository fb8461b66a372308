#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>

#include "pslab/partial_products.hpp"

using namespace pslab;
using namespace pslab::partition;

TEST_CASE("subset_hit: equal split hits with a six-element witness") {
    std::array<double, 8> t;
    t.fill(0.125);
    auto r = subset_hit(t);
    CHECK(r.hit);
    CHECK(std::popcount(r.mask) == 6);  // 6 * 0.125 = 0.75 inside the window
    CHECK(r.sum == doctest::Approx(0.75));
}

TEST_CASE("subset_hit: a large eighth coordinate hits as a singleton") {
    std::array<double, 8> t{0.06, 0.06, 0.06, 0.06, 0.06, 0.06, 0.06, 0.78};
    auto r = subset_hit(t);
    CHECK(r.hit);
    CHECK(r.mask == 0x80u);  // the singleton {8} comes first in popcount order
    CHECK(r.sum == doctest::Approx(0.78));
}

TEST_CASE("subset_hit: witnesses are not closed under complement") {
    std::array<double, 8> t;
    t.fill(0.125);
    auto r = subset_hit(t);
    REQUIRE(r.hit);
    unsigned comp = (~r.mask) & 0xFFu;
    double csum = 0.0;
    for (int i = 0; i < 8; ++i)
        if (comp & (1u << i)) csum += t[i];
    WindowConstants w;
    CHECK((csum < w.alpha0 || csum > w.beta0));  // complement misses the window
}

TEST_CASE("subset_hit is invariant under permutations of equal coordinates") {
    std::array<double, 8> t{0.07, 0.07, 0.10, 0.10, 0.12, 0.17, 0.17, 0.20};
    auto r1 = subset_hit(t);
    std::array<double, 8> t2 = t;
    std::swap(t2[0], t2[1]);
    std::swap(t2[5], t2[6]);
    auto r2 = subset_hit(t2);
    CHECK(r1.hit == r2.hit);
    CHECK(r1.sum == doctest::Approx(r2.sum));
    CHECK(r1.margin == doctest::Approx(r2.margin));
}

TEST_CASE("exhaustive_certify at the acceptance step finds no counterexample") {
    auto rep = exhaustive_certify(5e-3, 0.01);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.points_checked >= 100000);
    CHECK(rep.min_margin >= 0.0);
    // grid sums are step-quantised, so the worst margin cannot be tiny
    CHECK(rep.min_margin > 1e-4);
}

TEST_CASE("a shrunken window produces counterexamples") {
    WindowConstants narrow;
    narrow.alpha0 = 0.70;
    narrow.beta0 = 0.71;
    auto rep = exhaustive_certify(1e-2, 0.01, narrow);
    CHECK(!rep.counterexamples.empty());
    // the equal split is one of them: subset sums are multiples of 0.125
    std::array<double, 8> eq;
    eq.fill(0.125);
    auto hit = subset_hit(eq, narrow);
    CHECK_FALSE(hit.hit);
}

TEST_CASE("step refinement keeps the certificate clean and the margin stable") {
    auto coarse = exhaustive_certify(1e-2, 0.01);
    CHECK(coarse.counterexamples.empty());
    auto fine = exhaustive_certify(5e-3, 0.01);
    CHECK(fine.counterexamples.empty());
    CHECK(fine.points_checked > coarse.points_checked);
    // margins within a factor two of each other
    CHECK(fine.min_margin < 2.0 * coarse.min_margin);
    CHECK(fine.min_margin > 0.5 * coarse.min_margin);
}

TEST_CASE("sum = 1 boundary points with every coordinate below beta0 all hit") {
    // stronger corner of the combinatorial lemma, checked on the coarse grid
    const double step = 1e-2;
    auto rep = exhaustive_certify(step, 1e-9 + 1e-12);
    // eta_s ~ 0 restricts to sum == 1 exactly
    CHECK(rep.counterexamples.empty());
    CHECK(rep.points_checked > 0);
}

TEST_CASE("certify rejects bad arguments") {
    CHECK_THROWS_AS(exhaustive_certify(0.5, 0.01), std::domain_error);
    CHECK_THROWS_AS(exhaustive_certify(5e-3, 0.0), std::domain_error);
    // 1/step must be integral so the grid contains sum = 1
    CHECK_THROWS_AS(exhaustive_certify(3.7e-3, 0.01), std::domain_error);
}

TEST_CASE("worker count does not change the report") {
    auto one = exhaustive_certify(1e-2, 0.01, {}, 1);
    auto two = exhaustive_certify(1e-2, 0.01, {}, 2);
    CHECK(one.points_checked == two.points_checked);
    CHECK(one.min_margin == two.min_margin);
    CHECK(one.counterexamples == two.counterexamples);
}

TEST_CASE("window_inside_analytic: slacks across [0.989, 0.999]") {
    // the analytic chain holds with eta -> 0; at eta = 1e-12 the slacks are
    // positive across the range, and tightest at gamma = 0.989
    auto p0 = params::make_params(0.989, 1e-12, 1e-12);
    auto w0 = window_inside_analytic(p0);
    CHECK(w0.pass);
    CHECK(w0.left_slack > 0.0);
    CHECK(w0.right_slack > 0.0);
    CHECK(w0.left_slack < 1e-8);   // alpha0 was chosen against this boundary
    CHECK(w0.right_slack < 1e-8);  // beta0 likewise

    double prev_l = w0.left_slack, prev_r = w0.right_slack;
    for (double g : {0.991, 0.993, 0.995, 0.997, 0.999}) {
        auto wg = window_inside_analytic(params::make_params(g, 1e-12, 1e-12));
        CHECK(wg.pass);
        CHECK(wg.left_slack > prev_l);
        CHECK(wg.right_slack > prev_r);
        prev_l = wg.left_slack;
        prev_r = wg.right_slack;
    }
}

TEST_CASE("window_inside_analytic: the eta = 1e-6 bookkeeping breaks the right edge") {
    // with the working eta the right inequality fails at gamma = 0.989 by
    // ~1.25 eta; the certificate therefore runs at eta = 1e-12
    auto p = params::make_params(0.989, 1e-6, 1e-9);
    auto w = window_inside_analytic(p);
    CHECK(w.left_slack > 0.0);
    CHECK(w.right_slack < 0.0);
    CHECK(w.right_slack == doctest::Approx(-1.25e-6).epsilon(1e-2));
}
