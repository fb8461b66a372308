#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "pslab/arith.hpp"
#include "pslab/errors.hpp"
#include "pslab/factor_sieve.hpp"

using namespace pslab;
using arith::FactorSieve;

TEST_CASE("primes from a small sieve") {
    FactorSieve s(2, 30);
    std::set<uint64_t> got;
    s.for_each_prime([&](uint64_t p) { got.insert(p); });
    std::set<uint64_t> want = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    CHECK(got == want);
}

TEST_CASE("Omega and spf basics") {
    FactorSieve s(2, 400);
    CHECK(s.omega_total(360) == 6);  // 2^3 3^2 5
    CHECK(s.omega_distinct(360) == 3);
    CHECK(s.spf(360) == 2);
    CHECK(s.spf(97) == 97);
    CHECK(s.mu(30) == -1);
    CHECK(s.mu(36) == 0);
    CHECK(s.mu(35) == 1);
}

TEST_CASE("sieve works on a shifted window") {
    FactorSieve s(1000000, 1001000);
    CHECK(s.spf(1000003) == 1000003);  // prime
    CHECK(s.omega_total(1000000) == 12);  // 2^6 5^6
    CHECK(s.mu(1000001) == 1);  // 101 * 9901
    CHECK_THROWS_AS((void)s.spf(999), std::domain_error);
}

TEST_CASE("pi(10^6) against a trial-division oracle") {
    // independent path: count primes by trial division
    auto is_prime_td = [](uint64_t n) {
        if (n < 2) return false;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    uint64_t oracle = 0;
    for (uint64_t n = 2; n <= 1000000; ++n)
        if (is_prime_td(n)) ++oracle;
    CHECK(oracle == 78498);

    FactorSieve s(2, 1000000);
    uint64_t cnt = 0;
    s.for_each_prime([&](uint64_t) { ++cnt; });
    CHECK(cnt == oracle);
}

TEST_CASE("Omega is additive over coprime pairs in range") {
    FactorSieve s(2, 10000);
    for (uint64_t m : {4ull, 9ull, 15ull, 49ull, 77ull}) {
        for (uint64_t n : {11ull, 13ull, 17ull, 25ull}) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(s.omega_total(m * n) == s.omega_total(m) + s.omega_total(n));
        }
    }
}

TEST_CASE("range and domain errors") {
    CHECK_THROWS_AS(FactorSieve(1, 10), std::domain_error);
    CHECK_THROWS_AS(FactorSieve(10, 10), std::domain_error);
    CHECK_THROWS_AS(FactorSieve(2, (uint64_t(1) << 25) + 2), resource_error);
}

TEST_CASE("lambda_of basics") {
    CHECK(arith::lambda_of(8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(arith::lambda_of(12) == 0.0);
    CHECK(arith::lambda_of(1) == 0.0);
    CHECK(arith::lambda_of(97) == doctest::Approx(std::log(97.0)).epsilon(1e-15));
    CHECK_THROWS_AS(arith::lambda_of(0), std::domain_error);
}

TEST_CASE("Chebyshev psi(1000): sum of Lambda matches the prime-power oracle") {
    // oracle: sum log p over prime powers p^k <= 1000, computed directly
    double oracle = 0.0;
    FactorSieve s(2, 1000);
    s.for_each_prime([&](uint64_t p) {
        for (uint64_t pk = p; pk <= 1000; pk *= p)
            oracle += std::log(static_cast<double>(p));
    });
    double via_lambda = 0.0;
    for (uint64_t n = 1; n <= 1000; ++n) via_lambda += arith::lambda_of(n);
    CHECK(std::fabs(via_lambda - oracle) < 1e-9);
    // frozen reference value (30-digit arithmetic)
    CHECK(std::fabs(via_lambda - 996.680912247175240) < 1e-9);
}

TEST_CASE("Chebyshev identity: sum over divisors of Lambda(d) = log n") {
    FactorSieve s(2, 5000);
    for (uint64_t n = 2; n <= 5000; n += 37) {
        double sum = 0.0;
        for (uint64_t d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            sum += arith::lambda_of(d);
            if (d != n / d) sum += arith::lambda_of(n / d);
        }
        CHECK(std::fabs(sum - std::log(static_cast<double>(n))) < 1e-9);
    }
}

TEST_CASE("mu against the divisor-sum (inclusion-exclusion) identity") {
    // sum_{d|n} mu(d) = [n = 1]
    FactorSieve s(2, 10000);
    auto mu_at = [&](uint64_t d) { return d == 1 ? 1 : s.mu(d); };
    for (uint64_t n = 2; n <= 10000; ++n) {
        int sum = 0;
        for (uint64_t d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            sum += mu_at(d);
            if (d != n / d) sum += mu_at(n / d);
        }
        CHECK(sum == 0);
    }
}

TEST_CASE("heath_brown_lambda: prime and composite spot checks") {
    CHECK(std::fabs(arith::heath_brown_lambda(97, 150) - std::log(97.0)) < 1e-9);
    CHECK(std::fabs(arith::heath_brown_lambda(96, 150) - 0.0) < 1e-9);
    CHECK_THROWS_AS(arith::heath_brown_lambda(75, 150), std::domain_error);
    CHECK_THROWS_AS(arith::heath_brown_lambda(151, 150), std::domain_error);
    CHECK_THROWS_AS(arith::heath_brown_lambda(10, 7), std::domain_error);
}

TEST_CASE("heath_brown_lambda reproduces Lambda on dyadic windows") {
    for (uint64_t X : {100ull, 300ull}) {
        double worst = 0.0;
        for (uint64_t n = X / 2 + 1; n <= X; ++n)
            worst = std::max(worst,
                             std::fabs(arith::heath_brown_lambda(n, X) - arith::lambda_of(n)));
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("mertens_product explicit values") {
    CHECK(arith::mertens_product(3) == doctest::Approx(0.5).epsilon(1e-15));
    // p < 11: 2,3,5,7
    CHECK(arith::mertens_product(11) == doctest::Approx(8.0 / 35.0).epsilon(1e-14));
    // p < 12 includes 11: the (1/2)(2/3)(4/5)(6/7)(10/11) product
    CHECK(arith::mertens_product(12) == doctest::Approx(16.0 / 77.0).epsilon(1e-14));
    CHECK_THROWS_AS(arith::mertens_product(2), std::domain_error);
}

TEST_CASE("Mertens third theorem at z = 10^6") {
    const double c0 = 0.57721566490153286;
    double prod = arith::mertens_product(1000000);
    double dev = std::exp(c0) * std::log(1e6) * prod;
    CHECK(std::fabs(dev - 1.0) < 0.01);
}

TEST_CASE("mertens_product strictly decreases across primes") {
    double prev = arith::mertens_product(3);
    for (uint64_t z = 4; z <= 200; ++z) {
        double cur = arith::mertens_product(z);
        CHECK(cur <= prev + 1e-18);
        prev = cur;
    }
    CHECK(arith::mertens_product(200) < arith::mertens_product(3));
}

TEST_CASE("segmented_scan covers the range exactly once") {
    std::vector<char> seen(3000, 0);
    arith::segmented_scan(2, 2500, 512, [&](const FactorSieve& s) {
        for (uint64_t n = s.lo(); n <= s.hi(); ++n) {
            CHECK(seen[n] == 0);
            seen[n] = 1;
        }
    });
    for (uint64_t n = 2; n <= 2500; ++n) CHECK(seen[n] == 1);
}
