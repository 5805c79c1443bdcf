#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibtri/sequences.hpp"

using namespace fibtri;

TEST_CASE("seed and published values") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(12) == 144);
    CHECK(fibonacci(26) == 121393);

    CHECK(tribonacci(0) == 0);
    CHECK(tribonacci(1) == 1);
    CHECK(tribonacci(2) == 1);
    CHECK(tribonacci(7) == 24);
    CHECK(tribonacci(10) == 149);
    CHECK(tribonacci(21) == 121415);

    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    CHECK(lucas(5) == 11);  // 2, 1, 3, 4, 7, 11
}

TEST_CASE("index range") {
    CHECK_THROWS_AS(fibonacci(1001), IndexOutOfRange);
    CHECK_THROWS_AS(tribonacci(5000), IndexOutOfRange);
    CHECK_NOTHROW(fibonacci(1000));
}

TEST_CASE("recurrence and cross identities hold exactly") {
    const auto& F = shared_table(SeqKind::fibonacci);
    const auto& L = shared_table(SeqKind::lucas);
    const auto& T = shared_table(SeqKind::tribonacci);
    for (std::size_t k = 0; k + 2 <= 300; ++k) {
        CHECK(F.at(k + 2) == F.at(k + 1) + F.at(k));
        CHECK(L.at(k + 2) == L.at(k + 1) + L.at(k));
    }
    for (std::size_t k = 0; k + 3 <= 240; ++k)
        CHECK(T.at(k + 3) == T.at(k + 2) + T.at(k + 1) + T.at(k));

    // L_k^2 - 5 F_k^2 = 4 (-1)^k validates the two tables against each other
    for (std::size_t k = 0; k <= 300; ++k) {
        mpz_class want = (k % 2 == 0) ? 4 : -4;
        CHECK(L.at(k) * L.at(k) - 5 * F.at(k) * F.at(k) == want);
    }
    // T_m - T_{m-1} = T_{m-2} + T_{m-3}
    for (std::size_t m = 3; m <= 240; ++m)
        CHECK(T.at(m) - T.at(m - 1) == T.at(m - 2) + T.at(m - 3));
}

TEST_CASE("binet enclosures contain the exact terms") {
    const auto& C = AlgebraicConstants::at(512);
    CHECK(binet_check(SeqKind::fibonacci, 10, C).contains(mpz_class(55)));
    CHECK(binet_check(SeqKind::tribonacci, 7, C).contains(mpz_class(24)));
    CHECK(binet_check(SeqKind::tribonacci, 0, C).contains(mpz_class(0)));

    for (std::size_t k = 0; k <= 100; ++k) {
        CHECK(binet_check(SeqKind::fibonacci, k, C).contains(fibonacci(k)));
        CHECK(binet_check(SeqKind::lucas, k, C).contains(lucas(k)));
        CHECK(binet_check(SeqKind::tribonacci, k, C).contains(tribonacci(k)));
    }
}

TEST_CASE("growth inequalities certify over the search ranges") {
    const auto& C = AlgebraicConstants::at(512);
    CHECK(growth_bounds_check(SeqKind::fibonacci, 300, C).empty());
    CHECK(growth_bounds_check(SeqKind::tribonacci, 240, C).empty());
    CHECK(growth_bounds_check(SeqKind::fibonacci, 1, C).empty());
    CHECK_THROWS_AS(growth_bounds_check(SeqKind::lucas, 10, C), DomainError);
}
