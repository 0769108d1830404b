#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bellwords/bellpoly.hpp"
#include "testutil.hpp"

using namespace bellwords;
using testutil::make_args;

TEST_CASE("bell oracle hand values") {
    CHECK(bell_oracle(3, 2, make_args({1, 2})) == 6);
    CHECK(bell_oracle(5, 1, make_args({1, 2, 3, 4, 5})) == 5);  // B_{n,1} = z_n
    CHECK(bell_oracle(4, 4, make_args({3})) == 81);             // B_{n,n} = z_1^n
}

TEST_CASE("bell oracle equals the set-partition walk") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            bell_args z(testutil::random_terms(rng, n - k + 1, -6, 6));
            CHECK(bell_oracle(n, k, z) == testutil::set_partition_bell(n, k, z));
        }
    }
    // sparse vector with interior zeros
    bell_args sparse = make_args({0, 0, 6, 0, 0});
    CHECK(bell_oracle(6, 2, sparse) == testutil::set_partition_bell(6, 2, sparse));
}

TEST_CASE("recurrence equals oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        bell_args z(testutil::random_terms(rng, 10, -10, 10));
        for (int n = 1; n <= 10; ++n)
            for (int k = 1; k <= n; ++k) CHECK(bell_recurrence(n, k, z) == bell_oracle(n, k, z));
    }
    CHECK(bell_recurrence(3, 2, make_args({1, 2})) == 6);
    // partitions of 5 into 3 parts from {1,3}: only 1+1+3
    CHECK(bell_recurrence(5, 3, make_args({1, 0, 6})) == 60);
}

TEST_CASE("nonzero value on a sparse argument vector") {
    // 6 = 3+3 is the only usable partition; the expected value comes from
    // the set-partition walk, not from the formula under test
    bell_args z = make_args({0, 0, 6, 0, 0});
    bigint expected = testutil::set_partition_bell(6, 2, z);
    CHECK(expected == 360);
    CHECK(bell_recurrence(6, 2, z) == expected);
    CHECK(bell_oracle(6, 2, z) == expected);
}

TEST_CASE("homogeneity of degree k") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        bell_args z(testutil::random_terms(rng, 9, -8, 8));
        for (int a = -5; a <= 5; ++a) {
            std::vector<bigint> scaled = z.terms();
            for (auto& v : scaled) v *= a;
            bell_args az{scaled};
            for (int n = 1; n <= 9; ++n)
                for (int k = 1; k <= n; ++k)
                    CHECK(bell_recurrence(n, k, az) ==
                          int_pow(bigint(a), k) * bell_recurrence(n, k, z));
        }
    }
}

TEST_CASE("bell table reuses rows across queries") {
    bell_table t(make_args({1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(t.value(8, 3) == bell_oracle(8, 3, make_args({1, 1, 1, 1, 1, 1})));
    CHECK(t.value(4, 2) == bell_oracle(4, 2, make_args({1, 1, 1})));
}

TEST_CASE("identity 1: truncated factorials") {
    CHECK(identity1_truncated_factorials(4, 4, 1) == 1);
    CHECK(identity1_truncated_factorials(3, 2, 1) == 0);
    CHECK(identity1_truncated_factorials(4, 2, 2) == bell_oracle(4, 2, make_args({1, 2, 0})));
    for (int ell = 1; ell <= 4; ++ell)
        for (int n = 1; n <= 10; ++n)
            for (int k = 1; k <= n; ++k)
                CHECK(identity1_truncated_factorials(n, k, ell) ==
                      bell_oracle(n, k, identity1_args(n - k + 1, ell)));
}

TEST_CASE("identity 2: sparse two-entry vector") {
    CHECK(identity2_sparse(5, 3, 2) == 60);
    CHECK(identity2_sparse(4, 3, 2) == 0);  // n-k = 1 not divisible by 2
    CHECK(identity2_sparse(3, 1, 2) == 6);  // z_3 = 3!
    for (int ell = 2; ell <= 4; ++ell)
        for (int n = 1; n <= 10; ++n)
            for (int k = 1; k <= n; ++k)
                CHECK(identity2_sparse(n, k, ell) ==
                      bell_oracle(n, k, identity2_args(n - k + 1, ell)));
    CHECK_THROWS_AS(identity2_sparse(5, 3, 1), std::invalid_argument);
}

TEST_CASE("identity 3: one gap in the factorial vector") {
    CHECK(identity3_gap(2, 1, 1) == 0);
    CHECK(identity3_gap(3, 3, 2) == 1);
    CHECK(identity3_gap(5, 2, 1) == bell_oracle(5, 2, make_args({1, 0, 6, 24})));
    for (int ell = 1; ell <= 4; ++ell)
        for (int n = 1; n <= 10; ++n)
            for (int k = 1; k <= n; ++k)
                CHECK(identity3_gap(n, k, ell) == bell_oracle(n, k, identity3_args(n - k + 1, ell)));
}

TEST_CASE("identity 4: figurate numbers") {
    CHECK(identity4_figurate(2, 1, 0) == 4);
    CHECK(identity4_figurate(3, 3, 1) == 1);
    CHECK(identity4_figurate(4, 2, 1) == bell_oracle(4, 2, make_args({1, 6, 36})));
    for (int r = 0; r <= 3; ++r)
        for (int n = 1; n <= 10; ++n)
            for (int k = 1; k <= n; ++k)
                CHECK(identity4_figurate(n, k, r) ==
                      bell_oracle(n, k, identity4_args(n - k + 1, r)));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(bell_args(std::vector<bigint>{}), std::invalid_argument);
    CHECK_THROWS_AS(bell_oracle(3, 0, make_args({1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(bell_oracle(3, 4, make_args({1})), std::invalid_argument);
    CHECK_THROWS_AS(bell_oracle(0, 1, make_args({1})), std::invalid_argument);
    // z shorter than n-k+1 is an error, never an implicit zero
    CHECK_THROWS_AS(bell_oracle(6, 2, make_args({0, 0, 6, 0})), std::invalid_argument);
    CHECK_THROWS_AS(bell_recurrence(6, 2, make_args({0, 0, 6, 0})), std::invalid_argument);
    bell_args z = make_args({1, 2});
    CHECK_THROWS_AS(z.z(3), std::out_of_range);
    CHECK_THROWS_AS(z.z(0), std::out_of_range);
}

TEST_CASE("binomial convention vanishes outside the support") {
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(-4, 0) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(5, 2) == 10);
    CHECK(int_pow(bigint(0), 0) == 1);
}
