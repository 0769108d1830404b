#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bellwords/families.hpp"
#include "bellwords/seqtransform.hpp"
#include "testutil.hpp"

using namespace bellwords;

namespace {

// the printed shifted form for the minimum-gap family:
// count of length-n words = sum_k C(n - ell(k-2), k-1) m^{k-1}
bigint min_gap_shifted_printed(int ell, int m, int n) {
    bigint total = 0;
    for (int k = 1; k <= n + 2 * ell + 1; ++k) {
        bigint b = binomial(n - static_cast<long>(ell) * (k - 2), k - 1);
        if (b == 0) continue;
        total += b * int_pow(m, k - 1);
    }
    return total;
}

// the two printed case splits for the no-exact-run family, f_m at index n+1
bigint no_exact_run_printed(int ell, int m, int n_plus_1) {
    int n = n_plus_1 - 1;
    bigint total = 0;
    if (n_plus_1 % (ell + 1) == 0) {
        int q = n_plus_1 / (ell + 1);
        total += ((q % 2 == 0) ? 1 : -1) * int_pow(m, q - 1);
        for (int kappa = 0; kappa <= q - 1; ++kappa)
            for (int k = kappa + 1; k <= n_plus_1 - ell * kappa; ++k) {
                bigint t = binomial(k, kappa) *
                           binomial(n - static_cast<long>(ell + 1) * kappa, k - kappa - 1) *
                           int_pow(m, k - 1);
                total += (kappa % 2 == 0) ? t : -t;
            }
    } else {
        for (int kappa = 0; kappa <= n_plus_1 / (ell + 1); ++kappa)
            for (int k = kappa + 1; k <= n_plus_1 - ell * kappa; ++k) {
                bigint t = binomial(k, kappa) *
                           binomial(n - static_cast<long>(ell + 1) * kappa, k - kappa - 1) *
                           int_pow(m, k - 1);
                total += (kappa % 2 == 0) ? t : -t;
            }
    }
    return total;
}

}  // namespace

TEST_CASE("bounded zero runs") {
    family f = fam_bounded_zero_runs(2);
    std::vector<long long> expect{2, 3, 5, 8, 13, 21};
    for (int n = 1; n <= 6; ++n) CHECK(f.count_words(1, n) == expect[static_cast<size_t>(n - 1)]);
    CHECK(fam_bounded_zero_runs(1).count_words(1, 3) == 1);  // only 111
    CHECK(fam_bounded_zero_runs(3).count_words(1, 0) == 1);
    CHECK(f.fm(1, 0) == 1);
    CHECK_THROWS_AS(fam_bounded_zero_runs(0), std::invalid_argument);
}

TEST_CASE("odd zero runs forbidden") {
    family f = fam_odd_zero_runs();
    CHECK(f.count_words(1, 4) == 5);  // 1111 0011 1100 1001 0000
    CHECK(f.count_words(2, 2) == 5);
    CHECK(f.count_words(1, 0) == 1);
    word_predicate p = f.make_predicate(1);
    CHECK(brute_count(2, 4, p) == 5);
}

TEST_CASE("minimum gap between nonzero letters") {
    family f = fam_min_gap(2);
    std::vector<long long> expect{2, 3, 4, 6, 9, 13, 19};
    for (int n = 1; n <= 7; ++n) CHECK(f.count_words(1, n) == expect[static_cast<size_t>(n - 1)]);
    CHECK(fam_min_gap(1).count_words(1, 2) == 3);  // 00 01 10
    // below the shortest block the unshifted count is the empty sum
    CHECK(f.fm(1, 1) == 0);
    CHECK(f.fm(1, 2) == 0);
    CHECK(f.fm(1, 3) == 1);
    CHECK(f.fm(1, 0) == 1);
}

TEST_CASE("minimum gap: printed shifted form agrees with the index shift") {
    for (int ell = 1; ell <= 3; ++ell) {
        family f = fam_min_gap(ell);
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 10; ++n)
                CHECK(min_gap_shifted_printed(ell, m, n) == f.fm(m, n + 2 * ell + 1));
    }
}

TEST_CASE("minimum gap: unshifted terms count the block words directly") {
    for (int ell = 1; ell <= 2; ++ell) {
        family f = fam_min_gap(ell);
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 10; ++n)
                CHECK(f.fm(m, n) == brute_count(m + 1, n, min_gap_block_predicate(ell, n)));
    }
}

TEST_CASE("zero runs of an exact length only") {
    family f = fam_zero_blocks_exactly(2);
    CHECK(f.count_words(1, 2) == 2);  // 11 00
    CHECK(f.count_words(1, 3) == 3);  // 111 100 001
    CHECK(fam_zero_blocks_exactly(3).count_words(1, 0) == 1);
    CHECK_THROWS_AS(fam_zero_blocks_exactly(1), std::invalid_argument);
}

TEST_CASE("no zero run of exactly ell") {
    CHECK(fam_no_exact_run(1).count_words(1, 3) == 4);  // 111 100 001 000
    CHECK(fam_no_exact_run(2).count_words(1, 2) == 3);  // 11 10 01
    CHECK(fam_no_exact_run(1).count_words(1, 0) == 1);
}

TEST_CASE("no exact run: both printed case splits equal the delta form") {
    for (int ell = 1; ell <= 3; ++ell) {
        family f = fam_no_exact_run(ell);
        for (int m = 1; m <= 3; ++m)
            for (int N = 1; N <= 12; ++N) CHECK(no_exact_run_printed(ell, m, N) == f.fm(m, N));
    }
}

TEST_CASE("ascent avoiding") {
    family f0 = fam_ascent_avoiding(0);
    CHECK(f0.term(1, 3) == 8);
    CHECK(f0.term(1, 2) == 3);
    CHECK(f0.term(1, 4) == 21);
    family f1 = fam_ascent_avoiding(1);
    CHECK(f1.term(1, 2) == 4);
    for (int m = 1; m <= 5; ++m) {
        CHECK(f0.term(m, 2) == 2 + m);
        CHECK(f1.term(m, 2) == 3 + m);
    }
    // f0 specializations
    for (int j = 1; j <= 9; ++j) {
        CHECK(f0.block_sys.f0(j) == j);
        CHECK(f1.block_sys.f0(j) == binomial(j + 1, 2));
    }
    CHECK(f0.block_sys.b == 2);
    CHECK(f1.block_sys.b == 3);
}

TEST_CASE("doubled letter avoiding") {
    CHECK(fam_ii_avoiding(1).count_words(1, 2) == 3);  // 01 10 11
    CHECK(fam_ii_avoiding(2).count_words(1, 2) == 7);  // 9 minus 00 11
    CHECK(fam_ii_avoiding(1).count_words(1, 0) == 1);
    // q = 1 needs 0^0 = 1 inside f0
    CHECK(fam_ii_avoiding(1).block_sys.f0(2) == 1);
    CHECK(fam_ii_avoiding(1).block_sys.f0(3) == 0);
    // with m = 1 the letters 0..q-1 may not double but q may
    for (int q = 1; q <= 3; ++q) {
        family f = fam_ii_avoiding(q);
        word_predicate p = f.make_predicate(1);
        for (int n = 0; n <= 8; ++n) CHECK(f.count_words(1, n) == brute_count(q + 1, n, p));
    }
}

TEST_CASE("catalog block counts stay within the head bound") {
    for (const family& f : standard_catalog())
        for (int j = 1; j <= 10; ++j) {
            bigint v = f.block_sys.f0(j);
            CHECK(v >= 0);
            CHECK(v <= int_pow(f.block_sys.b, j - 1));
        }
}

TEST_CASE("family factory") {
    family f = make_family("bounded-zero-runs", {{"ell", 2}});
    CHECK(f.count_words(1, 6) == 21);
    CHECK_THROWS_AS(make_family("unknown", {}), std::invalid_argument);
    CHECK_THROWS_AS(make_family("min-gap", {}), std::invalid_argument);
    CHECK_THROWS_AS(make_family("ii-avoiding", {{"q", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_family("ascent-avoiding", {{"r", -1}}), std::invalid_argument);
}

TEST_CASE("chebyshev-style recurrence holds in exact arithmetic") {
    CHECK(chebyshev_g(0, bigint(5)) == 1);
    CHECK(chebyshev_g(1, bigint(3)) == 5);
    std::vector<long long> xs;
    for (long long x = -3; x <= 10; ++x) xs.push_back(x);
    CHECK(chebyshev_identity_check(30, xs));
    CHECK_THROWS_AS(chebyshev_identity_check(1, xs), std::invalid_argument);
}

TEST_CASE("cross verification finds agreement on the catalog samples") {
    verify_options opt;
    opt.brute_budget = 200'000;
    opt.on_over_budget = budget_policy::skip;
    for (const char* name : {"bounded-zero-runs", "min-gap"}) {
        family f = make_family(name, {{"ell", 2}});
        verify_report rep = cross_verify(f, 1, 2, 0, 8, opt);
        CHECK(rep.all_ok());
        CHECK(rep.first_mismatch() == nullptr);
    }
    verify_report asc = cross_verify(fam_ascent_avoiding(0), 1, 2, 1, 8, opt);
    CHECK(asc.all_ok());
}

TEST_CASE("cross verification pinpoints a corrupted closed form") {
    family f = fam_bounded_zero_runs(2);
    auto good = f.fm;
    f.fm = [good](int m, int n) -> bigint {
        bigint v = good(m, n);
        if (m == 2 && n >= 5) v += 1;  // deliberate corruption
        return v;
    };
    verify_options opt;
    opt.brute_budget = 100'000;
    opt.on_over_budget = budget_policy::skip;
    verify_report rep = cross_verify(f, 1, 3, 0, 8, opt);
    CHECK_FALSE(rep.all_ok());
    const verify_cell* bad = rep.first_mismatch();
    REQUIRE(bad != nullptr);
    CHECK(bad->m == 2);
    CHECK(bad->n == 4);  // word length 4 <-> f_m index 5, the smallest corrupted cell
}

TEST_CASE("cross verification propagates brute-force budget errors") {
    verify_options opt;
    opt.brute_budget = 10;
    opt.on_over_budget = budget_policy::error;
    CHECK_THROWS_AS(cross_verify(fam_odd_zero_runs(), 1, 1, 0, 8, opt), budget_error);
}

TEST_CASE("closed forms reject invalid parameters") {
    family f = fam_bounded_zero_runs(2);
    CHECK_THROWS_AS(f.fm(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(f.fm(1, -1), std::invalid_argument);
}
