#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hermite2d/multi_index.hpp"

using namespace h2d;
using mindex::MultiIndexMatrix;
using mindex::ShellCursor;

namespace {

std::uint64_t binom_oracle(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int j = 1; j <= k; ++j) r = r * static_cast<std::uint64_t>(n - k + j) / j;
    return r;
}

}  // namespace

TEST_CASE("shell counts match stars and bars") {
    CHECK(mindex::shell_count(2, 0, true) == 1);
    CHECK(mindex::shell_count(2, 0, false) == 1);
    CHECK(mindex::shell_count(2, 1, true) == 3);
    CHECK(mindex::shell_count(2, 1, false) == 4);
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 8; ++d) {
            const int f_sym = MultiIndexMatrix::support_size(n, true);
            const int f_gen = MultiIndexMatrix::support_size(n, false);
            CHECK(mindex::shell_count(n, d, true) == binom_oracle(d + f_sym - 1, f_sym - 1));
            if (n <= 3)
                CHECK(mindex::shell_count(n, d, false) == binom_oracle(d + f_gen - 1, f_gen - 1));
        }
    }
}

TEST_CASE("enumeration is exhaustive and duplicate-free") {
    for (bool symmetric : {true, false}) {
        for (int n = 1; n <= 3; ++n) {
            for (int d = 0; d <= 6; ++d) {
                std::set<std::vector<int>> seen;
                int total_entries_ok = 0;
                ShellCursor cursor(n, d, symmetric);
                do {
                    const std::vector<int>& c = cursor.cells();
                    int sum = 0;
                    for (int v : c) {
                        CHECK(v >= 0);
                        sum += v;
                    }
                    if (sum == d) ++total_entries_ok;
                    seen.insert(c);
                } while (cursor.advance());
                CHECK(seen.size() == mindex::shell_count(n, d, symmetric));
                CHECK(static_cast<std::uint64_t>(total_entries_ok) ==
                      mindex::shell_count(n, d, symmetric));
            }
        }
    }
}

TEST_CASE("two enumerations of the same shell are identical") {
    ShellCursor a(3, 5, false), b(3, 5, false);
    do {
        CHECK(a.cells() == b.cells());
        b.advance();
    } while (a.advance());
}

TEST_CASE("enumeration order is lexicographic") {
    ShellCursor cursor(2, 3, false);
    std::vector<int> prev = cursor.cells();
    while (cursor.advance()) {
        CHECK(prev < cursor.cells());
        prev = cursor.cells();
    }
}

TEST_CASE("seek lands on the item advance reaches") {
    SplitMix64 rng(77);
    ShellCursor reference(3, 7, false);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(reference.cells());
    } while (reference.advance());
    for (int trial = 0; trial < 40; ++trial) {
        const auto rank = static_cast<std::uint64_t>(rng.uniform() * static_cast<double>(all.size()));
        ShellCursor cursor(3, 7, false);
        cursor.seek(rank);
        CHECK(cursor.cells() == all[rank]);
        CHECK(cursor.rank() == rank);
    }
    ShellCursor cursor(3, 7, false);
    CHECK_THROWS_AS(cursor.seek(all.size()), std::out_of_range);
}

TEST_CASE("derived sums") {
    SUBCASE("all-zero matrix") {
        MultiIndexMatrix k{2, false, {0, 0, 0, 0}};
        const auto s = mindex::derived_sums(k);
        CHECK(s.row_sums == std::vector<int>{0, 0});
        CHECK(s.col_sums == std::vector<int>{0, 0});
        CHECK(s.trace == 0);
        CHECK(s.total == 0);
    }
    SUBCASE("single off-diagonal unit, general") {
        MultiIndexMatrix k{2, false, {0, 1, 0, 0}};  // k_{1,2} = 1
        const auto s = mindex::derived_sums(k);
        CHECK(s.row_sums == std::vector<int>{1, 0});
        CHECK(s.col_sums == std::vector<int>{0, 1});
        CHECK(s.trace == 0);
    }
    SUBCASE("diagonal counts twice in the real-case index") {
        MultiIndexMatrix k{1, true, {1}};
        const auto s = mindex::derived_sums(k);
        CHECK(s.k_real == std::vector<int>{2});
    }
}

TEST_CASE("real-case indices sum to twice the degree, shell-wise") {
    for (int n = 1; n <= 3; ++n) {
        for (int d = 0; d <= 6; ++d) {
            ShellCursor cursor(n, d, true);
            do {
                const auto s = mindex::derived_sums(cursor.materialize());
                int total = 0;
                for (int v : s.k_real) total += v;
                CHECK(total == 2 * d);
            } while (cursor.advance());
        }
    }
}

TEST_CASE("symmetric entry accessor mirrors") {
    MultiIndexMatrix k{3, true, {1, 2, 3, 4, 5, 6}};
    CHECK(k.entry(0, 0) == 1);
    CHECK(k.entry(0, 1) == 2);
    CHECK(k.entry(1, 0) == 2);
    CHECK(k.entry(2, 0) == 3);
    CHECK(k.entry(1, 1) == 4);
    CHECK(k.entry(2, 1) == 5);
    CHECK(k.entry(2, 2) == 6);
    CHECK(k.total_degree() == 21);
}
