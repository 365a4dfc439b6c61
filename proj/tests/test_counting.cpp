#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "brauerdet/counting.hpp"

using namespace brauerdet;

namespace {

// Independent oracle: count permutations of n letters by number of cycles,
// by walking every permutation.
std::vector<std::uint64_t> stirling_row_brute(std::size_t n) {
    std::vector<std::uint64_t> row(n, 0);
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    do {
        std::vector<bool> seen(n, false);
        std::size_t cycles = 0;
        for (std::size_t s = 0; s < n; ++s) {
            if (seen[s]) continue;
            ++cycles;
            std::size_t cur = s;
            while (!seen[cur]) {
                seen[cur] = true;
                cur = static_cast<std::size_t>(line[cur]) - 1;
            }
        }
        ++row[cycles - 1];
    } while (std::next_permutation(line.begin(), line.end()));
    return row;
}

}  // namespace

TEST_CASE("double factorial") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(9) == 945);
    CHECK(double_factorial(13) == 135135);
    CHECK_THROWS_AS(double_factorial(4), std::invalid_argument);
    CHECK_THROWS_AS(double_factorial(-3), std::invalid_argument);
    CHECK_THROWS_AS(double_factorial(35), std::out_of_range);
}

TEST_CASE("stirling numbers match brute-force cycle counts") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto brute = stirling_row_brute(n);
        const auto row = stirling_row(n);
        REQUIRE(row.size() == n);
        for (std::size_t k = 1; k <= n; ++k) CHECK(row[k - 1] == brute[k - 1]);
    }
}

TEST_CASE("stirling fixtures") {
    CHECK(stirling_first_unsigned(3, 1) == 2);
    CHECK(stirling_first_unsigned(4, 2) == 11);
    CHECK(stirling_first_unsigned(5, 5) == 1);
    CHECK(stirling_first_unsigned(9, 9) == 1);
    CHECK(stirling_first_unsigned(4, 0) == 0);
    CHECK(stirling_first_unsigned(0, 0) == 1);
    CHECK_THROWS_AS(stirling_first_unsigned(3, 4), std::invalid_argument);
}

TEST_CASE("surviving term count") {
    CHECK(surviving_term_count(1) == 1);
    CHECK(surviving_term_count(3) == 15);
    CHECK(surviving_term_count(6) == 10395);
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(surviving_term_count(n) == double_factorial(2 * static_cast<long>(n) - 1));
}

TEST_CASE("generating identity for weighted stirling sums") {
    // sum_k s(n,k) x^(n-k) = (1+x)(1+2x)...(1+(n-1)x)
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto row = stirling_row(n);
        for (std::uint64_t x = 1; x <= 3; ++x) {
            std::uint64_t lhs = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                std::uint64_t pw = 1;
                for (std::size_t e = 0; e < n - k; ++e) pw *= x;
                lhs += row[k - 1] * pw;
            }
            std::uint64_t rhs = 1;
            for (std::uint64_t f = 1; f < n; ++f) rhs *= 1 + f * x;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("sylvester recurrence") {
    CHECK(sylvester_v(0) == 1);
    CHECK(sylvester_v(1) == 1);
    CHECK(sylvester_v(2) == 2);
    CHECK(sylvester_v(3) == 8);
    CHECK(sylvester_v(4) == 50);
}

TEST_CASE("distinct terms of antisymmetric determinants") {
    CHECK(distinct_skew_terms(2) == 1);
    CHECK(distinct_skew_terms(4) == 6);
    CHECK(distinct_skew_terms(6) == 120);
    CHECK_THROWS_AS(distinct_skew_terms(3), std::invalid_argument);
    CHECK_THROWS_AS(distinct_skew_terms(10), std::out_of_range);
    for (std::size_t half = 1; half <= 3; ++half)
        CHECK(distinct_skew_terms(2 * half) ==
              double_factorial(2 * static_cast<long>(half) - 1) * sylvester_v(half));
}

TEST_CASE("count table") {
    const CountTable t = count_table(3);
    CHECK(t.n == 3);
    CHECK(t.double_factorial == 15);
    CHECK(t.weighted_sum == 15);
    CHECK(t.sylvester_v == 8);
    REQUIRE(t.stirling_row.size() == 3);
    CHECK(t.stirling_row[0] == 2);
    CHECK(t.stirling_row[1] == 3);
    CHECK(t.stirling_row[2] == 1);

    const nlohmann::json j = nlohmann::json::parse(count_table_json(t));
    CHECK(j.at("n") == 3);
    CHECK(j.at("double_factorial") == 15);
    CHECK(j.at("weighted_sum") == 15);
    CHECK(j.at("sylvester_v") == 8);
    CHECK(j.at("stirling_row") == nlohmann::json({2, 3, 1}));

    const CountTable t1 = count_table(1);
    CHECK(t1.double_factorial == 1);
    CHECK(t1.weighted_sum == 1);
}
