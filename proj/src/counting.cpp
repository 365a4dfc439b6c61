#include "brauerdet/counting.hpp"

#include <stdexcept>

#include <json.hpp>

#include "brauerdet/matrices.hpp"

namespace brauerdet {

std::uint64_t double_factorial(long m) {
    if (m < -1) throw std::invalid_argument("double_factorial: argument must be >= -1");
    if (m % 2 == 0) throw std::invalid_argument("double_factorial: argument must be odd");
    if (m > 33) throw std::out_of_range("double_factorial: result does not fit in 64 bits");
    std::uint64_t r = 1;
    for (long k = m; k >= 2; k -= 2) r *= static_cast<std::uint64_t>(k);
    return r;
}

std::vector<std::uint64_t> stirling_row(std::size_t n) {
    if (n < 1) throw std::invalid_argument("stirling_row: n must be at least 1");
    if (n > 20) throw std::out_of_range("stirling_row: n too large for 64-bit entries");
    // row[k] = s(r, k), grown from r = 1 upward.
    std::vector<std::uint64_t> row(n + 1, 0);
    row[1] = 1;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t k = r + 1; k >= 1; --k)
            row[k] = (k > 0 ? row[k - 1] : 0) + r * row[k];
    }
    return {row.begin() + 1, row.end()};
}

std::uint64_t stirling_first_unsigned(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("stirling: k must satisfy 0 <= k <= n");
    if (n == 0) return k == 0 ? 1 : 0;
    if (k == 0) return 0;
    return stirling_row(n)[k - 1];
}

std::uint64_t surviving_term_count(std::size_t n) {
    if (n < 1) throw std::invalid_argument("surviving_term_count: n must be at least 1");
    const std::vector<std::uint64_t> row = stirling_row(n);
    std::uint64_t total = 0;
    for (std::size_t k = 1; k <= n; ++k) total += row[k - 1] << (n - k);
    return total;
}

std::uint64_t sylvester_v(std::size_t n) {
    std::uint64_t prev2 = 1, prev1 = 1;  // v0, v1
    if (n <= 1) return 1;
    for (std::size_t k = 2; k <= n; ++k) {
        const std::uint64_t cur = (2 * k - 1) * prev1 - (k - 1) * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

std::uint64_t distinct_skew_terms(std::size_t m) {
    if (m % 2 != 0) throw std::invalid_argument("distinct_skew_terms: size must be even");
    if (m < 2) throw std::invalid_argument("distinct_skew_terms: size must be at least 2");
    if (m > 8) throw std::out_of_range("distinct_skew_terms: expansion capped at size 8");
    const SymbolicMatrix antisym =
        SymbolicMatrix::generic(m, Variant::F).with_a_set_to_zero();
    return leibniz_determinant(antisym).term_count();
}

CountTable count_table(std::size_t n) {
    CountTable t;
    t.n = n;
    t.double_factorial = double_factorial(2 * static_cast<long>(n) - 1);
    t.stirling_row = stirling_row(n);
    t.weighted_sum = surviving_term_count(n);
    t.sylvester_v = sylvester_v(n);
    return t;
}

std::string count_table_json(const CountTable& t) {
    nlohmann::json j;
    j["n"] = t.n;
    j["double_factorial"] = t.double_factorial;
    j["stirling_row"] = t.stirling_row;
    j["weighted_sum"] = t.weighted_sum;
    j["sylvester_v"] = t.sylvester_v;
    return j.dump();
}

}  // namespace brauerdet
