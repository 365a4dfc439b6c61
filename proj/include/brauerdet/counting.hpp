#ifndef BRAUERDET_COUNTING_HPP
#define BRAUERDET_COUNTING_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace brauerdet {

// m(m-2)...1 for odd m >= 1, and 1 for m = -1 (empty product). Rejects even m.
std::uint64_t double_factorial(long m);

// Unsigned Stirling numbers of the first kind: permutations of n letters
// with k cycles. Triangular recurrence s(n+1,k) = s(n,k-1) + n*s(n,k).
std::uint64_t stirling_first_unsigned(std::size_t n, std::size_t k);
std::vector<std::uint64_t> stirling_row(std::size_t n);  // s(n,1) .. s(n,n)

// Number of expansion terms surviving cancellation: sum over k of
// s(n,k) * 2^(n-k). Equals (2n-1)!!.
std::uint64_t surviving_term_count(std::size_t n);

// v(n) = (2n-1) v(n-1) - (n-1) v(n-2), v(0) = v(1) = 1.
std::uint64_t sylvester_v(std::size_t n);

// Number of distinct monomials in the determinant of the generic
// antisymmetric matrix of even size m, computed by symbolic expansion.
// Equals (m-1)!! * v(m/2).
std::uint64_t distinct_skew_terms(std::size_t m);

struct CountTable {
    std::size_t n = 0;
    std::uint64_t double_factorial = 0;  // (2n-1)!!
    std::vector<std::uint64_t> stirling_row;
    std::uint64_t weighted_sum = 0;  // sum of s(n,k) * 2^(n-k)
    std::uint64_t sylvester_v = 0;
};

CountTable count_table(std::size_t n);
std::string count_table_json(const CountTable& t);

}  // namespace brauerdet

#endif
