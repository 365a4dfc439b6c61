#ifndef BRAUERDET_VERIFY_HPP
#define BRAUERDET_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "brauerdet/matrices.hpp"

namespace brauerdet {

// First monomial (in canonical order) on which two polynomials disagree.
struct PolyMismatch {
    std::string monomial;
    std::string lhs_coefficient;
    std::string rhs_coefficient;
};

std::optional<PolyMismatch> compare_polynomials(const Polynomial& lhs, const Polynomial& rhs);

struct TheoremReport {
    std::size_t n = 0;
    Variant variant = Variant::F;
    bool ok = false;
    std::uint64_t diagrams = 0;
    std::uint64_t distinct_monomials = 0;
    std::optional<PolyMismatch> mismatch;  // brauer side vs leibniz side

    std::string summary() const;
    std::string to_json() const;
};

// Compares the diagram-side determinant against the Leibniz expansion.
TheoremReport run_verify_theorem(std::size_t n, Variant v, unsigned threads = 1);

struct BijectionReport {
    std::size_t n = 0;
    bool ok = false;
    std::uint64_t diagrams_checked = 0;     // per labeling
    std::uint64_t descriptors_checked = 0;  // per labeling
    std::string failure;  // JSON record of the first counterexample

    std::string summary() const;
    std::string to_json() const;
};

// Round-trips every diagram (both labelings) through its term and every
// valid term through its diagram, also checking the weight projection.
BijectionReport run_verify_bijection(std::size_t n);

struct LemmaReport {
    std::size_t n = 0;
    bool ok = false;
    std::uint64_t arc_only_checked = 0;   // per labeling
    std::uint64_t inverse_checked = 0;    // per labeling
    std::uint64_t sign_checked = 0;       // per variant
    std::uint64_t surgeries_checked = 0;  // over all four edge surgeries
    std::string failure;

    std::string summary() const;
    std::string to_json() const;
};

// Property suites: inversion/crossing relations on arc-only diagrams, the
// row-swap/inverse-permutation relation, per-term sign coherence against the
// matrix entries, and the four crossing-parity edge surgeries.
LemmaReport run_verify_lemmas(std::size_t n);

std::string cayley_summary(const CayleyReport& r);
std::string cayley_to_json(const CayleyReport& r);

}  // namespace brauerdet

#endif
