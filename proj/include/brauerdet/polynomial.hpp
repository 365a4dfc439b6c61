#ifndef BRAUERDET_POLYNOMIAL_HPP
#define BRAUERDET_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "brauerdet/gaussian.hpp"

namespace brauerdet {

enum class VarKind : unsigned char { A, B };

// Indeterminate a[i,j] (defined for i <= j) or b[i,j] (defined for i < j),
// with 1-based labels. Variables are totally ordered by kind (A before B),
// then (i,j) lexicographically; this order fixes the canonical monomial form.
class IndexedVar {
public:
    IndexedVar(VarKind kind, int i, int j);

    // Index-sorted constructors, for sites that hold an unordered label pair.
    static IndexedVar a(int i, int j);
    static IndexedVar b(int i, int j);

    VarKind kind() const { return kind_; }
    int i() const { return i_; }
    int j() const { return j_; }

    std::string to_string() const;  // "a[1,2]" / "b[2,3]"

    friend bool operator==(const IndexedVar& x, const IndexedVar& y) {
        return x.kind_ == y.kind_ && x.i_ == y.i_ && x.j_ == y.j_;
    }
    friend bool operator!=(const IndexedVar& x, const IndexedVar& y) { return !(x == y); }
    friend bool operator<(const IndexedVar& x, const IndexedVar& y) {
        if (x.kind_ != y.kind_) return x.kind_ < y.kind_;
        if (x.i_ != y.i_) return x.i_ < y.i_;
        return x.j_ < y.j_;
    }

private:
    VarKind kind_;
    std::uint8_t i_;
    std::uint8_t j_;
};

struct VarPow {
    IndexedVar var;
    unsigned exp;
};

// Product of variables with positive exponents, kept sorted by variable.
// The empty product is the monomial 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const IndexedVar& v) { multiply_var(v); }

    // Adopts an already canonical factor list (sorted by variable, unique
    // variables, positive exponents); validated.
    static Monomial from_sorted_factors(std::vector<VarPow> factors);

    // Multiplies in v^exp, merging with an existing factor if present.
    void multiply_var(const IndexedVar& v, unsigned exp = 1);
    Monomial times(const Monomial& o) const;

    bool is_one() const { return factors_.empty(); }
    unsigned degree() const;
    unsigned degree_of_kind(VarKind k) const;
    const std::vector<VarPow>& factors() const { return factors_; }

    std::string to_string() const;  // "a[1,3]*b[1,2]*b[2,3]", "a[1,2]^2", "1"

    // Canonical order: lexicographic over the expanded variable sequence
    // (each variable repeated exp times), shorter prefixes first.
    // Deterministic, used for serialization.
    friend bool operator<(const Monomial& x, const Monomial& y);
    friend bool operator==(const Monomial& x, const Monomial& y);
    friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x == y); }

private:
    std::vector<VarPow> factors_;
};

// Sparse multivariate polynomial over Z[I], stored in normal form: no zero
// coefficients, terms keyed by canonically ordered monomials.
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianInt>;

    Polynomial() = default;
    static Polynomial constant(GaussianInt c);
    static Polynomial variable(const IndexedVar& v);
    static Polynomial term(Monomial m, GaussianInt c);

    // Bulk construction from unsorted (monomial, coefficient) pairs; merges
    // duplicates and drops zero coefficients.
    static Polynomial from_terms(std::vector<std::pair<Monomial, GaussianInt>> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Accumulates c * m, dropping the stored term if the coefficient cancels.
    void add_term(const Monomial& m, const GaussianInt& c);
    const GaussianInt* coefficient(const Monomial& m) const;  // null if absent

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator-() const;
    Polynomial& negate();

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Canonical text form, the fixture format: terms in monomial order joined
    // by " + "/" - ", coefficient 1 omitted, pure-imaginary printed "k*I",
    // mixed coefficients parenthesized: "(1+2*I)*a[1,1]". Zero prints "0".
    std::string to_string() const;

private:
    TermMap terms_;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
std::size_t count_distinct_terms(const Polynomial& p);

}  // namespace brauerdet

#endif
