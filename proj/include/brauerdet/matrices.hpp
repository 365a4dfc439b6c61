#ifndef BRAUERDET_MATRICES_HPP
#define BRAUERDET_MATRICES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "brauerdet/bijection.hpp"
#include "brauerdet/diagram.hpp"
#include "brauerdet/polynomial.hpp"

namespace brauerdet {

enum class MatrixKind : unsigned char { F, B, Custom };

// n x n grid of polynomials. The generic F matrix splits every off-diagonal
// entry into a symmetric and an antisymmetric indeterminate, a[i,j] + b[i,j]
// above the diagonal and a[j,i] - b[j,i] below; the B matrix carries the
// antisymmetric part with coefficients +I/-I instead.
class SymbolicMatrix {
public:
    static SymbolicMatrix generic(std::size_t n, Variant v);
    static SymbolicMatrix from_entries(std::vector<std::vector<Polynomial>> entries);

    // Substitutes a[i,j] := 0, i.e. drops every term containing an A
    // variable. Applied to the F matrix this yields the generic
    // antisymmetric matrix.
    SymbolicMatrix with_a_set_to_zero() const;

    std::size_t size() const { return entries_.size(); }
    MatrixKind kind() const { return kind_; }
    const Polynomial& entry(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
    }

private:
    SymbolicMatrix() = default;
    MatrixKind kind_ = MatrixKind::Custom;
    std::vector<std::vector<Polynomial>> entries_;
};

// Exact Leibniz expansion: sum over all permutations of the signed entry
// product, with the product of polynomial entries expanded term by term.
Polynomial leibniz_determinant(const SymbolicMatrix& m, unsigned threads = 1);

// Leibniz sum without the permutation sign.
Polynomial permanent(const SymbolicMatrix& m, unsigned threads = 1);

// Sum over all diagrams of (-1)^crossings * weight under the given labeling.
Polynomial brauer_weight_sum(std::size_t n, Labeling lab, unsigned threads = 1);

// The diagram-side determinant: the weight sum for variant F, and
// (-1)^(n(n-1)/2) times the weight sum for variant B.
Polynomial brauer_determinant(std::size_t n, Variant v, unsigned threads = 1);

// One pre-cancellation expansion term of the generic F or B matrix: a
// permutation plus an A/B part choice for every off-diagonal row.
struct LeibnizTerm {
    Permutation perm;
    std::vector<VarKind> row_choice;  // per row 1..n; diagonal rows hold A
    GaussianInt entry_product;        // product of chosen entry coefficients
    bool inv_odd;                     // parity of inv(perm)
    Monomial monomial;
    bool survives;  // even number of B choices in every cycle of perm

    GaussianInt signed_value() const {
        return inv_odd ? -entry_product : entry_product;
    }
};

// Emits every (permutation, choice) expansion term in a fixed order:
// permutations in lexicographic one-line order, choice masks in binary order
// over the off-diagonal rows. The surviving sub-stream is in bijection with
// labeled Brauer diagrams.
void leibniz_term_stream(std::size_t n, Variant v,
                         const std::function<void(const LeibnizTerm&)>& fn);

// The coefficient the term carries in det of the given generic matrix, read
// off the matrix entries themselves: (-1)^inv times the product over
// transitions of the chosen part's coefficient in entry(from, to).
GaussianInt term_value_from_matrix(const SymbolicMatrix& m, const TermDescriptor& t);

// Sum over perfect matchings of {1..2*half} of the chord product
// b[i1,j1]...b[im,jm] signed by the parity of interleaving chord pairs.
Polynomial pfaffian(std::size_t half);

struct CayleyReport {
    std::size_t n = 0;
    bool holds = false;
    Polynomial det;        // determinant of the generic antisymmetric matrix
    Polynomial expected;   // pfaffian squared for even n, zero for odd n
};

// Checks det = pf^2 (n even) or det = 0 (n odd) on the generic antisymmetric
// specialization.
CayleyReport verify_cayley(std::size_t n, unsigned threads = 1);

}  // namespace brauerdet

#endif
