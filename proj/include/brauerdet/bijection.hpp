#ifndef BRAUERDET_BIJECTION_HPP
#define BRAUERDET_BIJECTION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "brauerdet/diagram.hpp"
#include "brauerdet/gaussian.hpp"
#include "brauerdet/polynomial.hpp"

namespace brauerdet {

class Permutation {
public:
    // one_line[i-1] = pi(i), a bijection on 1..n.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(std::size_t n);
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

    std::size_t size() const { return one_line_.size(); }
    int image(int i) const { return one_line_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& one_line() const { return one_line_; }

    Permutation inverse() const;

    // Cycle decomposition with each cycle starting at its smallest element
    // and cycles ordered by smallest element; fixed points included.
    std::vector<std::vector<int>> canonical_cycles() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.one_line_ == b.one_line_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

private:
    std::vector<int> one_line_;
};

unsigned long inversion_number(const Permutation& p);

// One surviving expansion term, named by its permutation in canonical cycle
// form plus, for every cycle transition, whether the symmetric (A) or the
// antisymmetric (B) part of the matrix entry was taken. Fixed points carry an
// implicit A factor and no explicit transitions.
class TermDescriptor {
public:
    // choices[c][t] belongs to the transition cycles[c][t] -> cycles[c][(t+1) % len];
    // fixed-point cycles must have an empty choice vector.
    TermDescriptor(std::vector<std::vector<int>> cycles,
                   std::vector<std::vector<VarKind>> choices);

    std::size_t size() const { return n_; }
    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    const std::vector<std::vector<VarKind>>& choices() const { return choices_; }

    Permutation permutation() const;
    bool has_even_b_per_cycle() const;

    friend bool operator==(const TermDescriptor& a, const TermDescriptor& b) {
        return a.cycles_ == b.cycles_ && a.choices_ == b.choices_;
    }
    friend bool operator!=(const TermDescriptor& a, const TermDescriptor& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<int>> cycles_;
    std::vector<std::vector<VarKind>> choices_;
};

// Walks the labeled diagram into its expansion term: starting from the
// smallest unvisited top label, alternate between the two copies of each
// label, following cups/caps (B factors) and arcs (A factors) until the walk
// returns to the starting label.
TermDescriptor diagram_to_term(const BrauerDiagram& d, Labeling lab);

// Inverse construction: lays the factors of each cycle back down as cups,
// caps and arcs. Throws std::invalid_argument if some cycle contains an odd
// number of B factors (no diagram yields such a term; those terms cancel).
BrauerDiagram term_to_diagram(const TermDescriptor& t, Labeling lab);

// The monomial named by a term: b[i,j] for B transitions, a[min,max] for A
// transitions, a[i,i] for fixed points. Equals weight(term_to_diagram(t), lab).
Monomial term_monomial(const TermDescriptor& t);

// Per-transition sign sequences of one cycle (n_1,...,n_l) with wraparound
// n_{l+1} = n_1: beta holds +1/-1 and gamma +I/-I according to whether the
// transition ascends or descends.
struct CycleSignature {
    std::vector<GaussianInt> beta;
    std::vector<GaussianInt> gamma;
};

CycleSignature cycle_signature(const std::vector<int>& cycle);

// Sign carried by the term in the determinant expansion: (-1)^inv(pi) times
// the product of beta (variant F) or gamma (variant B) over the B-factor
// transitions of every cycle. Always +1 or -1: valid terms hold an even
// number of B factors per cycle.
GaussianInt sign_of_term(const TermDescriptor& t, Variant variant);

// Enumerates every valid TermDescriptor of size n (all permutations in
// canonical cycle form, all per-cycle even B-factor assignments) in a fixed
// deterministic order; returns how many were visited.
std::uint64_t for_each_term_descriptor(std::size_t n,
                                       const std::function<void(const TermDescriptor&)>& fn);

// {"cycles": [[...],...], "b_transitions": [[cycle_idx, pos_idx],...]} with
// 0-based indices into the cycle list and each cycle's transition list.
std::string term_to_json(const TermDescriptor& t);
TermDescriptor term_from_json(const std::string& text);

}  // namespace brauerdet

#endif
