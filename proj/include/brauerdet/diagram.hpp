#ifndef BRAUERDET_DIAGRAM_HPP
#define BRAUERDET_DIAGRAM_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "brauerdet/polynomial.hpp"

namespace brauerdet {

// Bottom-row labeling convention. The top row is always labeled 1..n left to
// right; F labels the bottom row left to right as well, B labels it right to
// left. The same position-level matching therefore carries two label-level
// readings, and F/B also selects the matching matrix decomposition A+B vs
// A+I*B downstream.
enum class Variant : unsigned char { F, B };
using Labeling = Variant;

char variant_char(Variant v);
Variant variant_from_string(const std::string& s);

// Perfect matching on 2n vertices arranged in two rows of n. Vertices are
// addressed by position: 1..n is the top row left to right, n+1..2n the
// bottom row left to right. Edges inside the top row are cups, inside the
// bottom row caps, and between rows arcs. Labels are applied only at the
// edge_list/weight boundary, so one stored matching serves both labelings.
class BrauerDiagram {
public:
    // partner[v-1] is the vertex matched with v; must be a fixed-point-free
    // involution on 1..2n.
    explicit BrauerDiagram(std::vector<int> partner);

    static BrauerDiagram identity(std::size_t n);  // arcs i <-> i

    std::size_t size() const { return partner_.size() / 2; }
    int partner(int v) const { return partner_[static_cast<std::size_t>(v) - 1]; }
    bool is_top(int v) const { return static_cast<std::size_t>(v) <= size(); }
    const std::vector<int>& partners() const { return partner_; }

    friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) {
        return a.partner_ == b.partner_;
    }
    friend bool operator!=(const BrauerDiagram& a, const BrauerDiagram& b) { return !(a == b); }
    friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) {
        return a.partner_ < b.partner_;
    }

private:
    std::vector<int> partner_;
};

// Number of perfect matchings of 2n points, (2n-1)!!. Guarded so the result
// fits in 64 bits.
std::uint64_t diagram_count(std::size_t n);

// Deterministic enumeration: the diagram at `index` in the order produced by
// repeatedly pairing the smallest unmatched position with each larger
// unmatched position in ascending order.
BrauerDiagram diagram_at(std::size_t n, std::uint64_t index);

// Visits all (2n-1)!! diagrams in enumeration order.
void for_each_diagram(std::size_t n, const std::function<void(const BrauerDiagram&)>& fn);

// Crossing number: pairwise edge intersections, computed on positions by the
// combinatorial predicates (arcs cross iff their endpoints interleave across
// the rows, cups/caps cross iff their spans interleave, an arc crosses a
// cup/cap iff its endpoint on that row lies strictly inside the span, and a
// cup never crosses a cap).
unsigned long crossing_number(const BrauerDiagram& d);

// Label-level view of a diagram: cups and caps as increasing label pairs,
// arcs as (top label, bottom label). Lists are sorted.
struct EdgeList {
    std::vector<std::pair<int, int>> cups;
    std::vector<std::pair<int, int>> caps;
    std::vector<std::pair<int, int>> arcs;
};

EdgeList edge_list(const BrauerDiagram& d, Labeling lab);

// Rebuilds the positional diagram whose edge_list under `lab` equals `e`.
BrauerDiagram diagram_from_edges(std::size_t n, const EdgeList& e, Labeling lab);

// The labeled diagram with cup and cap sets exchanged (arcs keep their label
// pairs with the rows of each pair swapped).
BrauerDiagram swap_rows(const BrauerDiagram& d, Labeling lab);

// w(mu): b[i,j] for every cup and cap, a[min,max] for every arc.
Monomial weight(const BrauerDiagram& d, Labeling lab);

// {"n": n, "edges": [[v,w],...]} with 1-based positions, each edge sorted,
// edges sorted.
std::string diagram_to_json(const BrauerDiagram& d);
BrauerDiagram diagram_from_json(const std::string& text);

namespace detail {
// Shared matching enumeration over points {1..2m} (also used for Pfaffians):
// pairs listed as (smaller, larger) in the order they were matched.
std::uint64_t matching_count(std::size_t points);
std::vector<std::pair<int, int>> matching_at(std::size_t points, std::uint64_t index);
void for_each_matching(std::size_t points,
                       const std::function<void(const std::vector<std::pair<int, int>>&)>& fn);

// Position-level edge classification and the pairwise crossing predicate,
// shared by crossing_number and the expansion loops.
enum class EdgeClass : unsigned char { Cup, Cap, Arc };
struct PosEdge {
    EdgeClass cls;
    // Cup/cap: (x, y) = row positions with x < y. Arc: x = top, y = bottom.
    int x;
    int y;
};
PosEdge classify_edge(std::size_t n, int v, int w);  // v < w, positions in 1..2n
bool edges_cross(const PosEdge& e, const PosEdge& f);
}  // namespace detail

}  // namespace brauerdet

#endif
