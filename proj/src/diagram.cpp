#include "brauerdet/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace brauerdet {

char variant_char(Variant v) { return v == Variant::F ? 'F' : 'B'; }

Variant variant_from_string(const std::string& s) {
    if (s == "F" || s == "f") return Variant::F;
    if (s == "B" || s == "b") return Variant::B;
    throw std::invalid_argument("variant must be F or B");
}

BrauerDiagram::BrauerDiagram(std::vector<int> partner) : partner_(std::move(partner)) {
    const std::size_t m = partner_.size();
    if (m % 2 != 0) throw std::invalid_argument("diagram: partner array must have even length");
    for (std::size_t v = 1; v <= m; ++v) {
        const int w = partner_[v - 1];
        if (w < 1 || static_cast<std::size_t>(w) > m)
            throw std::invalid_argument("diagram: partner out of range");
        if (static_cast<std::size_t>(w) == v)
            throw std::invalid_argument("diagram: fixed point in matching");
        if (partner_[static_cast<std::size_t>(w) - 1] != static_cast<int>(v))
            throw std::invalid_argument("diagram: partner array is not an involution");
    }
}

BrauerDiagram BrauerDiagram::identity(std::size_t n) {
    std::vector<int> p(2 * n);
    for (std::size_t i = 1; i <= n; ++i) {
        p[i - 1] = static_cast<int>(i + n);
        p[i + n - 1] = static_cast<int>(i);
    }
    return BrauerDiagram(std::move(p));
}

namespace detail {

std::uint64_t matching_count(std::size_t points) {
    if (points % 2 != 0) throw std::invalid_argument("matching_count: odd point count");
    if (points > 40) throw std::out_of_range("matching_count: count does not fit in 64 bits");
    std::uint64_t r = 1;
    for (std::size_t k = points; k >= 2; k -= 2) r *= static_cast<std::uint64_t>(k - 1);
    return r;
}

std::vector<std::pair<int, int>> matching_at(std::size_t points, std::uint64_t index) {
    if (index >= matching_count(points)) throw std::out_of_range("matching_at: index too large");
    std::vector<int> free_pts(points);
    for (std::size_t v = 0; v < points; ++v) free_pts[v] = static_cast<int>(v + 1);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(points / 2);
    while (!free_pts.empty()) {
        const std::uint64_t rest = matching_count(free_pts.size() - 2);
        const std::size_t choice = static_cast<std::size_t>(index / rest);
        index %= rest;
        pairs.emplace_back(free_pts[0], free_pts[1 + choice]);
        free_pts.erase(free_pts.begin() + static_cast<std::ptrdiff_t>(1 + choice));
        free_pts.erase(free_pts.begin());
    }
    return pairs;
}

namespace {

void visit_matchings(std::vector<int>& free_pts, std::vector<std::pair<int, int>>& pairs,
                     const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
    if (free_pts.empty()) {
        fn(pairs);
        return;
    }
    const int first = free_pts.front();
    for (std::size_t c = 1; c < free_pts.size(); ++c) {
        const int mate = free_pts[c];
        std::vector<int> rest;
        rest.reserve(free_pts.size() - 2);
        for (std::size_t k = 1; k < free_pts.size(); ++k)
            if (k != c) rest.push_back(free_pts[k]);
        pairs.emplace_back(first, mate);
        visit_matchings(rest, pairs, fn);
        pairs.pop_back();
    }
}

}  // namespace

void for_each_matching(std::size_t points,
                       const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
    if (points % 2 != 0) throw std::invalid_argument("for_each_matching: odd point count");
    std::vector<int> free_pts(points);
    for (std::size_t v = 0; v < points; ++v) free_pts[v] = static_cast<int>(v + 1);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(points / 2);
    visit_matchings(free_pts, pairs, fn);
}

}  // namespace detail

std::uint64_t diagram_count(std::size_t n) { return detail::matching_count(2 * n); }

namespace {

BrauerDiagram diagram_from_pairs(std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> partner(2 * n, 0);
    for (const auto& [v, w] : pairs) {
        partner[static_cast<std::size_t>(v) - 1] = w;
        partner[static_cast<std::size_t>(w) - 1] = v;
    }
    return BrauerDiagram(std::move(partner));
}

}  // namespace

BrauerDiagram diagram_at(std::size_t n, std::uint64_t index) {
    return diagram_from_pairs(n, detail::matching_at(2 * n, index));
}

void for_each_diagram(std::size_t n, const std::function<void(const BrauerDiagram&)>& fn) {
    detail::for_each_matching(
        2 * n, [&](const std::vector<std::pair<int, int>>& pairs) { fn(diagram_from_pairs(n, pairs)); });
}

namespace detail {

PosEdge classify_edge(std::size_t n, int v, int w) {
    const int nn = static_cast<int>(n);
    if (w <= nn) return {EdgeClass::Cup, v, w};
    if (v > nn) return {EdgeClass::Cap, v - nn, w - nn};
    return {EdgeClass::Arc, v, w - nn};
}

namespace {

bool spans_interleave(int a1, int a2, int b1, int b2) {
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

}  // namespace

bool edges_cross(const PosEdge& e, const PosEdge& f) {
    if (e.cls == EdgeClass::Arc && f.cls == EdgeClass::Arc)
        return (e.x - f.x) * (e.y - f.y) < 0;
    if (e.cls == f.cls)  // cup/cup or cap/cap
        return spans_interleave(e.x, e.y, f.x, f.y);
    if (e.cls != EdgeClass::Arc && f.cls != EdgeClass::Arc)  // cup vs cap
        return false;
    const PosEdge& arc = e.cls == EdgeClass::Arc ? e : f;
    const PosEdge& span = e.cls == EdgeClass::Arc ? f : e;
    const int p = span.cls == EdgeClass::Cup ? arc.x : arc.y;
    return span.x < p && p < span.y;
}

}  // namespace detail

namespace {

using detail::EdgeClass;
using detail::PosEdge;
using detail::edges_cross;

std::vector<PosEdge> position_edges(const BrauerDiagram& d) {
    std::vector<PosEdge> edges;
    edges.reserve(d.size());
    for (int v = 1; v <= static_cast<int>(2 * d.size()); ++v) {
        const int w = d.partner(v);
        if (w > v) edges.push_back(detail::classify_edge(d.size(), v, w));
    }
    return edges;
}

}  // namespace

unsigned long crossing_number(const BrauerDiagram& d) {
    const std::vector<PosEdge> edges = position_edges(d);
    unsigned long crossings = 0;
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
            if (edges_cross(edges[a], edges[b])) ++crossings;
    return crossings;
}

namespace {

int bottom_label(std::size_t n, int pos, Labeling lab) {
    return lab == Labeling::F ? pos : static_cast<int>(n) + 1 - pos;
}

std::pair<int, int> sorted_pair(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

EdgeList edge_list(const BrauerDiagram& d, Labeling lab) {
    const std::size_t n = d.size();
    EdgeList e;
    for (const PosEdge& pe : position_edges(d)) {
        switch (pe.cls) {
            case EdgeClass::Cup:
                e.cups.push_back(sorted_pair(pe.x, pe.y));
                break;
            case EdgeClass::Cap:
                e.caps.push_back(sorted_pair(bottom_label(n, pe.x, lab), bottom_label(n, pe.y, lab)));
                break;
            case EdgeClass::Arc:
                e.arcs.emplace_back(pe.x, bottom_label(n, pe.y, lab));
                break;
        }
    }
    std::sort(e.cups.begin(), e.cups.end());
    std::sort(e.caps.begin(), e.caps.end());
    std::sort(e.arcs.begin(), e.arcs.end());
    return e;
}

BrauerDiagram diagram_from_edges(std::size_t n, const EdgeList& e, Labeling lab) {
    const int nn = static_cast<int>(n);
    std::vector<int> partner(2 * n, 0);
    auto join = [&](int v, int w) {
        if (partner[static_cast<std::size_t>(v) - 1] != 0 ||
            partner[static_cast<std::size_t>(w) - 1] != 0)
            throw std::invalid_argument("diagram_from_edges: vertex used twice");
        partner[static_cast<std::size_t>(v) - 1] = w;
        partner[static_cast<std::size_t>(w) - 1] = v;
    };
    auto bottom_pos = [&](int label) {
        return nn + (lab == Labeling::F ? label : nn + 1 - label);
    };
    for (const auto& [i, j] : e.cups) join(i, j);
    for (const auto& [i, j] : e.caps) join(bottom_pos(i), bottom_pos(j));
    for (const auto& [t, b] : e.arcs) join(t, bottom_pos(b));
    return BrauerDiagram(std::move(partner));
}

BrauerDiagram swap_rows(const BrauerDiagram& d, Labeling lab) {
    EdgeList e = edge_list(d, lab);
    EdgeList swapped;
    swapped.cups = e.caps;
    swapped.caps = e.cups;
    swapped.arcs.reserve(e.arcs.size());
    for (const auto& [t, b] : e.arcs) swapped.arcs.emplace_back(b, t);
    std::sort(swapped.arcs.begin(), swapped.arcs.end());
    return diagram_from_edges(d.size(), swapped, lab);
}

Monomial weight(const BrauerDiagram& d, Labeling lab) {
    const EdgeList e = edge_list(d, lab);
    Monomial w;
    for (const auto& [i, j] : e.cups) w.multiply_var(IndexedVar(VarKind::B, i, j));
    for (const auto& [i, j] : e.caps) w.multiply_var(IndexedVar(VarKind::B, i, j));
    for (const auto& [t, b] : e.arcs) w.multiply_var(IndexedVar::a(t, b));
    return w;
}

std::string diagram_to_json(const BrauerDiagram& d) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= static_cast<int>(2 * d.size()); ++v)
        if (d.partner(v) > v) edges.emplace_back(v, d.partner(v));
    std::sort(edges.begin(), edges.end());
    nlohmann::json j;
    j["n"] = d.size();
    j["edges"] = nlohmann::json::array();
    for (const auto& [v, w] : edges) j["edges"].push_back({v, w});
    return j.dump();
}

BrauerDiagram diagram_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("diagram JSON must have fields \"n\" and \"edges\"");
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<int> partner(2 * n, 0);
    for (const auto& edge : j.at("edges")) {
        if (!edge.is_array() || edge.size() != 2)
            throw std::invalid_argument("diagram JSON edge must be a pair");
        const int v = edge[0].get<int>();
        const int w = edge[1].get<int>();
        if (v < 1 || w < 1 || v > static_cast<int>(2 * n) || w > static_cast<int>(2 * n) || v == w)
            throw std::invalid_argument("diagram JSON edge out of range");
        if (partner[static_cast<std::size_t>(v) - 1] != 0 ||
            partner[static_cast<std::size_t>(w) - 1] != 0)
            throw std::invalid_argument("diagram JSON vertex matched twice");
        partner[static_cast<std::size_t>(v) - 1] = w;
        partner[static_cast<std::size_t>(w) - 1] = v;
    }
    return BrauerDiagram(std::move(partner));  // rejects unmatched vertices
}

}  // namespace brauerdet
