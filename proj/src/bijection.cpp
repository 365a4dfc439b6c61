#include "brauerdet/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace brauerdet {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    const int n = static_cast<int>(one_line_.size());
    std::vector<bool> seen(one_line_.size(), false);
    for (const int v : one_line_) {
        if (v < 1 || v > n) throw std::invalid_argument("permutation: image out of range");
        if (seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("permutation: repeated image");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> one_line(n, 0);
    for (const auto& cyc : cycles) {
        if (cyc.empty()) throw std::invalid_argument("permutation: empty cycle");
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int from = cyc[k];
            const int to = cyc[(k + 1) % cyc.size()];
            if (from < 1 || from > static_cast<int>(n))
                throw std::invalid_argument("permutation: cycle entry out of range");
            if (one_line[static_cast<std::size_t>(from) - 1] != 0)
                throw std::invalid_argument("permutation: entry in two cycles");
            one_line[static_cast<std::size_t>(from) - 1] = to;
        }
    }
    for (const int v : one_line)
        if (v == 0) throw std::invalid_argument("permutation: cycles do not cover 1..n");
    return Permutation(std::move(one_line));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(one_line_.size());
    for (std::size_t i = 0; i < one_line_.size(); ++i)
        inv[static_cast<std::size_t>(one_line_[i]) - 1] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::canonical_cycles() const {
    const int n = static_cast<int>(one_line_.size());
    std::vector<bool> visited(one_line_.size(), false);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<std::size_t>(start) - 1]) continue;
        std::vector<int> cyc;
        int cur = start;
        do {
            visited[static_cast<std::size_t>(cur) - 1] = true;
            cyc.push_back(cur);
            cur = image(cur);
        } while (cur != start);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

unsigned long inversion_number(const Permutation& p) {
    const std::size_t n = p.size();
    unsigned long inv = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p.one_line()[i] > p.one_line()[j]) ++inv;
    return inv;
}

TermDescriptor::TermDescriptor(std::vector<std::vector<int>> cycles,
                               std::vector<std::vector<VarKind>> choices)
    : cycles_(std::move(cycles)), choices_(std::move(choices)) {
    if (cycles_.size() != choices_.size())
        throw std::invalid_argument("term: one choice vector per cycle required");
    std::size_t total = 0;
    int prev_min = 0;
    for (std::size_t c = 0; c < cycles_.size(); ++c) {
        const auto& cyc = cycles_[c];
        if (cyc.empty()) throw std::invalid_argument("term: empty cycle");
        if (*std::min_element(cyc.begin(), cyc.end()) != cyc.front())
            throw std::invalid_argument("term: cycle must start at its smallest element");
        if (cyc.front() <= prev_min)
            throw std::invalid_argument("term: cycles must be ordered by smallest element");
        prev_min = cyc.front();
        const std::size_t expected = cyc.size() == 1 ? 0 : cyc.size();
        if (choices_[c].size() != expected)
            throw std::invalid_argument("term: choice vector length must match cycle length");
        total += cyc.size();
    }
    n_ = total;
    // The cycles must partition 1..n; from_cycles performs that validation.
    (void)Permutation::from_cycles(n_, cycles_);
}

Permutation TermDescriptor::permutation() const { return Permutation::from_cycles(n_, cycles_); }

bool TermDescriptor::has_even_b_per_cycle() const {
    for (const auto& ch : choices_) {
        const auto b_count = std::count(ch.begin(), ch.end(), VarKind::B);
        if (b_count % 2 != 0) return false;
    }
    return true;
}

namespace {

int top_position(int label) { return label; }

int bottom_position(std::size_t n, int label, Labeling lab) {
    const int nn = static_cast<int>(n);
    return nn + (lab == Labeling::F ? label : nn + 1 - label);
}

int label_of_position(std::size_t n, int pos, Labeling lab) {
    const int nn = static_cast<int>(n);
    if (pos <= nn) return pos;
    return lab == Labeling::F ? pos - nn : 2 * nn + 1 - pos;
}

}  // namespace

TermDescriptor diagram_to_term(const BrauerDiagram& d, Labeling lab) {
    const std::size_t n = d.size();
    const int nn = static_cast<int>(n);
    std::vector<bool> in_cycle(n, false);
    std::vector<std::vector<int>> cycles;
    std::vector<std::vector<VarKind>> choices;

    for (int start = 1; start <= nn; ++start) {
        if (in_cycle[static_cast<std::size_t>(start) - 1]) continue;
        std::vector<int> cyc;
        std::vector<VarKind> ch;
        // Current vertex whose edge is consumed next; the walk begins at the
        // top copy of the cycle's smallest label.
        int vertex = top_position(start);
        int label = start;
        while (true) {
            in_cycle[static_cast<std::size_t>(label) - 1] = true;
            cyc.push_back(label);
            const int next_vertex = d.partner(vertex);
            const bool same_row = d.is_top(vertex) == d.is_top(next_vertex);
            const int next_label = label_of_position(n, next_vertex, lab);
            if (next_label == start && cyc.size() == 1) break;  // fixed point, implicit a[i,i]
            ch.push_back(same_row ? VarKind::B : VarKind::A);
            if (next_label == start) break;
            label = next_label;
            // Hop to the other copy of the label just reached.
            vertex = d.is_top(next_vertex) ? bottom_position(n, next_label, lab)
                                           : top_position(next_label);
        }
        cycles.push_back(std::move(cyc));
        choices.push_back(std::move(ch));
    }
    return TermDescriptor(std::move(cycles), std::move(choices));
}

BrauerDiagram term_to_diagram(const TermDescriptor& t, Labeling lab) {
    if (!t.has_even_b_per_cycle())
        throw std::invalid_argument("term_to_diagram: odd number of B factors in a cycle");
    const std::size_t n = t.size();
    std::vector<int> partner(2 * n, 0);
    auto join = [&](int v, int w) {
        partner[static_cast<std::size_t>(v) - 1] = w;
        partner[static_cast<std::size_t>(w) - 1] = v;
    };

    for (std::size_t c = 0; c < t.cycles().size(); ++c) {
        const auto& cyc = t.cycles()[c];
        const auto& ch = t.choices()[c];
        if (cyc.size() == 1) {
            join(top_position(cyc[0]), bottom_position(n, cyc[0], lab));
            continue;
        }
        bool on_top = true;  // row of the current label's active copy
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int from = cyc[k];
            const int to = cyc[(k + 1) % cyc.size()];
            const bool last = k + 1 == cyc.size();
            if (ch[k] == VarKind::A) {
                // Arc to the opposite row; the walk resumes on the same row.
                if (on_top)
                    join(top_position(from), bottom_position(n, to, lab));
                else
                    join(bottom_position(n, from, lab), top_position(to));
                if (last && !on_top)
                    throw std::invalid_argument("term_to_diagram: walk must close on the bottom row");
            } else {
                // Cup or cap on the current row; the walk resumes opposite.
                if (on_top)
                    join(top_position(from), top_position(to));
                else
                    join(bottom_position(n, from, lab), bottom_position(n, to, lab));
                if (last && on_top)
                    throw std::invalid_argument("term_to_diagram: walk must close on the bottom row");
                on_top = !on_top;
            }
        }
    }
    return BrauerDiagram(std::move(partner));
}

Monomial term_monomial(const TermDescriptor& t) {
    Monomial m;
    for (std::size_t c = 0; c < t.cycles().size(); ++c) {
        const auto& cyc = t.cycles()[c];
        if (cyc.size() == 1) {
            m.multiply_var(IndexedVar(VarKind::A, cyc[0], cyc[0]));
            continue;
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int from = cyc[k];
            const int to = cyc[(k + 1) % cyc.size()];
            if (t.choices()[c][k] == VarKind::A)
                m.multiply_var(IndexedVar::a(from, to));
            else
                m.multiply_var(IndexedVar::b(from, to));
        }
    }
    return m;
}

CycleSignature cycle_signature(const std::vector<int>& cycle) {
    CycleSignature s;
    s.beta.reserve(cycle.size());
    s.gamma.reserve(cycle.size());
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        const bool ascending = cycle[k] < cycle[(k + 1) % cycle.size()];
        s.beta.emplace_back(ascending ? 1 : -1);
        s.gamma.emplace_back(0, ascending ? 1 : -1);
    }
    return s;
}

GaussianInt sign_of_term(const TermDescriptor& t, Variant variant) {
    GaussianInt sign(inversion_number(t.permutation()) % 2 == 0 ? 1 : -1);
    for (std::size_t c = 0; c < t.cycles().size(); ++c) {
        if (t.choices()[c].empty()) continue;  // fixed point
        const CycleSignature s = cycle_signature(t.cycles()[c]);
        for (std::size_t k = 0; k < t.choices()[c].size(); ++k) {
            if (t.choices()[c][k] != VarKind::B) continue;
            sign *= variant == Variant::F ? s.beta[k] : s.gamma[k];
        }
    }
    return sign;
}

namespace {

void visit_partitions_into_cycles(std::size_t n, std::vector<std::vector<int>>& cycles,
                                  std::vector<bool>& used,
                                  const std::function<void(const std::vector<std::vector<int>>&)>& fn);

// Extends the last cycle with every arrangement of unused elements, also
// closing it at each length; the first element stays the cycle minimum.
void extend_cycle(std::size_t n, std::vector<std::vector<int>>& cycles, std::vector<bool>& used,
                  const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    visit_partitions_into_cycles(n, cycles, used, fn);  // close the current cycle
    for (std::size_t v = 1; v <= n; ++v) {
        if (used[v - 1]) continue;
        used[v - 1] = true;
        cycles.back().push_back(static_cast<int>(v));
        extend_cycle(n, cycles, used, fn);
        cycles.back().pop_back();
        used[v - 1] = false;
    }
}

void visit_partitions_into_cycles(std::size_t n, std::vector<std::vector<int>>& cycles,
                                  std::vector<bool>& used,
                                  const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::size_t smallest = 0;
    for (std::size_t v = 1; v <= n; ++v) {
        if (!used[v - 1]) {
            smallest = v;
            break;
        }
    }
    if (smallest == 0) {
        fn(cycles);
        return;
    }
    used[smallest - 1] = true;
    cycles.push_back({static_cast<int>(smallest)});
    extend_cycle(n, cycles, used, fn);
    cycles.pop_back();
    used[smallest - 1] = false;
}

void visit_even_choices(const std::vector<std::vector<int>>& cycles,
                        std::vector<std::vector<VarKind>>& choices, std::size_t c,
                        const std::function<void(const TermDescriptor&)>& fn,
                        std::uint64_t& count) {
    if (c == cycles.size()) {
        fn(TermDescriptor(cycles, choices));
        ++count;
        return;
    }
    const std::size_t len = cycles[c].size();
    if (len == 1) {
        choices.push_back({});
        visit_even_choices(cycles, choices, c + 1, fn, count);
        choices.pop_back();
        return;
    }
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        std::vector<VarKind> ch(len);
        for (std::size_t k = 0; k < len; ++k)
            ch[k] = (mask >> k) & 1u ? VarKind::B : VarKind::A;
        choices.push_back(std::move(ch));
        visit_even_choices(cycles, choices, c + 1, fn, count);
        choices.pop_back();
    }
}

}  // namespace

std::uint64_t for_each_term_descriptor(std::size_t n,
                                       const std::function<void(const TermDescriptor&)>& fn) {
    if (n > 16) throw std::out_of_range("for_each_term_descriptor: n too large");
    std::uint64_t count = 0;
    std::vector<std::vector<int>> cycles;
    std::vector<bool> used(n, false);
    visit_partitions_into_cycles(n, cycles, used, [&](const std::vector<std::vector<int>>& cyc) {
        std::vector<std::vector<VarKind>> choices;
        visit_even_choices(cyc, choices, 0, fn, count);
    });
    return count;
}

std::string term_to_json(const TermDescriptor& t) {
    nlohmann::json j;
    j["cycles"] = t.cycles();
    j["b_transitions"] = nlohmann::json::array();
    for (std::size_t c = 0; c < t.choices().size(); ++c)
        for (std::size_t k = 0; k < t.choices()[c].size(); ++k)
            if (t.choices()[c][k] == VarKind::B) j["b_transitions"].push_back({c, k});
    return j.dump();
}

TermDescriptor term_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("cycles") || !j.contains("b_transitions"))
        throw std::invalid_argument("term JSON must have fields \"cycles\" and \"b_transitions\"");
    std::vector<std::vector<int>> cycles = j.at("cycles").get<std::vector<std::vector<int>>>();
    std::vector<std::vector<VarKind>> choices;
    choices.reserve(cycles.size());
    for (const auto& cyc : cycles)
        choices.emplace_back(cyc.size() == 1 ? 0 : cyc.size(), VarKind::A);
    for (const auto& bt : j.at("b_transitions")) {
        if (!bt.is_array() || bt.size() != 2)
            throw std::invalid_argument("term JSON b_transition must be [cycle_idx, pos_idx]");
        const std::size_t c = bt[0].get<std::size_t>();
        const std::size_t k = bt[1].get<std::size_t>();
        if (c >= choices.size() || k >= choices[c].size())
            throw std::invalid_argument("term JSON b_transition out of range");
        choices[c][k] = VarKind::B;
    }
    return TermDescriptor(std::move(cycles), std::move(choices));
}

}  // namespace brauerdet
