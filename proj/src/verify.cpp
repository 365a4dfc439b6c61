#include "brauerdet/verify.hpp"

#include <stdexcept>

#include <json.hpp>

namespace brauerdet {

std::optional<PolyMismatch> compare_polynomials(const Polynomial& lhs, const Polynomial& rhs) {
    auto il = lhs.terms().begin();
    auto ir = rhs.terms().begin();
    while (il != lhs.terms().end() || ir != rhs.terms().end()) {
        if (ir == rhs.terms().end() || (il != lhs.terms().end() && il->first < ir->first)) {
            return PolyMismatch{il->first.to_string(), il->second.to_string(), "0"};
        }
        if (il == lhs.terms().end() || ir->first < il->first) {
            return PolyMismatch{ir->first.to_string(), "0", ir->second.to_string()};
        }
        if (il->second != ir->second) {
            return PolyMismatch{il->first.to_string(), il->second.to_string(),
                                ir->second.to_string()};
        }
        ++il;
        ++ir;
    }
    return std::nullopt;
}

TheoremReport run_verify_theorem(std::size_t n, Variant v, unsigned threads) {
    if (n < 1) throw std::invalid_argument("verify-theorem: n must be at least 1");
    TheoremReport r;
    r.n = n;
    r.variant = v;
    r.diagrams = diagram_count(n);
    const Polynomial diagram_side = brauer_determinant(n, v, threads);
    const Polynomial leibniz_side = leibniz_determinant(SymbolicMatrix::generic(n, v), threads);
    r.distinct_monomials = leibniz_side.term_count();
    r.mismatch = compare_polynomials(diagram_side, leibniz_side);
    r.ok = !r.mismatch.has_value();
    return r;
}

std::string TheoremReport::summary() const {
    std::string s;
    if (ok) {
        s = "OK, " + std::to_string(diagrams) + " diagrams, " +
            std::to_string(distinct_monomials) + " distinct monomials";
    } else {
        s = "FAIL, first counterexample: " + mismatch->monomial +
            ": brauer=" + mismatch->lhs_coefficient + " leibniz=" + mismatch->rhs_coefficient;
    }
    return s;
}

std::string TheoremReport::to_json() const {
    nlohmann::json j;
    j["check"] = "verify-theorem";
    j["n"] = n;
    j["variant"] = std::string(1, variant_char(variant));
    j["ok"] = ok;
    j["diagrams"] = diagrams;
    j["distinct_monomials"] = distinct_monomials;
    if (mismatch) {
        j["counterexample"] = {{"monomial", mismatch->monomial},
                               {"brauer_coefficient", mismatch->lhs_coefficient},
                               {"leibniz_coefficient", mismatch->rhs_coefficient}};
    }
    return j.dump();
}

BijectionReport run_verify_bijection(std::size_t n) {
    if (n < 1) throw std::invalid_argument("verify-bijection: n must be at least 1");
    BijectionReport r;
    r.n = n;
    r.ok = true;

    for (const Labeling lab : {Labeling::F, Labeling::B}) {
        r.diagrams_checked = 0;
        for_each_diagram(n, [&](const BrauerDiagram& d) {
            if (!r.ok) return;
            const TermDescriptor t = diagram_to_term(d, lab);
            if (term_to_diagram(t, lab) != d || term_monomial(t) != weight(d, lab)) {
                r.ok = false;
                nlohmann::json j;
                j["kind"] = "diagram_roundtrip";
                j["labeling"] = std::string(1, variant_char(lab));
                j["diagram"] = nlohmann::json::parse(diagram_to_json(d));
                j["term"] = nlohmann::json::parse(term_to_json(t));
                r.failure = j.dump();
            }
            ++r.diagrams_checked;
        });
        if (!r.ok) return r;

        r.descriptors_checked = for_each_term_descriptor(n, [&](const TermDescriptor& t) {
            if (!r.ok) return;
            const BrauerDiagram d = term_to_diagram(t, lab);
            if (diagram_to_term(d, lab) != t) {
                r.ok = false;
                nlohmann::json j;
                j["kind"] = "term_roundtrip";
                j["labeling"] = std::string(1, variant_char(lab));
                j["term"] = nlohmann::json::parse(term_to_json(t));
                j["diagram"] = nlohmann::json::parse(diagram_to_json(d));
                r.failure = j.dump();
            }
        });
        if (!r.ok) return r;
    }
    return r;
}

std::string BijectionReport::summary() const {
    if (!ok) return "FAIL, " + failure;
    return "OK, " + std::to_string(diagrams_checked) + " diagrams and " +
           std::to_string(descriptors_checked) + " terms round-trip under each labeling";
}

std::string BijectionReport::to_json() const {
    nlohmann::json j;
    j["check"] = "verify-bijection";
    j["n"] = n;
    j["ok"] = ok;
    j["diagrams_checked"] = diagrams_checked;
    j["descriptors_checked"] = descriptors_checked;
    if (!ok) j["counterexample"] = nlohmann::json::parse(failure);
    return j.dump();
}

namespace {

void record_lemma_failure(LemmaReport& r, const std::string& kind, const BrauerDiagram& d,
                          const std::string& detail) {
    r.ok = false;
    nlohmann::json j;
    j["kind"] = kind;
    j["diagram"] = nlohmann::json::parse(diagram_to_json(d));
    j["detail"] = detail;
    r.failure = j.dump();
}

BrauerDiagram rewire(const BrauerDiagram& d, const std::vector<std::pair<int, int>>& joins) {
    std::vector<int> partner = d.partners();
    for (const auto& [v, w] : joins) {
        partner[static_cast<std::size_t>(v) - 1] = w;
        partner[static_cast<std::size_t>(w) - 1] = v;
    }
    return BrauerDiagram(std::move(partner));
}

// Checks the four crossing-parity surgeries on every applicable edge pair of
// d; returns false (and fills the report) on the first violation.
bool check_surgeries(LemmaReport& r, const BrauerDiagram& d) {
    const int n = static_cast<int>(d.size());
    const bool base_odd = crossing_number(d) % 2 != 0;
    std::vector<std::pair<int, int>> cups, caps, arcs;  // positions
    for (int v = 1; v <= 2 * n; ++v) {
        const int w = d.partner(v);
        if (w < v) continue;
        if (w <= n)
            cups.emplace_back(v, w);
        else if (v > n)
            caps.emplace_back(v - n, w - n);
        else
            arcs.emplace_back(v, w - n);
    }

    auto parity_after = [&](const std::vector<std::pair<int, int>>& joins) {
        return crossing_number(rewire(d, joins)) % 2 != 0;
    };

    // (a)/(b): cup (i,j) and cap (k,l) replaced by parallel arcs (i,k),(j,l)
    // (same parity) or by crossed arcs (i,l),(j,k) (opposite parity).
    for (const auto& [i, j] : cups) {
        for (const auto& [k, l] : caps) {
            ++r.surgeries_checked;
            if (parity_after({{i, n + k}, {j, n + l}}) != base_odd) {
                record_lemma_failure(r, "surgery_parallel_arcs", d, "parity changed");
                return false;
            }
            ++r.surgeries_checked;
            if (parity_after({{i, n + l}, {j, n + k}}) == base_odd) {
                record_lemma_failure(r, "surgery_crossed_arcs", d, "parity kept");
                return false;
            }
        }
    }

    // (c): cup (u1,u2) with an arc leaving from strictly inside its span,
    // re-attached as cup (t,u2) and arc (u1,b): opposite parity.
    for (const auto& [u1, u2] : cups) {
        for (const auto& [t, b] : arcs) {
            if (!(u1 < t && t < u2)) continue;
            ++r.surgeries_checked;
            if (parity_after({{t, u2}, {u1, n + b}}) == base_odd) {
                record_lemma_failure(r, "surgery_cup_arc", d, "parity kept");
                return false;
            }
        }
    }

    // (d): nested cups (i,l),(j,k) replaced by interleaved cups (i,k),(j,l):
    // opposite parity.
    for (std::size_t x = 0; x < cups.size(); ++x) {
        for (std::size_t y = 0; y < cups.size(); ++y) {
            if (x == y) continue;
            const auto& [i, l] = cups[x];
            const auto& [j, k] = cups[y];
            if (!(i < j && j < k && k < l)) continue;
            ++r.surgeries_checked;
            if (parity_after({{i, k}, {j, l}}) == base_odd) {
                record_lemma_failure(r, "surgery_nested_cups", d, "parity kept");
                return false;
            }
        }
    }
    return true;
}

}  // namespace

LemmaReport run_verify_lemmas(std::size_t n) {
    if (n < 1) throw std::invalid_argument("verify-lemmas: n must be at least 1");
    LemmaReport r;
    r.n = n;
    r.ok = true;
    const unsigned long all_pairs = static_cast<unsigned long>(n * (n - 1) / 2);
    const SymbolicMatrix matrices[2] = {SymbolicMatrix::generic(n, Variant::F),
                                        SymbolicMatrix::generic(n, Variant::B)};

    for_each_diagram(n, [&](const BrauerDiagram& d) {
        if (!r.ok) return;
        const unsigned long chi = crossing_number(d);
        const EdgeList ef = edge_list(d, Labeling::F);
        const bool arc_only = ef.cups.empty() && ef.caps.empty();

        for (const Labeling lab : {Labeling::F, Labeling::B}) {
            const TermDescriptor t = diagram_to_term(d, lab);
            const Permutation perm = t.permutation();

            if (arc_only) {
                const unsigned long inv = inversion_number(perm);
                const bool good = lab == Labeling::F ? inv == chi : inv + chi == all_pairs;
                if (!good) {
                    record_lemma_failure(r, "arc_only_inversions", d,
                                         "labeling " + std::string(1, variant_char(lab)));
                    return;
                }
                ++r.arc_only_checked;
            }

            const Permutation swapped_perm =
                diagram_to_term(swap_rows(d, lab), lab).permutation();
            if (swapped_perm != perm.inverse()) {
                record_lemma_failure(r, "row_swap_inverse", d,
                                     "labeling " + std::string(1, variant_char(lab)));
                return;
            }
            ++r.inverse_checked;

            // Per-term sign coherence: the closed-form sign, the coefficient
            // read from the matrix entries, and the crossing parity agree.
            const Variant variant = lab;
            const GaussianInt sign = sign_of_term(t, variant);
            const GaussianInt from_matrix =
                term_value_from_matrix(matrices[variant == Variant::B ? 1 : 0], t);
            int expected = chi % 2 == 0 ? 1 : -1;
            if (variant == Variant::B && (n * (n - 1) / 2) % 2 != 0) expected = -expected;
            if (sign != from_matrix || sign != GaussianInt(expected)) {
                record_lemma_failure(r, "term_sign", d,
                                     "variant " + std::string(1, variant_char(variant)));
                return;
            }
            ++r.sign_checked;
        }

        if (!check_surgeries(r, d)) return;
    });
    return r;
}

std::string LemmaReport::summary() const {
    if (!ok) return "FAIL, " + failure;
    return "OK, " + std::to_string(arc_only_checked) + " arc-only inversion checks, " +
           std::to_string(inverse_checked) + " row-swap inverses, " +
           std::to_string(sign_checked) + " term signs, " + std::to_string(surgeries_checked) +
           " edge surgeries";
}

std::string LemmaReport::to_json() const {
    nlohmann::json j;
    j["check"] = "verify-lemmas";
    j["n"] = n;
    j["ok"] = ok;
    j["arc_only_checked"] = arc_only_checked;
    j["inverse_checked"] = inverse_checked;
    j["sign_checked"] = sign_checked;
    j["surgeries_checked"] = surgeries_checked;
    if (!ok) j["counterexample"] = nlohmann::json::parse(failure);
    return j.dump();
}

std::string cayley_summary(const CayleyReport& r) {
    if (r.holds)
        return "OK, antisymmetric determinant of size " + std::to_string(r.n) +
               (r.n % 2 == 0 ? " equals the squared pfaffian (" +
                                   std::to_string(r.expected.term_count()) + " monomials)"
                             : " vanishes");
    const auto mismatch = compare_polynomials(r.det, r.expected);
    return "FAIL, first counterexample: " + mismatch->monomial + ": det=" +
           mismatch->lhs_coefficient + " expected=" + mismatch->rhs_coefficient;
}

std::string cayley_to_json(const CayleyReport& r) {
    nlohmann::json j;
    j["check"] = "pfaffian-check";
    j["n"] = r.n;
    j["ok"] = r.holds;
    j["det_monomials"] = r.det.term_count();
    j["expected_monomials"] = r.expected.term_count();
    if (!r.holds) {
        const auto mismatch = compare_polynomials(r.det, r.expected);
        j["counterexample"] = {{"monomial", mismatch->monomial},
                               {"det_coefficient", mismatch->lhs_coefficient},
                               {"expected_coefficient", mismatch->rhs_coefficient}};
    }
    return j.dump();
}

}  // namespace brauerdet
