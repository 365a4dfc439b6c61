#include "brauerdet/matrices.hpp"

#include <algorithm>
#include <atomic>
#include <span>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

namespace brauerdet {

SymbolicMatrix SymbolicMatrix::generic(std::size_t n, Variant v) {
    if (n < 1) throw std::invalid_argument("matrix: size must be at least 1");
    const GaussianInt upper = v == Variant::F ? GaussianInt(1) : GaussianInt(0, 1);
    SymbolicMatrix m;
    m.kind_ = v == Variant::F ? MatrixKind::F : MatrixKind::B;
    m.entries_.resize(n);
    for (std::size_t i = 1; i <= n; ++i) {
        m.entries_[i - 1].resize(n);
        for (std::size_t j = 1; j <= n; ++j) {
            const int ii = static_cast<int>(i);
            const int jj = static_cast<int>(j);
            Polynomial e;
            if (i == j) {
                e = Polynomial::variable(IndexedVar(VarKind::A, ii, jj));
            } else {
                e = Polynomial::variable(IndexedVar::a(ii, jj));
                e += Polynomial::term(Monomial(IndexedVar::b(ii, jj)), i < j ? upper : -upper);
            }
            m.entries_[i - 1][j - 1] = std::move(e);
        }
    }
    return m;
}

SymbolicMatrix SymbolicMatrix::from_entries(std::vector<std::vector<Polynomial>> entries) {
    const std::size_t n = entries.size();
    if (n == 0) throw std::invalid_argument("matrix: size must be at least 1");
    for (const auto& row : entries)
        if (row.size() != n) throw std::invalid_argument("matrix: grid must be square");
    SymbolicMatrix m;
    m.kind_ = MatrixKind::Custom;
    m.entries_ = std::move(entries);
    return m;
}

SymbolicMatrix SymbolicMatrix::with_a_set_to_zero() const {
    SymbolicMatrix m;
    m.kind_ = MatrixKind::Custom;
    m.entries_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) {
        m.entries_[i].resize(size());
        for (std::size_t j = 0; j < size(); ++j) {
            Polynomial e;
            for (const auto& [mono, coeff] : entries_[i][j].terms())
                if (mono.degree_of_kind(VarKind::A) == 0) e.add_term(mono, coeff);
            m.entries_[i][j] = std::move(e);
        }
    }
    return m;
}

namespace {

unsigned effective_threads(unsigned threads, std::size_t tasks) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(threads, tasks));
}

struct FactorsHash {
    using is_transparent = void;
    std::size_t operator()(std::span<const VarPow> f) const {
        std::size_t h = 1469598103934665603ull;
        for (const VarPow& p : f) {
            h = (h ^ static_cast<std::size_t>(p.var.kind())) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(p.var.i())) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(p.var.j())) * 1099511628211ull;
            h = (h ^ p.exp) * 1099511628211ull;
        }
        return h;
    }
    std::size_t operator()(const Monomial& m) const {
        return (*this)(std::span<const VarPow>(m.factors()));
    }
};

struct FactorsEqual {
    using is_transparent = void;
    static bool eq(std::span<const VarPow> a, std::span<const VarPow> b) {
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].var != b[k].var || a[k].exp != b[k].exp) return false;
        return true;
    }
    bool operator()(const Monomial& a, const Monomial& b) const {
        return eq(a.factors(), b.factors());
    }
    bool operator()(const Monomial& a, std::span<const VarPow> b) const {
        return eq(a.factors(), b);
    }
    bool operator()(std::span<const VarPow> a, const Monomial& b) const {
        return eq(a, b.factors());
    }
};

// Expansion-time accumulator: unordered while summing (single bucket probe
// per term), converted once into the polynomial's ordered normal form.
// Cancelled coefficients are left as explicit zeros and dropped on
// conversion.
class ExpansionAccumulator {
public:
    void reserve(std::size_t count) { terms_.reserve(count); }

    void accumulate(std::span<const VarPow> factors, const GaussianInt& c, bool negate) {
        auto it = terms_.find(factors);
        if (it == terms_.end()) {
            terms_.emplace(Monomial::from_sorted_factors({factors.begin(), factors.end()}),
                           negate ? -c : c);
        } else if (negate) {
            it->second -= c;
        } else {
            it->second += c;
        }
    }

    void merge_into(ExpansionAccumulator& target) {
        while (!terms_.empty()) {
            auto node = terms_.extract(terms_.begin());
            auto it = target.terms_.find(node.key());
            if (it == target.terms_.end())
                target.terms_.insert(std::move(node));
            else
                it->second += node.mapped();
        }
    }

    Polynomial take_polynomial() {
        std::vector<std::pair<Monomial, GaussianInt>> terms;
        terms.reserve(terms_.size());
        while (!terms_.empty()) {
            auto node = terms_.extract(terms_.begin());
            if (!node.mapped().is_zero())
                terms.emplace_back(std::move(node.key()), std::move(node.mapped()));
        }
        return Polynomial::from_terms(std::move(terms));
    }

private:
    std::unordered_map<Monomial, GaussianInt, FactorsHash, FactorsEqual> terms_;
};

// Fast accumulator for expansions whose monomials have total degree <= 8
// over labels <= 8: the expanded variable sequence packs into one 64-bit
// key, one byte per degree unit, most significant first, zero padded. Packed
// keys compare exactly like the canonical monomial order, so conversion back
// to normal form is a plain integer sort.
constexpr std::size_t kPackDegree = 8;
constexpr int kPackLabel = 8;

inline unsigned var_code(VarKind kind, int i, int j) {
    return 1u + ((kind == VarKind::B ? 1u : 0u) << 6) + (static_cast<unsigned>(i - 1) << 3) +
           static_cast<unsigned>(j - 1);
}

bool packable(const Monomial& m) {
    if (m.degree() > kPackDegree) return false;
    for (const VarPow& f : m.factors())
        if (f.var.j() > kPackLabel) return false;
    return true;
}

std::uint64_t pack_factors(std::span<const VarPow> factors) {
    std::uint64_t key = 0;
    for (const VarPow& f : factors) {
        const std::uint64_t code = var_code(f.var.kind(), f.var.i(), f.var.j());
        for (unsigned e = 0; e < f.exp; ++e) key = (key << 8) | code;
    }
    unsigned degree = 0;
    for (const VarPow& f : factors) degree += f.exp;
    return key << (8 * (kPackDegree - degree));
}

Monomial unpack_key(std::uint64_t key) {
    Monomial m;
    for (int slot = static_cast<int>(kPackDegree) - 1; slot >= 0; --slot) {
        const unsigned code = static_cast<unsigned>(key >> (8 * slot)) & 0xffu;
        if (code == 0) break;
        const VarKind kind = (code - 1) & 0x40u ? VarKind::B : VarKind::A;
        const int i = static_cast<int>(((code - 1) >> 3) & 7u) + 1;
        const int j = static_cast<int>((code - 1) & 7u) + 1;
        m.multiply_var(IndexedVar(kind, i, j));
    }
    return m;
}

struct KeyHash {
    std::size_t operator()(std::uint64_t x) const {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ull;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

class PackedAccumulator {
public:
    void reserve(std::size_t count) { terms_.reserve(count); }

    void accumulate(std::span<const VarPow> factors, const GaussianInt& c, bool negate) {
        accumulate_key(pack_factors(factors), c, negate);
    }

    void accumulate_key(std::uint64_t key, const GaussianInt& c, bool negate) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, negate ? -c : c);
        } else if (negate) {
            it->second -= c;
        } else {
            it->second += c;
        }
    }

    void merge_into(PackedAccumulator& target) {
        for (auto& [key, c] : terms_) {
            auto it = target.terms_.find(key);
            if (it == target.terms_.end())
                target.terms_.emplace(key, std::move(c));
            else
                it->second += c;
        }
        terms_.clear();
    }

    Polynomial take_polynomial() {
        std::vector<std::pair<std::uint64_t, GaussianInt>> terms;
        terms.reserve(terms_.size());
        while (!terms_.empty()) {
            auto node = terms_.extract(terms_.begin());
            if (!node.mapped().is_zero())
                terms.emplace_back(node.key(), std::move(node.mapped()));
        }
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<Monomial, GaussianInt>> decoded;
        decoded.reserve(terms.size());
        for (auto& [key, c] : terms) decoded.emplace_back(unpack_key(key), std::move(c));
        return Polynomial::from_terms(std::move(decoded));
    }

private:
    std::unordered_map<std::uint64_t, GaussianInt, KeyHash> terms_;
};

// Runs task(index, acc) for every index in [0, task_count) and returns the
// summed accumulators as a polynomial. Exact coefficients make the result
// independent of how tasks land on threads.
template <class Accumulator, class Task>
Polynomial parallel_poly_sum(std::size_t task_count, unsigned threads, std::size_t reserve,
                             const Task& task) {
    threads = effective_threads(threads, task_count);
    if (threads <= 1) {
        Accumulator acc;
        acc.reserve(reserve);
        for (std::size_t t = 0; t < task_count; ++t) task(t, acc);
        return acc.take_polynomial();
    }
    struct alignas(64) PaddedAcc {  // keep per-thread headers off shared cache lines
        Accumulator acc;
    };
    std::vector<PaddedAcc> partial(threads);
    for (auto& p : partial) p.acc.reserve(reserve / threads);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t t = next.fetch_add(1); t < task_count; t = next.fetch_add(1))
                task(t, partial[w].acc);
        });
    }
    for (auto& th : pool) th.join();
    for (unsigned w = 1; w < threads; ++w) partial[w].acc.merge_into(partial[0].acc);
    return partial[0].acc.take_polynomial();
}

// Depth-first Leibniz expansion: one branch per unused column per entry
// term, maintaining the running monomial, coefficient and inversion parity.
// Coefficients that are powers of I (the only ones the generic matrices
// carry) are tracked as a phase, so the hot path never touches bignums.
template <class Accumulator>
class LeibnizExpander {
public:
    LeibnizExpander(const SymbolicMatrix& m, bool with_sign)
        : m_(m), n_(m.size()), with_sign_(with_sign) {
        value_stack_.reserve(n_ + 1);
        value_stack_.emplace_back(1);
        factors_.reserve(2 * n_);
    }

    // Expands all permutations with pi(1) = first_col into acc.
    void expand_first(int first_col, Accumulator& acc) {
        acc_ = &acc;
        descend(1, first_col, 0u, false);
    }

private:
    // I^phase for phase 0..3.
    static const GaussianInt& unit(int phase) {
        static const GaussianInt units[4] = {GaussianInt(1), GaussianInt(0, 1), GaussianInt(-1),
                                             GaussianInt(0, -1)};
        return units[phase];
    }

    static int unit_phase(const GaussianInt& c) {
        if (c.im() == 0) {
            if (c.re() == 1) return 0;
            if (c.re() == -1) return 2;
        } else if (c.re() == 0) {
            if (c.im() == 1) return 1;
            if (c.im() == -1) return 3;
        }
        return -1;
    }

    static GaussianInt rotated(const GaussianInt& v, int phase) {
        switch (phase & 3) {
            case 1:
                return GaussianInt(-v.im(), v.re());
            case 2:
                return -v;
            case 3:
                return GaussianInt(v.im(), -v.re());
            default:
                return v;
        }
    }

    void descend(int row, int col, std::uint32_t used, bool inv_odd) {
        const Polynomial& e = m_.entry(row, col);
        const std::uint32_t bit = 1u << (col - 1);
        if (with_sign_) {
            const std::uint32_t higher = used & ~(bit | (bit - 1));
            inv_odd ^= static_cast<bool>(__builtin_popcount(higher) & 1);
        }
        used |= bit;
        for (const auto& [mono, coeff] : e.terms()) {
            const bool pushed_value = push(mono, coeff);
            if (static_cast<std::size_t>(row) == n_) {
                if (value_stack_.size() == 1) {
                    acc_->accumulate(factors_, unit(phase_), inv_odd);
                } else {
                    const GaussianInt v = rotated(value_stack_.back(), phase_);
                    acc_->accumulate(factors_, v, inv_odd);
                }
            } else {
                for (int c = 1; c <= static_cast<int>(n_); ++c)
                    if (!(used & (1u << (c - 1)))) descend(row + 1, c, used, inv_odd);
            }
            pop(mono, coeff, pushed_value);
        }
    }

    bool push(const Monomial& mono, const GaussianInt& coeff) {
        const int ph = unit_phase(coeff);
        bool pushed_value = false;
        if (ph >= 0) {
            phase_ = (phase_ + ph) & 3;
        } else {
            value_stack_.push_back(value_stack_.back() * coeff);
            pushed_value = true;
        }
        for (const VarPow& f : mono.factors()) {
            auto it = std::lower_bound(
                factors_.begin(), factors_.end(), f.var,
                [](const VarPow& g, const IndexedVar& v) { return g.var < v; });
            if (it != factors_.end() && it->var == f.var)
                it->exp += f.exp;
            else
                factors_.insert(it, f);
        }
        return pushed_value;
    }

    void pop(const Monomial& mono, const GaussianInt& coeff, bool pushed_value) {
        if (pushed_value)
            value_stack_.pop_back();
        else
            phase_ = (phase_ - unit_phase(coeff)) & 3;
        for (const VarPow& f : mono.factors()) {
            auto it = std::lower_bound(
                factors_.begin(), factors_.end(), f.var,
                [](const VarPow& g, const IndexedVar& v) { return g.var < v; });
            it->exp -= f.exp;
            if (it->exp == 0) factors_.erase(it);
        }
    }

    const SymbolicMatrix& m_;
    std::size_t n_;
    bool with_sign_;
    Accumulator* acc_ = nullptr;
    std::vector<VarPow> factors_;
    std::vector<GaussianInt> value_stack_;
    int phase_ = 0;
};

std::size_t reserve_hint(std::size_t n) {
    std::size_t hint = 1024;
    for (std::size_t k = 0; k < n && hint < (1u << 21); ++k) hint *= 2;
    return std::min<std::size_t>(hint, 1u << 21);
}

// The packed path holds when row products cannot outgrow a packed key: sum
// over rows of the largest entry degree stays within the pack budget and no
// label exceeds it.
bool packable_matrix(const SymbolicMatrix& m) {
    unsigned total = 0;
    for (std::size_t i = 1; i <= m.size(); ++i) {
        unsigned row_max = 0;
        for (std::size_t j = 1; j <= m.size(); ++j) {
            for (const auto& [mono, coeff] : m.entry(static_cast<int>(i), static_cast<int>(j)).terms()) {
                if (!packable(mono)) return false;
                row_max = std::max(row_max, mono.degree());
            }
        }
        total += row_max;
    }
    return total <= kPackDegree;
}

template <class Accumulator>
Polynomial leibniz_expand(const SymbolicMatrix& m, bool with_sign, unsigned threads) {
    return parallel_poly_sum<Accumulator>(m.size(), threads, reserve_hint(m.size()),
                                          [&](std::size_t task, Accumulator& acc) {
                                              LeibnizExpander<Accumulator> ex(m, with_sign);
                                              ex.expand_first(static_cast<int>(task) + 1, acc);
                                          });
}

Polynomial leibniz_sum(const SymbolicMatrix& m, bool with_sign, unsigned threads) {
    const std::size_t n = m.size();
    if (n > 20) throw std::out_of_range("leibniz: matrix too large for exhaustive expansion");
    if (packable_matrix(m)) return leibniz_expand<PackedAccumulator>(m, with_sign, threads);
    return leibniz_expand<ExpansionAccumulator>(m, with_sign, threads);
}

}  // namespace

Polynomial leibniz_determinant(const SymbolicMatrix& m, unsigned threads) {
    return leibniz_sum(m, true, threads);
}

Polynomial permanent(const SymbolicMatrix& m, unsigned threads) {
    return leibniz_sum(m, false, threads);
}

// Walks all matchings on the 2n positions with a fixed first pair, keeping
// the partial matching in scratch arrays; every complete matching is folded
// into the accumulator as (-1)^crossings times its packed weight monomial.
class BrauerSumWalker {
public:
    BrauerSumWalker(std::size_t n, Labeling lab) : n_(static_cast<int>(n)), lab_(lab) {
        used_.assign(2 * n, false);
        edges_.resize(n);
    }

    void expand_first(int first_mate, PackedAccumulator& acc) {
        acc_ = &acc;
        used_[0] = used_[static_cast<std::size_t>(first_mate) - 1] = true;
        edges_[0] = detail::classify_edge(static_cast<std::size_t>(n_), 1, first_mate);
        recurse(1);
    }

private:
    void recurse(int depth) {
        int v = 0;
        for (int p = 2; p <= 2 * n_; ++p) {
            if (!used_[static_cast<std::size_t>(p) - 1]) {
                v = p;
                break;
            }
        }
        if (v == 0) {
            emit();
            return;
        }
        used_[static_cast<std::size_t>(v) - 1] = true;
        for (int w = v + 1; w <= 2 * n_; ++w) {
            if (used_[static_cast<std::size_t>(w) - 1]) continue;
            used_[static_cast<std::size_t>(w) - 1] = true;
            edges_[static_cast<std::size_t>(depth)] =
                detail::classify_edge(static_cast<std::size_t>(n_), v, w);
            recurse(depth + 1);
            used_[static_cast<std::size_t>(w) - 1] = false;
        }
        used_[static_cast<std::size_t>(v) - 1] = false;
    }

    int bottom_label(int pos) const { return lab_ == Labeling::F ? pos : n_ + 1 - pos; }

    void emit() {
        bool odd = false;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                odd ^= detail::edges_cross(edges_[static_cast<std::size_t>(a)],
                                           edges_[static_cast<std::size_t>(b)]);

        unsigned char codes[kPackDegree];
        for (int e = 0; e < n_; ++e) {
            const detail::PosEdge& pe = edges_[static_cast<std::size_t>(e)];
            unsigned code = 0;
            switch (pe.cls) {
                case detail::EdgeClass::Cup:
                    code = var_code(VarKind::B, pe.x, pe.y);
                    break;
                case detail::EdgeClass::Cap: {
                    const int i = bottom_label(pe.x);
                    const int j = bottom_label(pe.y);
                    code = var_code(VarKind::B, std::min(i, j), std::max(i, j));
                    break;
                }
                case detail::EdgeClass::Arc: {
                    const int t = pe.x;
                    const int b = bottom_label(pe.y);
                    code = var_code(VarKind::A, std::min(t, b), std::max(t, b));
                    break;
                }
            }
            codes[e] = static_cast<unsigned char>(code);
        }
        std::sort(codes, codes + n_);
        std::uint64_t key = 0;
        for (int e = 0; e < n_; ++e) key = (key << 8) | codes[e];
        key <<= 8 * (kPackDegree - static_cast<std::size_t>(n_));

        static const GaussianInt one(1);
        acc_->accumulate_key(key, one, odd);
    }

    int n_;
    Labeling lab_;
    PackedAccumulator* acc_ = nullptr;
    std::vector<bool> used_;
    std::vector<detail::PosEdge> edges_;
};

Polynomial brauer_weight_sum(std::size_t n, Labeling lab, unsigned threads) {
    if (n == 0) return Polynomial::constant(GaussianInt(1));  // the empty diagram
    if (n <= kPackDegree) {
        return parallel_poly_sum<PackedAccumulator>(
            2 * n - 1, threads, reserve_hint(n), [&](std::size_t task, PackedAccumulator& acc) {
                BrauerSumWalker walker(n, lab);
                walker.expand_first(static_cast<int>(task) + 2, acc);
            });
    }
    const std::uint64_t total = diagram_count(n);
    // Contiguous index chunks; small enough for balance, deterministic merge.
    const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 64);
    const std::size_t tasks = static_cast<std::size_t>((total + chunk - 1) / chunk);
    static const GaussianInt one(1);
    return parallel_poly_sum<ExpansionAccumulator>(
        tasks, threads, reserve_hint(n), [&](std::size_t task, ExpansionAccumulator& acc) {
            const std::uint64_t lo = task * chunk;
            const std::uint64_t hi = std::min(total, lo + chunk);
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                const BrauerDiagram d = diagram_at(n, idx);
                const bool odd = crossing_number(d) % 2 != 0;
                acc.accumulate(weight(d, lab).factors(), one, odd);
            }
        });
}

Polynomial brauer_determinant(std::size_t n, Variant v, unsigned threads) {
    if (n < 1) throw std::invalid_argument("brauer_determinant: n must be at least 1");
    Polynomial sum = brauer_weight_sum(n, v, threads);
    if (v == Variant::B && (n * (n - 1) / 2) % 2 != 0) sum.negate();
    return sum;
}

void leibniz_term_stream(std::size_t n, Variant v,
                         const std::function<void(const LeibnizTerm&)>& fn) {
    if (n < 1) throw std::invalid_argument("leibniz_term_stream: n must be at least 1");
    if (n > 16) throw std::out_of_range("leibniz_term_stream: n too large");
    const GaussianInt b_upper = v == Variant::F ? GaussianInt(1) : GaussianInt(0, 1);

    std::vector<int> line(n);
    for (std::size_t i = 0; i < n; ++i) line[i] = static_cast<int>(i + 1);
    do {
        const Permutation perm{std::vector<int>(line)};
        const bool inv_odd = inversion_number(perm) % 2 != 0;
        const auto cycles = perm.canonical_cycles();
        std::vector<int> cycle_of(n + 1, 0);
        for (std::size_t c = 0; c < cycles.size(); ++c)
            for (const int v2 : cycles[c]) cycle_of[static_cast<std::size_t>(v2)] = static_cast<int>(c);

        std::vector<int> off_diag;
        for (int i = 1; i <= static_cast<int>(n); ++i)
            if (perm.image(i) != i) off_diag.push_back(i);

        LeibnizTerm term{perm, {}, GaussianInt(1), inv_odd, Monomial{}, true};
        for (std::uint32_t mask = 0; mask < (1u << off_diag.size()); ++mask) {
            term.row_choice.assign(n, VarKind::A);
            term.entry_product = GaussianInt(1);
            term.monomial = Monomial{};
            std::vector<int> b_in_cycle(cycles.size(), 0);
            for (int i = 1; i <= static_cast<int>(n); ++i) {
                const int j = perm.image(i);
                if (i == j) {
                    term.monomial.multiply_var(IndexedVar(VarKind::A, i, i));
                    continue;
                }
                const std::size_t pos = static_cast<std::size_t>(
                    std::lower_bound(off_diag.begin(), off_diag.end(), i) - off_diag.begin());
                const bool pick_b = (mask >> pos) & 1u;
                if (pick_b) {
                    term.row_choice[static_cast<std::size_t>(i) - 1] = VarKind::B;
                    term.monomial.multiply_var(IndexedVar::b(i, j));
                    term.entry_product *= i < j ? b_upper : -b_upper;
                    ++b_in_cycle[static_cast<std::size_t>(cycle_of[static_cast<std::size_t>(i)])];
                } else {
                    term.monomial.multiply_var(IndexedVar::a(i, j));
                }
            }
            term.survives = std::all_of(b_in_cycle.begin(), b_in_cycle.end(),
                                        [](int c) { return c % 2 == 0; });
            fn(term);
        }
    } while (std::next_permutation(line.begin(), line.end()));
}

GaussianInt term_value_from_matrix(const SymbolicMatrix& m, const TermDescriptor& t) {
    if (m.size() != t.size())
        throw std::invalid_argument("term_value_from_matrix: size mismatch");
    GaussianInt value(inversion_number(t.permutation()) % 2 == 0 ? 1 : -1);
    for (std::size_t c = 0; c < t.cycles().size(); ++c) {
        const auto& cyc = t.cycles()[c];
        if (cyc.size() == 1) {
            const Monomial mono(IndexedVar(VarKind::A, cyc[0], cyc[0]));
            const GaussianInt* coeff = m.entry(cyc[0], cyc[0]).coefficient(mono);
            if (!coeff) throw std::invalid_argument("term_value_from_matrix: missing entry part");
            value *= *coeff;
            continue;
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int from = cyc[k];
            const int to = cyc[(k + 1) % cyc.size()];
            const VarKind kind = t.choices()[c][k];
            const Monomial mono(kind == VarKind::A ? IndexedVar::a(from, to)
                                                   : IndexedVar::b(from, to));
            const GaussianInt* coeff = m.entry(from, to).coefficient(mono);
            if (!coeff) throw std::invalid_argument("term_value_from_matrix: missing entry part");
            value *= *coeff;
        }
    }
    return value;
}

Polynomial pfaffian(std::size_t half) {
    if (half > 8) throw std::out_of_range("pfaffian: matching enumeration capped at 16 points");
    Polynomial pf;
    detail::for_each_matching(2 * half, [&](const std::vector<std::pair<int, int>>& chords) {
        unsigned long interleavings = 0;
        for (std::size_t a = 0; a < chords.size(); ++a)
            for (std::size_t b = a + 1; b < chords.size(); ++b) {
                const auto& [i1, j1] = chords[a];
                const auto& [i2, j2] = chords[b];
                if ((i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1))
                    ++interleavings;
            }
        Monomial m;
        for (const auto& [i, j] : chords) m.multiply_var(IndexedVar(VarKind::B, i, j));
        pf.add_term(m, GaussianInt(interleavings % 2 == 0 ? 1 : -1));
    });
    return pf;
}

CayleyReport verify_cayley(std::size_t n, unsigned threads) {
    if (n < 1) throw std::invalid_argument("verify_cayley: n must be at least 1");
    CayleyReport r;
    r.n = n;
    const SymbolicMatrix antisym = SymbolicMatrix::generic(n, Variant::F).with_a_set_to_zero();
    r.det = leibniz_determinant(antisym, threads);
    if (n % 2 == 0) {
        const Polynomial pf = pfaffian(n / 2);
        r.expected = pf * pf;
    }
    r.holds = r.det == r.expected;
    return r;
}

}  // namespace brauerdet
