#include "brauerdet/polynomial.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace brauerdet {

IndexedVar::IndexedVar(VarKind kind, int i, int j) : kind_(kind) {
    if (i < 1 || j < 1 || i > 255 || j > 255)
        throw std::invalid_argument("IndexedVar: labels must be in 1..255");
    if (kind == VarKind::A ? i > j : i >= j)
        throw std::invalid_argument(kind == VarKind::A
                                        ? "IndexedVar: a[i,j] requires i <= j"
                                        : "IndexedVar: b[i,j] requires i < j");
    i_ = static_cast<std::uint8_t>(i);
    j_ = static_cast<std::uint8_t>(j);
}

IndexedVar IndexedVar::a(int i, int j) {
    return IndexedVar(VarKind::A, std::min(i, j), std::max(i, j));
}

IndexedVar IndexedVar::b(int i, int j) {
    return IndexedVar(VarKind::B, std::min(i, j), std::max(i, j));
}

std::string IndexedVar::to_string() const {
    std::string s(kind_ == VarKind::A ? "a[" : "b[");
    s += std::to_string(i_);
    s += ',';
    s += std::to_string(j_);
    s += ']';
    return s;
}

Monomial Monomial::from_sorted_factors(std::vector<VarPow> factors) {
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].exp == 0)
            throw std::invalid_argument("monomial: zero exponent");
        if (k > 0 && !(factors[k - 1].var < factors[k].var))
            throw std::invalid_argument("monomial: factors not sorted by variable");
    }
    Monomial m;
    m.factors_ = std::move(factors);
    return m;
}

void Monomial::multiply_var(const IndexedVar& v, unsigned exp) {
    if (exp == 0) return;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const VarPow& f, const IndexedVar& w) { return f.var < w; });
    if (it != factors_.end() && it->var == v)
        it->exp += exp;
    else
        factors_.insert(it, VarPow{v, exp});
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r = *this;
    for (const VarPow& f : o.factors_) r.multiply_var(f.var, f.exp);
    return r;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const VarPow& f : factors_) d += f.exp;
    return d;
}

unsigned Monomial::degree_of_kind(VarKind k) const {
    unsigned d = 0;
    for (const VarPow& f : factors_)
        if (f.var.kind() == k) d += f.exp;
    return d;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (k) s += '*';
        s += factors_[k].var.to_string();
        if (factors_[k].exp > 1) {
            s += '^';
            s += std::to_string(factors_[k].exp);
        }
    }
    return s;
}

namespace {

// Lexicographic comparison of the expanded variable sequences (each variable
// written exp times), without materializing them; shorter prefixes first.
bool factors_less(std::span<const VarPow> a, std::span<const VarPow> b) {
    std::size_t ia = 0, ib = 0;
    unsigned ea = 0, eb = 0;  // repetitions of the current factor already consumed
    while (true) {
        if (ia == a.size()) return ib != b.size();
        if (ib == b.size()) return false;
        if (a[ia].var != b[ib].var) return a[ia].var < b[ib].var;
        const unsigned step = std::min(a[ia].exp - ea, b[ib].exp - eb);
        ea += step;
        eb += step;
        if (ea == a[ia].exp) {
            ++ia;
            ea = 0;
        }
        if (eb == b[ib].exp) {
            ++ib;
            eb = 0;
        }
    }
}

}  // namespace

bool operator<(const Monomial& x, const Monomial& y) {
    return factors_less(x.factors(), y.factors());
}

bool operator==(const Monomial& x, const Monomial& y) {
    const auto& a = x.factors_;
    const auto& b = y.factors_;
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].var != b[k].var || a[k].exp != b[k].exp) return false;
    return true;
}

Polynomial Polynomial::constant(GaussianInt c) { return term(Monomial{}, std::move(c)); }

Polynomial Polynomial::variable(const IndexedVar& v) { return term(Monomial(v), GaussianInt(1)); }

Polynomial Polynomial::term(Monomial m, GaussianInt c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

Polynomial Polynomial::from_terms(std::vector<std::pair<Monomial, GaussianInt>> terms) {
    const auto by_monomial = [](const auto& a, const auto& b) { return a.first < b.first; };
    if (!std::is_sorted(terms.begin(), terms.end(), by_monomial))
        std::sort(terms.begin(), terms.end(), by_monomial);
    Polynomial p;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        GaussianInt c = std::move(terms[k].second);
        while (k + 1 < terms.size() && terms[k + 1].first == terms[k].first) {
            ++k;
            c += terms[k].second;
        }
        if (!c.is_zero())
            p.terms_.emplace_hint(p.terms_.end(), std::move(terms[k].first), std::move(c));
    }
    return p;
}

void Polynomial::add_term(const Monomial& m, const GaussianInt& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const GaussianInt* Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    r.negate();
    return r;
}

Polynomial& Polynomial::negate() {
    for (auto& [m, c] : terms_) c = -c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

namespace {

// Complex numbers have no natural sign; for printing we pull out -1 when the
// real part is negative, or the real part is zero and the imaginary part is.
bool print_negated(const GaussianInt& c) {
    return c.re() < 0 || (c.re() == 0 && c.im() < 0);
}

void append_coefficient(std::string& out, const GaussianInt& c, bool with_vars) {
    if (c.is_real()) {
        out += c.re().get_str();
        if (with_vars) out += '*';
        return;
    }
    if (c.re() == 0) {
        if (c.im() != 1) {
            out += c.im().get_str();
            out += '*';
        }
        out += 'I';
        if (with_vars) out += '*';
        return;
    }
    // Mixed coefficients need parentheses next to a variable product.
    if (with_vars) out += '(';
    out += c.to_string();
    if (with_vars) out += ")*";
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = print_negated(c);
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const GaussianInt mag = neg ? -c : c;
        const bool unit = mag == GaussianInt(1);
        if (m.is_one()) {
            append_coefficient(out, mag, false);
        } else {
            if (!unit) append_coefficient(out, mag, true);
            out += m.to_string();
        }
    }
    return out;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

std::size_t count_distinct_terms(const Polynomial& p) { return p.term_count(); }

}  // namespace brauerdet
