#include "brauerdet.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "brauerdet/counting.hpp"
#include "brauerdet/matrices.hpp"
#include "brauerdet/render.hpp"
#include "brauerdet/verify.hpp"

using namespace brauerdet;

struct bd_diagram {
    BrauerDiagram value;
};

struct bd_poly {
    Polynomial value;
};

struct bd_report {
    bool ok = false;
    std::string summary;
    std::string json;
};

namespace {

constexpr uint32_t kMaxSymbolicN = 8;  // exhaustive symbolic expansion bound
constexpr uint32_t kMaxCountN = 10;

Variant to_variant(bd_variant v) { return v == BD_VARIANT_F ? Variant::F : Variant::B; }

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bd_status string_result(const std::string& s, char** out) {
    *out = dup_string(s);
    return *out ? BD_OK : BD_ERR_INTERNAL;
}

template <class Fn>
bd_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const nlohmann::json::exception&) {
        return BD_ERR_PARSE;
    } catch (const std::out_of_range&) {
        return BD_ERR_OUT_OF_RANGE;
    } catch (const std::invalid_argument&) {
        return BD_ERR_INVALID_ARGUMENT;
    } catch (...) {
        return BD_ERR_INTERNAL;
    }
}

bd_status check_symbolic_n(uint32_t n) {
    if (n < 1 || n > kMaxSymbolicN) return BD_ERR_OUT_OF_RANGE;
    return BD_OK;
}

bd_report* make_report(bool ok, std::string summary, std::string json) {
    auto* r = new (std::nothrow) bd_report;
    if (!r) return nullptr;
    r->ok = ok;
    r->summary = std::move(summary);
    r->json = std::move(json);
    return r;
}

}  // namespace

extern "C" {

const char* bd_version(void) { return "1.0.0"; }

const char* bd_status_message(bd_status status) {
    switch (status) {
        case BD_OK:
            return "ok";
        case BD_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case BD_ERR_OUT_OF_RANGE:
            return "argument out of supported range";
        case BD_ERR_PARSE:
            return "malformed JSON input";
        case BD_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void bd_string_free(char* s) { delete[] s; }

bd_status bd_diagram_count(uint32_t n, uint64_t* out) {
    if (!out) return BD_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = diagram_count(n);
        return BD_OK;
    });
}

bd_status bd_diagram_from_index(uint32_t n, uint64_t index, bd_diagram** out) {
    if (!out) return BD_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        *out = new bd_diagram{diagram_at(n, index)};
        return BD_OK;
    });
}

bd_status bd_diagram_from_json(const char* json, bd_diagram** out) {
    if (!json || !out) return BD_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        *out = new bd_diagram{diagram_from_json(json)};
        return BD_OK;
    });
}

void bd_diagram_free(bd_diagram* d) { delete d; }

uint32_t bd_diagram_size(const bd_diagram* d) {
    return d ? static_cast<uint32_t>(d->value.size()) : 0;
}

uint64_t bd_diagram_crossing_number(const bd_diagram* d) {
    return d ? crossing_number(d->value) : 0;
}

bd_status bd_diagram_to_json(const bd_diagram* d, char** out) {
    if (!d || !out) return BD_ERR_INVALID_ARGUMENT;
    return guarded([&] { return string_result(diagram_to_json(d->value), out); });
}

bd_status bd_diagram_weight(const bd_diagram* d, bd_variant labeling, char** out) {
    if (!d || !out) return BD_ERR_INVALID_ARGUMENT;
    return guarded(
        [&] { return string_result(weight(d->value, to_variant(labeling)).to_string(), out); });
}

bd_status bd_diagram_term_json(const bd_diagram* d, bd_variant labeling, char** out) {
    if (!d || !out) return BD_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        return string_result(term_to_json(diagram_to_term(d->value, to_variant(labeling))), out);
    });
}

bd_status bd_diagram_render_svg(const bd_diagram* d, bd_variant labeling, char** out) {
    if (!d || !out) return BD_ERR_INVALID_ARGUMENT;
    return guarded(
        [&] { return string_result(render_svg(d->value, to_variant(labeling)), out); });
}

bd_status bd_matrix_determinant(uint32_t n, bd_variant v, uint32_t threads, bd_poly** out) {
    if (!out) return BD_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    if (const bd_status s = check_symbolic_n(n); s != BD_OK) return s;
    return guarded([&] {
        *out = new bd_poly{
            leibniz_determinant(SymbolicMatrix::generic(n, to_variant(v)), threads)};
        return BD_OK;
    });
}

bd_status bd_brauer_determinant(uint32_t n, bd_variant v, uint32_t threads, bd_poly** out) {
    if (!out) return BD_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    if (const bd_status s = check_symbolic_n(n); s != BD_OK) return s;
    return guarded([&] {
        *out = new bd_poly{brauer_determinant(n, to_variant(v), threads)};
        return BD_OK;
    });
}

bd_status bd_matrix_permanent(uint32_t n, bd_variant v, uint32_t threads, bd_poly** out) {
    if (!out) return BD_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    if (const bd_status s = check_symbolic_n(n); s != BD_OK) return s;
    return guarded([&] {
        *out = new bd_poly{permanent(SymbolicMatrix::generic(n, to_variant(v)), threads)};
        return BD_OK;
    });
}

bd_status bd_pfaffian(uint32_t half, bd_poly** out) {
    if (!out) return BD_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    if (half > kMaxSymbolicN / 2) return BD_ERR_OUT_OF_RANGE;
    return guarded([&] {
        *out = new bd_poly{pfaffian(half)};
        return BD_OK;
    });
}

void bd_poly_free(bd_poly* p) { delete p; }

int bd_poly_equal(const bd_poly* p, const bd_poly* q) {
    if (!p || !q) return 0;
    return p->value == q->value ? 1 : 0;
}

uint64_t bd_poly_term_count(const bd_poly* p) { return p ? p->value.term_count() : 0; }

bd_status bd_poly_to_string(const bd_poly* p, char** out) {
    if (!p || !out) return BD_ERR_INVALID_ARGUMENT;
    return guarded([&] { return string_result(p->value.to_string(), out); });
}

bd_status bd_verify_theorem(uint32_t n, bd_variant v, uint32_t threads, bd_report** out) {
    if (!out) return BD_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    if (const bd_status s = check_symbolic_n(n); s != BD_OK) return s;
    return guarded([&] {
        const TheoremReport rep = run_verify_theorem(n, to_variant(v), threads);
        *out = make_report(rep.ok, rep.summary(), rep.to_json());
        return *out ? BD_OK : BD_ERR_INTERNAL;
    });
}

bd_status bd_verify_bijection(uint32_t n, bd_report** out) {
    if (!out) return BD_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    if (const bd_status s = check_symbolic_n(n); s != BD_OK) return s;
    return guarded([&] {
        const BijectionReport rep = run_verify_bijection(n);
        *out = make_report(rep.ok, rep.summary(), rep.to_json());
        return *out ? BD_OK : BD_ERR_INTERNAL;
    });
}

bd_status bd_verify_lemmas(uint32_t n, bd_report** out) {
    if (!out) return BD_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    if (const bd_status s = check_symbolic_n(n); s != BD_OK) return s;
    return guarded([&] {
        const LemmaReport rep = run_verify_lemmas(n);
        *out = make_report(rep.ok, rep.summary(), rep.to_json());
        return *out ? BD_OK : BD_ERR_INTERNAL;
    });
}

bd_status bd_verify_cayley(uint32_t n, uint32_t threads, bd_report** out) {
    if (!out) return BD_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    if (const bd_status s = check_symbolic_n(n); s != BD_OK) return s;
    return guarded([&] {
        const CayleyReport rep = verify_cayley(n, threads);
        *out = make_report(rep.holds, cayley_summary(rep), cayley_to_json(rep));
        return *out ? BD_OK : BD_ERR_INTERNAL;
    });
}

void bd_report_free(bd_report* r) { delete r; }

int bd_report_ok(const bd_report* r) { return r && r->ok ? 1 : 0; }

const char* bd_report_summary(const bd_report* r) { return r ? r->summary.c_str() : ""; }

bd_status bd_report_to_json(const bd_report* r, char** out) {
    if (!r || !out) return BD_ERR_INVALID_ARGUMENT;
    return string_result(r->json, out);
}

bd_status bd_count_table(uint32_t n, char** out) {
    if (!out) return BD_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    if (n < 1 || n > kMaxCountN) return BD_ERR_OUT_OF_RANGE;
    return guarded([&] { return string_result(count_table_json(count_table(n)), out); });
}

}  // extern "C"
