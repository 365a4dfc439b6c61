#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "brauerdet/counting.hpp"
#include "brauerdet/matrices.hpp"
#include "brauerdet/verify.hpp"
#include "golden.hpp"

using namespace brauerdet;

TEST_CASE("generic matrix entries") {
    const SymbolicMatrix f = SymbolicMatrix::generic(3, Variant::F);
    CHECK(f.kind() == MatrixKind::F);
    CHECK(f.entry(1, 1).to_string() == "a[1,1]");
    CHECK(f.entry(1, 2).to_string() == "a[1,2] + b[1,2]");
    CHECK(f.entry(2, 1).to_string() == "a[1,2] - b[1,2]");
    CHECK(f.entry(3, 2).to_string() == "a[2,3] - b[2,3]");

    const SymbolicMatrix b = SymbolicMatrix::generic(3, Variant::B);
    CHECK(b.entry(2, 1).to_string() == "a[1,2] - I*b[1,2]");
    CHECK(b.entry(1, 3).to_string() == "a[1,3] + I*b[1,3]");
    CHECK(b.entry(2, 2).to_string() == "a[2,2]");

    const SymbolicMatrix one = SymbolicMatrix::generic(1, Variant::B);
    CHECK(one.entry(1, 1).to_string() == "a[1,1]");
    CHECK_THROWS_AS(SymbolicMatrix::generic(0, Variant::F), std::invalid_argument);
}

TEST_CASE("antisymmetric specialization") {
    const SymbolicMatrix m = SymbolicMatrix::generic(3, Variant::F).with_a_set_to_zero();
    CHECK(m.kind() == MatrixKind::Custom);
    CHECK(m.entry(1, 1).is_zero());
    CHECK(m.entry(1, 2).to_string() == "b[1,2]");
    CHECK(m.entry(2, 1).to_string() == "-b[1,2]");
}

TEST_CASE("determinants reproduce the published 3x3 expansions") {
    const Polynomial det_f = leibniz_determinant(SymbolicMatrix::generic(3, Variant::F));
    const Polynomial det_b = leibniz_determinant(SymbolicMatrix::generic(3, Variant::B));
    CHECK(det_f == golden::to_polynomial(golden::det3_f_terms()));
    CHECK(det_b == golden::to_polynomial(golden::det3_b_terms()));
    CHECK(det_f.term_count() == 11);
    CHECK(det_b.term_count() == 11);
}

TEST_CASE("small determinants by hand") {
    CHECK(leibniz_determinant(SymbolicMatrix::generic(1, Variant::F)).to_string() == "a[1,1]");
    // 2x2: a11 a22 - (a12 + b12)(a12 - b12)
    const Polynomial det2 = leibniz_determinant(SymbolicMatrix::generic(2, Variant::F));
    CHECK(det2.to_string() == "a[1,1]*a[2,2] - a[1,2]^2 + b[1,2]^2");
    const Polynomial det2b = leibniz_determinant(SymbolicMatrix::generic(2, Variant::B));
    CHECK(det2b.to_string() == "a[1,1]*a[2,2] - a[1,2]^2 - b[1,2]^2");
}

TEST_CASE("diagram sum equals the Leibniz expansion") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const Variant v : {Variant::F, Variant::B}) {
            const Polynomial diagram_side = brauer_determinant(n, v);
            const Polynomial leibniz_side =
                leibniz_determinant(SymbolicMatrix::generic(n, v));
            CHECK(diagram_side == leibniz_side);
        }
    }
}

TEST_CASE("the backward variant needs its sign prefactor") {
    for (const std::size_t n : {2u, 3u}) {  // n(n-1)/2 odd
        const Polynomial raw = brauer_weight_sum(n, Labeling::B);
        const Polynomial det = leibniz_determinant(SymbolicMatrix::generic(n, Variant::B));
        CHECK(raw != det);
        CHECK(-raw == det);
    }
    for (const std::size_t n : {4u, 5u}) {  // n(n-1)/2 even
        CHECK(brauer_weight_sum(n, Labeling::B) ==
              leibniz_determinant(SymbolicMatrix::generic(n, Variant::B)));
    }
}

TEST_CASE("coefficients of the two variants differ by the antisymmetric degree") {
    // coeff_B(m) = (-1)^(bdeg(m)/2) * coeff_F(m) for every monomial, so the
    // two determinants agree exactly on antisymmetric-free monomials.
    for (std::size_t n = 1; n <= 6; ++n) {
        const Polynomial det_f = leibniz_determinant(SymbolicMatrix::generic(n, Variant::F));
        const Polynomial det_b = leibniz_determinant(SymbolicMatrix::generic(n, Variant::B));
        REQUIRE(det_f.term_count() == det_b.term_count());
        auto it_b = det_b.terms().begin();
        for (const auto& [mono, coeff_f] : det_f.terms()) {
            CHECK(it_b->first == mono);
            const unsigned bdeg = mono.degree_of_kind(VarKind::B);
            REQUIRE(bdeg % 2 == 0);
            const GaussianInt expected = (bdeg / 2) % 2 == 0 ? coeff_f : -coeff_f;
            CHECK(it_b->second == expected);
            ++it_b;
        }
    }
}

TEST_CASE("expansion term stream") {
    // Totals before cancellation: sum over permutations of 2^(off-diagonal).
    std::uint64_t total = 0, survivors = 0;
    Polynomial sum;
    leibniz_term_stream(3, Variant::F, [&](const LeibnizTerm& t) {
        ++total;
        if (t.survives) ++survivors;
        sum.add_term(t.monomial, t.signed_value());
    });
    CHECK(total == 29);      // 1 + 3*4 + 2*8
    CHECK(survivors == 15);  // double factorial
    CHECK(sum == leibniz_determinant(SymbolicMatrix::generic(3, Variant::F)));

    std::uint64_t survivors4 = 0;
    leibniz_term_stream(4, Variant::B, [&](const LeibnizTerm& t) {
        if (t.survives) ++survivors4;
    });
    CHECK(survivors4 == 105);

    std::uint64_t n1 = 0;
    leibniz_term_stream(1, Variant::F, [&](const LeibnizTerm& t) {
        ++n1;
        CHECK(t.monomial.to_string() == "a[1,1]");
        CHECK(t.survives);
    });
    CHECK(n1 == 1);
}

TEST_CASE("surviving stream matches the diagram weights term by term") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const bool prefactor_odd = (n * (n - 1) / 2) % 2 != 0;
        for (const Variant v : {Variant::F, Variant::B}) {
            std::map<std::pair<std::string, int>, long> stream_side;
            leibniz_term_stream(n, v, [&](const LeibnizTerm& t) {
                if (!t.survives) return;
                const GaussianInt val = t.signed_value();
                REQUIRE(val.is_real());
                const int sign = val.re() > 0 ? 1 : -1;
                ++stream_side[{t.monomial.to_string(), sign}];
            });
            std::map<std::pair<std::string, int>, long> diagram_side;
            for_each_diagram(n, [&](const BrauerDiagram& d) {
                int sign = crossing_number(d) % 2 == 0 ? 1 : -1;
                if (v == Variant::B && prefactor_odd) sign = -sign;
                ++diagram_side[{weight(d, v).to_string(), sign}];
            });
            CHECK(stream_side == diagram_side);
        }
    }
}

TEST_CASE("permanent fixtures") {
    const Polynomial perm3 = permanent(SymbolicMatrix::generic(3, Variant::F));
    CHECK(perm3 == golden::to_polynomial(golden::perm3_f_terms()));
    CHECK(perm3.term_count() == 11);

    CHECK(permanent(SymbolicMatrix::generic(1, Variant::F)).to_string() == "a[1,1]");

    // Permanent of the all-ones matrix counts the permutations.
    std::vector<std::vector<Polynomial>> ones(
        3, std::vector<Polynomial>(3, Polynomial::constant(GaussianInt(1))));
    CHECK(permanent(SymbolicMatrix::from_entries(ones)).to_string() == "6");
}

TEST_CASE("pfaffian by chord interleaving") {
    CHECK(pfaffian(0).to_string() == "1");
    CHECK(pfaffian(1).to_string() == "b[1,2]");
    CHECK(pfaffian(2).to_string() == "b[1,2]*b[3,4] - b[1,3]*b[2,4] + b[1,4]*b[2,3]");

    // Its square is the determinant of the generic antisymmetric matrix.
    for (std::size_t half = 1; half <= 3; ++half) {
        const Polynomial pf = pfaffian(half);
        const SymbolicMatrix antisym =
            SymbolicMatrix::generic(2 * half, Variant::F).with_a_set_to_zero();
        CHECK(pf * pf == leibniz_determinant(antisym));
    }
}

TEST_CASE("antisymmetric determinants vanish in odd sizes and square in even") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const CayleyReport r = verify_cayley(n);
        CHECK(r.holds);
        if (n % 2 != 0) {
            CHECK(r.det.is_zero());
            CHECK(r.expected.is_zero());
        } else {
            CHECK_FALSE(r.det.is_zero());
        }
    }
    CHECK(verify_cayley(2).det.to_string() == "b[1,2]^2");
}

TEST_CASE("term values read off the matrix entries") {
    const TermDescriptor t({{1, 2, 3}}, {{VarKind::B, VarKind::B, VarKind::A}});
    CHECK(term_value_from_matrix(SymbolicMatrix::generic(3, Variant::F), t) == GaussianInt(1));
    CHECK(term_value_from_matrix(SymbolicMatrix::generic(3, Variant::B), t) == GaussianInt(-1));

    // Matches the closed-form sign on every term of every diagram.
    for (const Variant v : {Variant::F, Variant::B}) {
        const SymbolicMatrix m = SymbolicMatrix::generic(4, v);
        for_each_diagram(4, [&](const BrauerDiagram& d) {
            const TermDescriptor term = diagram_to_term(d, v);
            CHECK(term_value_from_matrix(m, term) == sign_of_term(term, v));
        });
    }
}

TEST_CASE("results are independent of the thread count") {
    for (const Variant v : {Variant::F, Variant::B}) {
        const Polynomial serial = leibniz_determinant(SymbolicMatrix::generic(5, v), 1);
        const Polynomial threaded = leibniz_determinant(SymbolicMatrix::generic(5, v), 3);
        CHECK(serial == threaded);
        CHECK(serial.to_string() == threaded.to_string());
        CHECK(brauer_determinant(5, v, 1) == brauer_determinant(5, v, 4));
    }
}

TEST_CASE("expansion handles entries outside the packed fast path") {
    // Degree-5 entries force the generic accumulation route; check against
    // the 2x2 formula det = m11 m22 - m12 m21 computed with plain products.
    auto power = [](const IndexedVar& v, unsigned e) {
        Monomial m;
        m.multiply_var(v, e);
        return Polynomial::term(std::move(m), GaussianInt(1));
    };
    const Polynomial p11 = power(IndexedVar::a(1, 1), 5) + Polynomial::constant(GaussianInt(2));
    const Polynomial p12 = power(IndexedVar::b(1, 2), 4);
    const Polynomial p21 = power(IndexedVar::a(1, 2), 3) - Polynomial::constant(GaussianInt(1));
    const Polynomial p22 = power(IndexedVar::a(2, 2), 5);
    const SymbolicMatrix m = SymbolicMatrix::from_entries({{p11, p12}, {p21, p22}});
    CHECK(leibniz_determinant(m) == p11 * p22 - p12 * p21);
    CHECK(permanent(m) == p11 * p22 + p12 * p21);

    // Labels beyond the packed range take the same route.
    const Polynomial big = Polynomial::variable(IndexedVar::a(9, 12));
    const SymbolicMatrix m2 = SymbolicMatrix::from_entries(
        {{big, Polynomial::constant(GaussianInt(1))},
         {Polynomial::constant(GaussianInt(1)), big}});
    CHECK(leibniz_determinant(m2) == big * big - Polynomial::constant(GaussianInt(1)));
}

TEST_CASE("polynomial comparison reports the first mismatch") {
    const Polynomial p = Polynomial::variable(IndexedVar::a(1, 1)) +
                         Polynomial::variable(IndexedVar::b(1, 2));
    CHECK_FALSE(compare_polynomials(p, p).has_value());

    const Polynomial q = p + Polynomial::variable(IndexedVar::a(2, 2));
    const auto extra = compare_polynomials(p, q);
    REQUIRE(extra.has_value());
    CHECK(extra->monomial == "a[2,2]");
    CHECK(extra->lhs_coefficient == "0");
    CHECK(extra->rhs_coefficient == "1");

    Polynomial r = p;
    r.add_term(Monomial(IndexedVar::a(1, 1)), GaussianInt(3));
    const auto diff = compare_polynomials(p, r);
    REQUIRE(diff.has_value());
    CHECK(diff->monomial == "a[1,1]");
    CHECK(diff->lhs_coefficient == "1");
    CHECK(diff->rhs_coefficient == "4");
}

TEST_CASE("verification drivers") {
    const TheoremReport t = run_verify_theorem(3, Variant::F);
    CHECK(t.ok);
    CHECK(t.diagrams == 15);
    CHECK(t.distinct_monomials == 11);
    CHECK(t.summary() == "OK, 15 diagrams, 11 distinct monomials");
    CHECK(t.to_json().find("\"ok\":true") != std::string::npos);

    const BijectionReport b = run_verify_bijection(4);
    CHECK(b.ok);
    CHECK(b.diagrams_checked == 105);
    CHECK(b.descriptors_checked == 105);

    const LemmaReport l = run_verify_lemmas(4);
    CHECK(l.ok);
    CHECK(l.arc_only_checked == 2 * 24);   // both labelings, all permutations
    CHECK(l.inverse_checked == 2 * 105);
    CHECK(l.sign_checked == 2 * 105);
    CHECK(l.surgeries_checked > 0);

    const CayleyReport c = verify_cayley(3);
    CHECK(cayley_summary(c).rfind("OK", 0) == 0);
    CHECK(cayley_to_json(c).find("\"ok\":true") != std::string::npos);

    CHECK_THROWS_AS(run_verify_theorem(0, Variant::F), std::invalid_argument);
}
