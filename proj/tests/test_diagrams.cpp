#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "brauerdet/counting.hpp"
#include "brauerdet/diagram.hpp"
#include "brauerdet/render.hpp"
#include "golden.hpp"

using namespace brauerdet;

TEST_CASE("diagram validation") {
    CHECK_NOTHROW(BrauerDiagram({2, 1, 4, 3}));
    CHECK_THROWS_AS(BrauerDiagram({1, 2}), std::invalid_argument);     // fixed points
    CHECK_THROWS_AS(BrauerDiagram({2, 1, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(BrauerDiagram({2, 3, 1, 4}), std::invalid_argument);  // not an involution
    CHECK_THROWS_AS(BrauerDiagram({5, 1, 2, 3}), std::invalid_argument);  // out of range
    CHECK_THROWS_AS(BrauerDiagram({2, 1, 4}), std::invalid_argument);     // odd length
}

TEST_CASE("enumeration counts and determinism") {
    CHECK(diagram_count(0) == 1);
    CHECK(diagram_count(3) == 15);
    CHECK(diagram_count(5) == 945);
    CHECK(diagram_count(5) == double_factorial(9));

    std::vector<BrauerDiagram> streamed;
    for_each_diagram(4, [&](const BrauerDiagram& d) { streamed.push_back(d); });
    REQUIRE(streamed.size() == 105);
    std::set<std::vector<int>> distinct;
    for (std::uint64_t i = 0; i < streamed.size(); ++i) {
        CHECK(diagram_at(4, i) == streamed[i]);
        distinct.insert(streamed[i].partners());
    }
    CHECK(distinct.size() == 105);  // no repeats

    CHECK_THROWS_AS(diagram_at(3, 15), std::out_of_range);
}

TEST_CASE("enumeration order pairs smallest position first") {
    // First diagram of size 3: (1,2)(3,4)(5,6).
    CHECK(diagram_at(3, 0) == BrauerDiagram({2, 1, 4, 3, 6, 5}));
    // The all-vertical diagram sits at index 7 for n=3.
    CHECK(diagram_at(3, 7) == BrauerDiagram::identity(3));

    std::size_t count = 0;
    for_each_diagram(0, [&](const BrauerDiagram& d) {
        CHECK(d.size() == 0);
        ++count;
    });
    CHECK(count == 1);
}

TEST_CASE("crossing numbers of the published size-3 table") {
    const auto diagrams = golden::size3_diagrams();
    const auto& expected = golden::size3_crossings();
    REQUIRE(diagrams.size() == 15);
    for (std::size_t k = 0; k < diagrams.size(); ++k)
        CHECK(crossing_number(diagrams[k]) == expected[k]);
}

TEST_CASE("table diagrams map onto enumeration order") {
    const auto diagrams = golden::size3_diagrams();
    const auto& index = golden::size3_enumeration_indices();
    for (std::size_t k = 0; k < diagrams.size(); ++k)
        CHECK(diagram_at(3, index[k]) == diagrams[k]);
}

TEST_CASE("seven-crossing example") {
    const BrauerDiagram d = golden::seven_crossing_diagram();
    CHECK(d.size() == 7);
    CHECK(crossing_number(d) == 7);
}

TEST_CASE("identity diagram has no crossings") {
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(crossing_number(BrauerDiagram::identity(n)) == 0);
}

TEST_CASE("edge lists under both labelings") {
    const BrauerDiagram id3 = BrauerDiagram::identity(3);
    const EdgeList f = edge_list(id3, Labeling::F);
    CHECK(f.cups.empty());
    CHECK(f.caps.empty());
    CHECK(f.arcs == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}});

    const EdgeList b = edge_list(id3, Labeling::B);
    CHECK(b.arcs == std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 1}});

    // Bottom-row labels reverse under B: the cap on bottom positions (1,6)
    // of the size-7 example becomes the label pair (2,7).
    const EdgeList pmb = edge_list(golden::seven_crossing_diagram(), Labeling::B);
    CHECK(pmb.caps == std::vector<std::pair<int, int>>{{2, 7}, {3, 4}});
    CHECK(pmb.cups == std::vector<std::pair<int, int>>{{2, 4}, {3, 7}});
}

TEST_CASE("published weight tables under both labelings") {
    const auto diagrams = golden::size3_diagrams();
    const auto& wf = golden::size3_weights_f();
    const auto& wb = golden::size3_weights_b();
    for (std::size_t k = 0; k < diagrams.size(); ++k) {
        CHECK(weight(diagrams[k], Labeling::F).to_string() == wf[k]);
        CHECK(weight(diagrams[k], Labeling::B).to_string() == wb[k]);
    }
}

TEST_CASE("weight degrees track the edge classes") {
    for_each_diagram(5, [&](const BrauerDiagram& d) {
        const EdgeList e = edge_list(d, Labeling::F);
        for (const Labeling lab : {Labeling::F, Labeling::B}) {
            const Monomial w = weight(d, lab);
            CHECK(w.degree_of_kind(VarKind::B) == e.cups.size() + e.caps.size());
            CHECK(w.degree_of_kind(VarKind::A) == e.arcs.size());
            CHECK(w.degree() == 5);
        }
    });
}

TEST_CASE("row swap is an involution") {
    for (const Labeling lab : {Labeling::F, Labeling::B}) {
        for_each_diagram(3, [&](const BrauerDiagram& d) {
            const BrauerDiagram swapped = swap_rows(d, lab);
            CHECK(swap_rows(swapped, lab) == d);
        });
    }
    // Swapping the identity reproduces the identity.
    CHECK(swap_rows(BrauerDiagram::identity(4), Labeling::F) == BrauerDiagram::identity(4));
}

TEST_CASE("diagram JSON round trip") {
    CHECK(diagram_to_json(BrauerDiagram::identity(3)) ==
          R"({"edges":[[1,4],[2,5],[3,6]],"n":3})");
    for_each_diagram(3, [&](const BrauerDiagram& d) {
        CHECK(diagram_from_json(diagram_to_json(d)) == d);
    });
    CHECK(diagram_to_json(diagram_at(0, 0)) == R"({"edges":[],"n":0})");
}

TEST_CASE("diagram JSON rejects malformed input") {
    CHECK_THROWS(diagram_from_json("not json"));
    CHECK_THROWS_AS(diagram_from_json(R"({"n":2})"), std::invalid_argument);
    CHECK_THROWS_AS(diagram_from_json(R"({"n":1,"edges":[[1,1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(diagram_from_json(R"({"n":1,"edges":[[1,5]]})"), std::invalid_argument);
    CHECK_THROWS_AS(diagram_from_json(R"({"n":1,"edges":[[1,2],[1,2]]})"), std::invalid_argument);
    // Unmatched vertices.
    CHECK_THROWS_AS(diagram_from_json(R"({"n":2,"edges":[[1,2]]})"), std::invalid_argument);
}

TEST_CASE("variant parsing") {
    CHECK(variant_from_string("F") == Variant::F);
    CHECK(variant_from_string("b") == Variant::B);
    CHECK(variant_char(Variant::B) == 'B');
    CHECK_THROWS_AS(variant_from_string("x"), std::invalid_argument);
}

TEST_CASE("svg rendering") {
    const BrauerDiagram d = golden::seven_crossing_diagram();
    const std::string svg = render_svg(d, Labeling::F);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);   // arcs
    CHECK(svg.find("<path") != std::string::npos);   // cups and caps
    CHECK(svg.find("<text") != std::string::npos);   // labels
    CHECK(render_svg(d, Labeling::F) == svg);        // deterministic

    // Bottom labels differ between the two labelings.
    const std::string svg_b = render_svg(d, Labeling::B);
    CHECK(svg_b != svg);
}
