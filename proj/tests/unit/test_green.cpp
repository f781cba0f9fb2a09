#include "qclust/errors.hpp"
#include "qclust/green.hpp"

#include "doctest.h"

#include <algorithm>

using namespace qclust;

TEST_SUITE("green") {

TEST_CASE("framing") {
    FramedQuiver f = frame(glnUnfrozenPart(2));
    CHECK(f.rank() == 2);
    CHECK(f.state.size() == 4);
    for (std::size_t v = 0; v < 2; ++v) CHECK(isGreen(f, v));
    for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t w = 0; w < 2; ++w) CHECK(f.state.B[2 + w][v] == (v == w ? 1 : 0));
    FramedQuiver e = frame(ExchangeData::make({}, {}, {}));
    CHECK(e.rank() == 0);
    ExchangeData nonSkew = ExchangeData::make({"a", "b"}, {false, false}, {{0, 1}, {-2, 0}});
    try {
        frame(nonSkew);
        FAIL("expected NotSkewSymmetric");
    } catch (const Error& err) {
        CHECK(err.kind() == "NotSkewSymmetric");
    }
}

TEST_CASE("a mutated vertex turns red") {
    FramedQuiver f = frame(glnUnfrozenPart(3));
    FramedQuiver g = mutateGreen(f, 0);
    CHECK_FALSE(isGreen(g, 0));
    CHECK(colorOf(g, 0) == VertexColor::Red);
}

TEST_CASE("kedem sequences") {
    CHECK(kedemSequence(2) == std::vector<Label>{{1, 0}, {1, 1}});
    CHECK(kedemSequence(3).size() == 6);
    for (int n = 2; n <= 5; ++n) {
        CHECK(kedemSequence(n).size() == static_cast<std::size_t>(n * (n - 1)));
        FramedQuiver f = frame(glnUnfrozenPart(n));
        std::vector<std::string> ids;
        for (const auto& l : kedemSequence(n)) ids.push_back(l.str());
        auto seq = resolveVertices(f, ids);
        FramedQuiver done = runGreen(f, seq);
        for (std::size_t v = 0; v < done.rank(); ++v) CHECK_FALSE(isGreen(done, v));
        auto sigma = isMaximalGreen(f, seq);
        REQUIRE(sigma.has_value());
        CHECK(kedemCheck(n).ok);
        // The permutation is an involution.
        for (std::size_t v = 0; v < sigma->size(); ++v) CHECK((*sigma)[(*sigma)[v]] == v);
    }
}

TEST_CASE("DT permutation on small cases") {
    FramedQuiver f3 = frame(glnUnfrozenPart(3));
    std::vector<std::string> ids;
    for (const auto& l : kedemSequence(3)) ids.push_back(l.str());
    auto sigma = isMaximalGreen(f3, resolveVertices(f3, ids));
    REQUIRE(sigma.has_value());
    // Unfrozen order (1,0),(2,0),(1,1),(2,1): odd n sends (k,l) to (n-k,1-l).
    CHECK(*sigma == std::vector<std::size_t>{3, 2, 1, 0});
    FramedQuiver f4 = frame(glnUnfrozenPart(4));
    ids.clear();
    for (const auto& l : kedemSequence(4)) ids.push_back(l.str());
    auto s4 = isMaximalGreen(f4, resolveVertices(f4, ids));
    REQUIRE(s4.has_value());
    CHECK(*s4 == std::vector<std::size_t>{2, 1, 0, 5, 4, 3});
}

TEST_CASE("reversed kedem hits a red vertex") {
    FramedQuiver f = frame(glnUnfrozenPart(3));
    std::vector<std::string> ids;
    for (const auto& l : kedemSequence(3)) ids.push_back(l.str());
    auto seq = resolveVertices(f, ids);
    std::vector<std::size_t> twice = {seq[0], seq[0]};
    try {
        runGreen(f, twice);
        FAIL("expected RedVertexMutation");
    } catch (const Error& e) {
        CHECK(e.kind() == "RedVertexMutation");
        CHECK(std::string(e.what()).find("step 2") != std::string::npos);
    }
    std::reverse(seq.begin(), seq.end());
    // Reversal of a maximal green sequence need not be green; either it finishes or it stops at a red vertex.
    try {
        FramedQuiver g = runGreen(f, seq);
        CHECK(g.history.size() == seq.size());
    } catch (const Error& e) {
        CHECK(e.kind() == "RedVertexMutation");
    }
}

TEST_CASE("not maximal and empty cases") {
    ExchangeData arrow = ExchangeData::make({"a", "b"}, {false, false}, {{0, -1}, {1, 0}});
    FramedQuiver f = frame(arrow);
    CHECK_FALSE(isMaximalGreen(f, {0}).has_value());
    CHECK((isMaximalGreen(f, {0, 1}).has_value() || isMaximalGreen(f, {1, 0}).has_value()));
    FramedQuiver e = frame(ExchangeData::make({}, {}, {}));
    auto id = isMaximalGreen(e, {});
    REQUIRE(id.has_value());
    CHECK(id->empty());
    CHECK(runGreen(f, {}).state == f.state);
}

TEST_CASE("exports") {
    FramedQuiver f = mutateGreen(frame(glnUnfrozenPart(2)), 0);
    std::string dot = toDot(f);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("red") != std::string::npos);
    CHECK(dot.find("green") != std::string::npos);
    auto j = toJson(f);
    CHECK(j["colors"].size() == 2);
    CHECK(j["history"].size() == 1);
}

}
