#include "grl/dot.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <regex>

using namespace grl;
using namespace grl::testing;

namespace {

std::size_t count(const std::string& text, const std::regex& re) {
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                  std::sregex_iterator()));
}

const std::regex kDotNode(R"(\n  d\d+ \[label="[^"]*", shape=circle, style=filled)");
const std::regex kEdge(R"(\n  \w+_\d+ -- d\d+;)");

} // namespace

TEST(Dot, IdentityJoinsMatchingPortsThroughOneDot) {
    const auto text = emit_dot(identity_wd(Context({"x", "y", "x"})), "id");
    EXPECT_EQ(count(text, kDotNode), 3u);
    EXPECT_EQ(count(text, kEdge), 6u);
    for (int i = 1; i <= 3; ++i) {
        const auto d = "d" + std::to_string(i) + ";";
        EXPECT_NE(text.find("s1_" + std::to_string(i) + " -- " + d), std::string::npos) << text;
        EXPECT_NE(text.find("out_" + std::to_string(i) + " -- " + d), std::string::npos) << text;
    }
    EXPECT_EQ(text.find("white ["), std::string::npos);
}

TEST(Dot, MorphismDataShowsSevenDotsAndWhiteLabels) {
    const auto text = emit_dot(mk_wiring(example_morphism_data()), "omega");
    EXPECT_EQ(count(text, kDotNode), 7u);
    EXPECT_NE(text.find("white [label=\"{v,w}\""), std::string::npos) << text;
    EXPECT_EQ(count(text, kEdge), 16u);
    EXPECT_NE(text.find("subgraph cluster_s3"), std::string::npos);
    EXPECT_NE(text.find("label=\"out (y, z, z, x, x, z | w)\""), std::string::npos) << text;
}

TEST(Dot, OutputIsDeterministic) {
    const auto w = mk_wiring(example_morphism_data());
    auto again = mk_wiring(w.data());
    EXPECT_EQ(emit_dot(w, "a"), emit_dot(again, "a"));
    EXPECT_EQ(emit_dot(w, "a"), emit_dot(w, "a"));
}

TEST(Dot, TermShellsCarryPredicateNames) {
    PredicateSignature sig(TypeSet{"x"});
    sig.add_predicate("R", Context({"x", "x"}));
    const auto text = emit_dot(bare_term(sig, "R"), "r");
    EXPECT_NE(text.find("label=\"1: R (x, x)\""), std::string::npos) << text;
}
