#include "grl/error.hpp"
#include "grl/wiring.hpp"

#include "support/laws.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace grl;
using namespace grl::testing;

TEST(Wiring, WorkedMorphismValidates) {
    auto w = mk_wiring(example_morphism_data());
    EXPECT_EQ(w.shell_count(), 3u);
    EXPECT_EQ(w.dot_count(), 7u);
    EXPECT_EQ(w.port_count(), 16u);
    EXPECT_EQ(w.white_labels(), (std::vector<TypeSymbol>{"v", "w"}));
    EXPECT_EQ(w.support(), (std::vector<TypeSymbol>{"v", "w", "x", "y", "z"}));
    // Dots renumbered by first port: shell 1 hits listed dots 4, 2, 1 first.
    EXPECT_EQ(w.dot_at(0, 0), 0u);
    EXPECT_EQ(w.dot_types()[0], TypeSymbol("x"));
    EXPECT_EQ(w.dot_at(2, 0), w.outer_dot(0));
    EXPECT_EQ(w.outer_dot(1), w.outer_dot(2));
}

TEST(Wiring, DotRelabelingNormalizesToOneValue) {
    const auto base = example_morphism_data();
    const auto reference = mk_wiring(base);
    std::vector<std::size_t> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t seen = 0;
    do {
        DiagramData d = base;
        for (std::size_t i = 0; i < 7; ++i) d.dot_types[perm[i]] = base.dot_types[i];
        for (auto& b : d.boundary) b = perm[b];
        auto w = mk_wiring(d);
        ASSERT_EQ(w, reference);
        ASSERT_EQ(w.hash(), reference.hash());
        ++seen;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(seen, 5040u);
}

TEST(Wiring, ValidationErrors) {
    auto d = example_morphism_data();
    d.boundary[0] = 0;  // port typed x wired to a y dot
    try {
        mk_wiring(d);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TypeMismatch);
    }
    d = example_morphism_data();
    d.boundary[3] = 9;
    EXPECT_THROW(mk_wiring(d), Error);
    d = example_morphism_data();
    d.boundary.pop_back();
    EXPECT_THROW(mk_wiring(d), Error);
}

TEST(Wiring, FloatingSupportWithoutInnerShells) {
    auto w = mk_wiring(floating_support_data());
    EXPECT_EQ(w.shell_count(), 0u);
    EXPECT_EQ(w.dot_count(), 2u);
    EXPECT_EQ(w.white_labels(), (std::vector<TypeSymbol>{"w", "z"}));
}

TEST(Wiring, PortlessDotsAreAbsorbed) {
    DiagramData d;
    d.outer = Context({"x"});
    d.dot_types = {"y", "x", "z"};
    d.boundary = {1};
    auto w = mk_wiring(d);
    EXPECT_EQ(w.dot_count(), 1u);
    EXPECT_EQ(w.white_labels(), (std::vector<TypeSymbol>{"y", "z"}));
    EXPECT_EQ(normalize(w), w);
}

TEST(Wiring, DistinctPartitionsStayDistinct) {
    Context xx({"x", "x"});
    DiagramData joined{{}, xx, {"x"}, {0, 0}, {}};
    DiagramData split{{}, xx, {"x", "x"}, {0, 1}, {}};
    EXPECT_NE(mk_wiring(joined), mk_wiring(split));
}

TEST(Wiring, TextForm) {
    auto w = identity_wd(Context({"x", "y"}, {"z"}));
    EXPECT_EQ(to_string(w),
              "wiring { inner: [(x, y | supp z)]; outer: (x, y | supp z); dots: [x, y]; "
              "wire 1.1 -> d1; wire 1.2 -> d2; wire out.1 -> d1; wire out.2 -> d2; supp {x, y, z} }");
}

TEST(Wiring, SubstitutionMatchesPortGraphOracle) {
    Rng rng(17);
    auto types = type_pool(3);
    for (int i = 0; i < 500; ++i) {
        auto w = random_diagram(rng, types, 3, 3);
        if (w.shell_count() == 0) continue;
        const auto s = uniform(rng, 0, w.shell_count() - 1);
        auto part = random_diagram_with_outer(rng, types, w.inner()[s], 3, 3);
        auto result = substitute(w, s, part);
        auto check = check_substitution(w, s, part, result);
        ASSERT_TRUE(check.partition_matches && check.dot_count_matches && check.support_matches)
            << to_string(w) << "\n<- " << to_string(part) << "\n= " << to_string(result);
    }
}

TEST(Wiring, ChainedDotsMergeAndDisconnectedLabelsFloat) {
    // Host: outer (x, x); its single inner shell (x, x, y) has ports 1 and 2 on
    // separate outer dots and port 3 on a lone y dot.
    Context shell({"x", "x", "y"});
    DiagramData host{{shell}, Context({"x", "x"}), {"x", "x", "y"}, {0, 1, 2, 0, 1}, {}};
    // Part: inner (x, x) chained to the first two outer ports through one dot,
    // the y port on a dot shared with nothing, plus a floating z.
    DiagramData part{{Context({"x", "x"})}, shell, {"x", "x", "y"}, {0, 1, 0, 0, 2}, {"z"}};
    auto w = substitute(mk_wiring(host), 0, mk_wiring(part));
    EXPECT_EQ(w.dot_count(), 2u);
    EXPECT_EQ(w.outer_dot(0), w.outer_dot(1));
    EXPECT_EQ(w.white_labels(), (std::vector<TypeSymbol>{"y", "z"}));
    EXPECT_EQ(w.inner(), std::vector<Context>{Context({"x", "x"})});
}

TEST(Wiring, SubstitutionShellMismatch) {
    auto w = identity_wd(Context({"x"}));
    EXPECT_THROW(substitute(w, 0, identity_wd(Context({"y"}))), Error);
    EXPECT_THROW(substitute(w, 1, identity_wd(Context({"x"}))), Error);
}

TEST(Wiring, OperadLaws) {
    Rng rng(23);
    auto t = operad_laws(rng, 400, type_pool(3));
    EXPECT_EQ(t.failures, 0u) << t.witness;
}

TEST(Wiring, TensorMergesSupports) {
    DiagramData a{{}, Context({}, {"z"}), {}, {}, {}};
    DiagramData b{{}, Context({}, {"z", "w"}), {}, {}, {}};
    auto t = tensor(mk_wiring(a), mk_wiring(b));
    EXPECT_EQ(t.white_labels(), (std::vector<TypeSymbol>{"w", "z"}));
    auto g = Context({"x"});
    auto h = Context({"y", "x"});
    EXPECT_EQ(merge_inner(tensor(identity_wd(g), identity_wd(h))), identity_wd(oplus(g, h)));
}

TEST(Wiring, BreakingWiresIsAboveConnecting) {
    Context xx({"x", "x"});
    auto connected = mk_wiring({{}, xx, {"x"}, {0, 0}, {}});
    auto broken = mk_wiring({{}, xx, {"x", "x"}, {0, 1}, {}});
    EXPECT_TRUE(leq_wd(connected, broken));
    EXPECT_FALSE(leq_wd(broken, connected));

    auto labelled = mk_wiring({{}, xx, {"x", "x"}, {0, 1}, {"s"}});
    EXPECT_TRUE(leq_wd(labelled, broken));
    EXPECT_FALSE(leq_wd(broken, labelled));
    EXPECT_THROW(leq_wd(broken, identity_wd(xx)), Error);
}

TEST(Wiring, OrderLaws) {
    Rng rng(29);
    auto t = order_laws(rng, 400, type_pool(3));
    EXPECT_EQ(t.failures, 0u) << t.witness;
}

TEST(Wiring, HypergraphLawsOnSmallContexts) {
    for (const auto& g : all_contexts(type_pool(2), 3)) {
        auto t = frobenius_laws(g);
        EXPECT_EQ(t.failures, 0u) << t.witness;
    }
}

TEST(Wiring, GeneratorsAndTransposes) {
    Rng rng(31);
    auto types = type_pool(2);
    for (int i = 0; i < 200; ++i) {
        auto f = random_morphism(rng, types, 3);
        EXPECT_EQ(transpose_wd(graph_wd(f)), cograph_wd(f));
        EXPECT_EQ(transpose_wd(transpose_wd(graph_wd(f))), graph_wd(f));
        EXPECT_EQ(graph_wd(identity_cm(f.dom())), identity_wd(f.dom()));
        // The graph of a composite is the composite of graphs.
        auto g = random_morphism_from(rng, f.cod(), 3);
        EXPECT_EQ(graph_wd(compose_cm(f, g)), compose_wd(graph_wd(f), graph_wd(g)));
    }
    auto g = Context({"x", "y"});
    auto h = Context({"y"});
    auto b = braid_wd(g, h);
    EXPECT_EQ(compose_wd(b, braid_wd(h, g)), identity_wd(oplus(g, h)));

    DiagramData d{{}, oplus(g, h), {"x", "y"}, {0, 1, 1}, {}};
    auto w = mk_wiring(d);
    EXPECT_EQ(transpose_wd(transpose_wd(w, g, h), h, g), w);
    EXPECT_EQ(transpose_wd(w, g, h).outer(), oplus(h, g));
}
