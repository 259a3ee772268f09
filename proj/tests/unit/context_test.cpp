#include "grl/context.hpp"
#include "grl/error.hpp"

#include "support/laws.hpp"

#include <gtest/gtest.h>

using namespace grl;
using namespace grl::testing;

namespace {

Context ctx(std::vector<TypeSymbol> typing, std::vector<TypeSymbol> extra = {}) { return Context(typing, extra); }

} // namespace

TEST(Context, SupportIsSortedAndContainsTyping) {
    auto g = example_shell();
    EXPECT_EQ(g.arity(), 3u);
    EXPECT_EQ(g.support(), (std::vector<TypeSymbol>{"w", "x", "y", "z"}));
    EXPECT_EQ(g.extra_support(), (std::vector<TypeSymbol>{"w", "x"}));
    EXPECT_EQ(to_string(g), "(y, z, y | supp w, x)");
    EXPECT_EQ(to_string(terminal()), "()");
    EXPECT_EQ(to_string(support_ctx("s")), "(| supp s)");
}

TEST(Context, MkContextRejectsUnknownTypes) {
    TypeSet types{"x", "y"};
    EXPECT_NO_THROW(mk_context(types, {"x"}, {"y"}));
    try {
        mk_context(types, {"x", "q"}, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownType);
    }
    EXPECT_THROW(mk_context(types, {"x"}, {"q"}), Error);
}

TEST(Context, OplusIsStrictlyAssociativeAndUnital) {
    Rng rng(7);
    auto types = type_pool(3);
    for (int i = 0; i < 200; ++i) {
        auto a = random_context(rng, types, 3);
        auto b = random_context(rng, types, 3);
        auto c = random_context(rng, types, 3);
        EXPECT_EQ(oplus(oplus(a, b), c), oplus(a, oplus(b, c)));
        EXPECT_EQ(oplus(a, terminal()), a);
        EXPECT_EQ(oplus(terminal(), a), a);
    }
    EXPECT_EQ(oplus_all({}), terminal());
}

TEST(Morphism, ValidationErrors) {
    auto xy = ctx({"x", "y"});
    auto expect_kind = [](auto&& fn, ErrorKind kind) {
        try {
            fn();
            ADD_FAILURE() << "no error";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), kind) << e.what();
        }
    };
    expect_kind([&] { ContextMorphism(xy, ctx({"x"}), {1}); }, ErrorKind::TypeMismatch);
    expect_kind([&] { ContextMorphism(xy, ctx({"x"}), {2}); }, ErrorKind::OutOfRange);
    expect_kind([&] { ContextMorphism(xy, ctx({"x"}, {"z"}), {0}); }, ErrorKind::SupportViolation);
    expect_kind([&] { ContextMorphism(xy, ctx({"x"}), {0, 1}); }, ErrorKind::BoundaryMismatch);
    EXPECT_NO_THROW(ContextMorphism(xy, ctx({"y", "x", "x"}), {1, 0, 0}));
}

TEST(Morphism, CompositionIsAssociativeAndUnital) {
    Rng rng(11);
    auto types = type_pool(2);
    for (int i = 0; i < 300; ++i) {
        auto f = random_morphism(rng, types, 4);
        auto g = random_morphism_from(rng, f.cod(), 4);
        auto h = random_morphism_from(rng, g.cod(), 4);
        EXPECT_EQ(compose_cm(compose_cm(f, g), h), compose_cm(f, compose_cm(g, h)));
        EXPECT_EQ(compose_cm(identity_cm(f.dom()), f), f);
        EXPECT_EQ(compose_cm(f, identity_cm(f.cod())), f);
    }
}

TEST(Morphism, MonoAndRegularEpi) {
    auto xx = ctx({"x", "x"});
    auto x = ctx({"x"});
    // Diagonal x -> x+x hits every port of x: mono.
    EXPECT_TRUE(is_mono(diagonal_cm(x)));
    EXPECT_FALSE(is_regular_epi(diagonal_cm(x)));
    // Projection x+x -> x forgets a port: regular epi.
    EXPECT_TRUE(is_regular_epi(proj1_cm(x, x)));
    EXPECT_FALSE(is_mono(proj1_cm(x, x)));
    // Dropping support is not a regular epi even when injective.
    EXPECT_FALSE(is_regular_epi(ContextMorphism(ctx({"x"}, {"z"}), x, {0})));
    EXPECT_TRUE(is_regular_epi(braid_cm(xx, x)) && is_mono(braid_cm(xx, x)));
}

TEST(Morphism, ImageFactorization) {
    Rng rng(3);
    auto t = image_factorization_laws(rng, 500, 5, type_pool(3));
    EXPECT_EQ(t.failures, 0u) << t.witness;

    // (x, y, x | z) -> (x, x): the middle context keeps port 0 and the full support.
    ContextMorphism f(ctx({"x", "y", "x"}, {"z"}), ctx({"x", "x"}), {0, 0});
    auto [e, m] = image_factor_cm(f);
    EXPECT_EQ(e.cod(), ctx({"x"}, {"y", "z"}));
    EXPECT_EQ(m.map(), (std::vector<std::size_t>{0, 0}));
}

TEST(Morphism, PullbackUniversalPropertyOnSmallCospans) {
    auto types = type_pool(2);
    auto objects = all_contexts(types, 2, false);
    auto probes = all_contexts(types, 2);
    auto t = pullback_exhaustive(objects, probes);
    EXPECT_GT(t.cases, 100u);
    EXPECT_EQ(t.failures, 0u) << t.witness;
}

TEST(Morphism, PullbackOfProjectionsIsProduct) {
    auto a = ctx({"x"});
    auto b = ctx({"y"}, {"z"});
    auto cone = pullback_cm(bang_cm(a), bang_cm(b));
    EXPECT_EQ(cone.apex, oplus(a, b));
    EXPECT_EQ(cone.p1, proj1_cm(a, b));
    EXPECT_EQ(cone.p2, proj2_cm(a, b));
}

TEST(Morphism, RegularEpisArePullbackStable) {
    Rng rng(5);
    auto t = regular_epi_stability(rng, 500, 4, type_pool(3));
    EXPECT_EQ(t.failures, 0u) << t.witness;
}

TEST(Morphism, AllMorphismsCountsTypedFunctions) {
    // Each of the 3 ports of (x, x, y) picks an x-port or the y-port of (x, y, x).
    auto ms = all_morphisms(ctx({"x", "y", "x"}), ctx({"x", "x", "y"}));
    EXPECT_EQ(ms.size(), 4u);
    EXPECT_TRUE(all_morphisms(ctx({"x"}), ctx({}, {"y"})).empty());
    EXPECT_EQ(all_morphisms(ctx({"x", "x"}), terminal()).size(), 1u);
}

TEST(Morphism, CanonicalMapsCommute) {
    auto g = ctx({"x", "y"});
    auto h = ctx({"y"}, {"z"});
    auto maps = canonical_maps(g, h);
    EXPECT_EQ(compose_cm(maps.diagonal, proj1_cm(g, g)), identity_cm(g));
    EXPECT_EQ(compose_cm(maps.diagonal, proj2_cm(g, g)), identity_cm(g));
    EXPECT_EQ(compose_cm(braid_cm(g, h), braid_cm(h, g)), identity_cm(oplus(g, h)));
    EXPECT_EQ(compose_cm(braid_cm(g, h), proj1_cm(h, g)), maps.proj2);
    EXPECT_EQ(oplus_cm(identity_cm(g), identity_cm(h)), identity_cm(oplus(g, h)));
}
