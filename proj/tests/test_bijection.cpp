#include <gtest/gtest.h>

#include <set>

#include "awcsp/bijection.hpp"

using namespace awcsp;

TEST(Matching, IsDeltaEquivariantBijection) {
    for (int w = 0; w <= 10; ++w) {
        const auto phi = match_symplectic(w);
        const auto us = enum_scU(w);
        ASSERT_EQ(phi.size(), us.size());
        std::set<ScTElement> image;
        for (const auto& [u, t] : phi) {
            EXPECT_EQ(t.m, w);
            image.insert(t);
            EXPECT_EQ(phi.at(delta_on_scU(u)), dagger(t)) << u.to_string();
        }
        EXPECT_EQ(image.size(), us.size());
    }
}

TEST(Matching, SmallCases) {
    const auto phi = match_symplectic(1);
    ASSERT_EQ(phi.size(), 3u);
    // the delta-fixed element {1->2} goes to the delta-fixed weight
    const ScUElement fixed{1, {{1, 2}}, 1};
    const ScTElement t = phi.at(fixed);
    EXPECT_EQ(dagger(t), t);
    EXPECT_EQ(t, (ScTElement{1, Partition{1}, Partition(), Partition()}));
}

TEST(Matching, CachedMatchesFresh) {
    EXPECT_EQ(*cached_matching(4), match_symplectic(4));
    EXPECT_EQ(cached_matching(4).get(), cached_matching(4).get());
}

TEST(Omega, PreservesBlockAndGLParts) {
    for (const auto& b : enum_blocks(3, 5))
        for (const auto& x : enum_brauer_labels(b)) {
            const auto y = omega(x);
            EXPECT_EQ(y.block, b);
            EXPECT_EQ(y.gl, x.gl);
            EXPECT_NO_THROW(y.validate());
        }
}

TEST(Bijection, VerifiedOnSmallGroups) {
    struct Case {
        int n;
        std::uint32_t q;
    };
    for (auto [n, q] : {Case{1, 3}, Case{2, 3}, Case{3, 3}, Case{2, 5}, Case{2, 9}, Case{2, 7}, Case{3, 5}})
        for (const auto& b : enum_blocks(n, q)) {
            const auto p = build_bijection(b);
            const auto r = verify_equivariance(p);
            EXPECT_TRUE(r.ok()) << b.to_string() << ": " << (r.ok() ? "" : r.failures.front().check + " at " +
                                                                       r.failures.front().witness);
            EXPECT_GT(r.checked, p.brauer.size());
        }
}

TEST(Bijection, Sp4Of3PrincipalOrbits) {
    const auto p = build_bijection(enum_blocks(2, 3)[0]);
    ASSERT_EQ(p.brauer.size(), 7u);
    std::multiset<std::size_t> sizes;
    for (const auto& m : p.orbits)
        sizes.insert(m.brauer.size());
    EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 1, 1, 2, 2}));
    EXPECT_EQ(count_fixed(p.brauer, [](const BrauerLabel& x) { return act_delta(x); }), 3u);
    EXPECT_EQ(count_fixed(p.weight, [](const WeightLabel& y) { return act_delta(y); }), 3u);
}

TEST(Bijection, MutationIsDetected) {
    auto p = build_bijection(enum_blocks(2, 3)[0]);
    // swap the images of a delta-fixed label and a moved one
    std::size_t fixed = p.brauer.size(), moved = p.brauer.size();
    for (std::size_t i = 0; i < p.brauer.size(); ++i) {
        if (act_delta(p.brauer[i]) == p.brauer[i])
            fixed = std::min(fixed, i);
        else
            moved = std::min(moved, i);
    }
    ASSERT_LT(fixed, p.brauer.size());
    ASSERT_LT(moved, p.brauer.size());
    std::swap(p.image[fixed], p.image[moved]);
    const auto r = verify_equivariance(p);
    ASSERT_FALSE(r.ok());
    bool delta_failure = false;
    for (const auto& f : r.failures)
        delta_failure = delta_failure || (f.check == "delta" && !f.witness.empty());
    EXPECT_TRUE(delta_failure);
}

TEST(Bijection, DuplicateImageIsDetected) {
    auto p = build_bijection(enum_blocks(2, 3)[0]);
    p.image[1] = p.image[0];
    const auto r = verify_equivariance(p);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.failures.front().check, "bijection");
}

TEST(Bijection, PrincipalBlockIsIndependentOfQ) {
    for (int n = 1; n <= 3; ++n) {
        const auto p3 = build_bijection(principal_block(FieldContext::make(3), n));
        for (std::uint32_t q : {5u, 7u, 9u}) {
            const auto pq = build_bijection(principal_block(FieldContext::make(q), n));
            ASSERT_EQ(pq.brauer.size(), p3.brauer.size());
            for (std::size_t i = 0; i < pq.brauer.size(); ++i) {
                EXPECT_EQ(pq.brauer[i].symplectic, p3.brauer[i].symplectic);
                EXPECT_EQ(pq.apply(i).symplectic, p3.apply(i).symplectic);
            }
        }
    }
}

TEST(Bijection, FieldMovedBlocksOverF9) {
    std::size_t moved = 0;
    for (const auto& b : enum_blocks(2, 9)) {
        const auto p = build_bijection(b);
        if (p.field_step == 1)
            continue;
        ++moved;
        EXPECT_EQ(p.field_step, 2);
        EXPECT_TRUE(verify_equivariance(p).ok());
    }
    EXPECT_GT(moved, 0u);
}
