#include <gtest/gtest.h>

#include <set>

#include "awcsp/orbits.hpp"
#include "awcsp/qseries.hpp"
#include "awcsp/symplectic_labels.hpp"
#include "oracles.hpp"

using awcsp::Partition;
using awcsp::ScTElement;
using awcsp::ScTPrimeElement;
using awcsp::ScUElement;

TEST(ScU, SmallCases) {
    EXPECT_EQ(awcsp::enum_scU(0).size(), 1u);
    const auto one = awcsp::enum_scU(1);
    ASSERT_EQ(one.size(), 3u);
    // dense sequences (m(1), m(2)): (0,1) < (2,0)
    EXPECT_EQ(one[0], (ScUElement{1, {{2, 1}}, 1}));
    EXPECT_EQ(one[1], (ScUElement{1, {{2, 1}}, 2}));
    EXPECT_EQ(one[2], (ScUElement{1, {{1, 2}}, 1}));
    EXPECT_EQ(awcsp::enum_scU(2).size(), 7u);
}

TEST(ScU, MatchesPartitionOracle) {
    for (int n = 0; n <= 12; ++n)
        EXPECT_EQ(awcsp::enum_scU(n).size(), oracle::scU_count(n)) << n;
}

TEST(ScU, OrderIsStrictlyIncreasingAndValid) {
    for (int n = 0; n <= 10; ++n) {
        const auto xs = awcsp::enum_scU(n);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            EXPECT_NO_THROW(xs[i].validate());
            if (i)
                EXPECT_LT(xs[i - 1], xs[i]);
        }
    }
}

TEST(ScU, ValidateRejectsBrokenElements) {
    EXPECT_THROW((ScUElement{1, {{1, 1}, {1, 1}}, 1}.validate()), std::invalid_argument);
    EXPECT_THROW((ScUElement{2, {{1, 1}, {3, 1}}, 1}.validate()), std::invalid_argument);
    EXPECT_THROW((ScUElement{1, {{2, 1}}, 3}.validate()), std::invalid_argument);
    EXPECT_THROW((ScUElement{2, {{2, 1}}, 1}.validate()), std::invalid_argument);
}

TEST(ScU1, SmallCases) {
    EXPECT_EQ(awcsp::enum_scU1(0).size(), 1u);
    const auto one = awcsp::enum_scU1(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], (ScUElement{1, {{1, 2}}, 1}));
    const auto two = awcsp::enum_scU1(2);
    ASSERT_EQ(two.size(), 3u);
    EXPECT_EQ(two[0], (ScUElement{2, {{2, 2}}, 1}));
    EXPECT_EQ(two[1], (ScUElement{2, {{2, 2}}, 2}));
    EXPECT_EQ(two[2], (ScUElement{2, {{1, 4}}, 1}));
}

TEST(ScU1, IsTheAllEvenSubsequence) {
    for (int n = 0; n <= 10; ++n) {
        std::vector<ScUElement> filtered;
        for (const auto& x : awcsp::enum_scU(n))
            if (x.all_even())
                filtered.push_back(x);
        EXPECT_EQ(awcsp::enum_scU1(n), filtered);
        EXPECT_EQ(awcsp::enum_scU1(n).size(), oracle::scU1_count(n));
    }
}

TEST(ScT, SmallCases) {
    EXPECT_EQ(awcsp::enum_scT(0).size(), 1u);
    EXPECT_EQ(awcsp::enum_scT(1).size(), 3u);
    EXPECT_EQ(awcsp::enum_scT(2).size(), 7u);
    for (int m = 0; m <= 12; ++m) {
        EXPECT_EQ(awcsp::enum_scT(m).size(), oracle::scT_count(m)) << m;
        EXPECT_EQ(awcsp::enum_scT_prime(m).size(), awcsp::enum_scT(m).size()) << m;
    }
}

TEST(ScT, ElementsValidAndSorted) {
    for (int m = 0; m <= 8; ++m) {
        const auto xs = awcsp::enum_scT(m);
        EXPECT_TRUE(std::is_sorted(xs.begin(), xs.end()));
        EXPECT_EQ(std::set<ScTElement>(xs.begin(), xs.end()).size(), xs.size());
        for (const auto& x : xs)
            EXPECT_NO_THROW(x.validate());
        for (const auto& y : awcsp::enum_scT_prime(m))
            EXPECT_NO_THROW(y.validate());
    }
    EXPECT_THROW((ScTElement{2, Partition(), Partition(), Partition{2}}.validate()), std::invalid_argument);
}

TEST(TToTPrime, Examples) {
    const Partition l1{2, 1};
    EXPECT_EQ(awcsp::t_to_tprime({3, l1, Partition(), Partition()}),
              (ScTPrimeElement{3, l1, Partition(), Partition(), Partition(), Partition()}));
    EXPECT_EQ(awcsp::t_to_tprime({1, Partition(), Partition{1}, Partition()}),
              (ScTPrimeElement{1, Partition(), Partition(), Partition(), Partition{1}, Partition()}));
}

TEST(TToTPrime, IsABijectionUpTo12) {
    for (int m = 0; m <= 12; ++m) {
        std::set<ScTPrimeElement> images;
        for (const auto& x : awcsp::enum_scT(m)) {
            const auto y = awcsp::t_to_tprime(x);
            EXPECT_NO_THROW(y.validate());
            EXPECT_EQ(awcsp::tprime_to_t(y), x);
            images.insert(y);
        }
        const auto all = awcsp::enum_scT_prime(m);
        EXPECT_EQ(std::set<ScTPrimeElement>(all.begin(), all.end()), images) << m;
    }
}

TEST(Dagger, Examples) {
    const Partition l1{3};
    const ScTElement plain{3, l1, Partition(), Partition()};
    EXPECT_EQ(awcsp::dagger(plain), plain);
    // (0,(1),0) <-> (0,0,(1)): the 2-core (1) of lambda2 moves to kappa
    EXPECT_EQ(awcsp::dagger({1, Partition(), Partition{1}, Partition()}),
              (ScTElement{1, Partition(), Partition(), Partition{1}}));
}

TEST(Dagger, InvolutionAndFixedPointsUpTo12) {
    for (int m = 0; m <= 12; ++m) {
        std::set<ScTElement> fixed;
        for (const auto& x : awcsp::enum_scT(m)) {
            const auto y = awcsp::dagger(x);
            EXPECT_EQ(awcsp::dagger(y), x);
            EXPECT_EQ(awcsp::delta_on_scT(x), y);
            if (y == x)
                fixed.insert(x);
        }
        std::set<ScTElement> from_fixed_subset;
        for (const auto& y : awcsp::enum_scT1_prime(m)) {
            EXPECT_TRUE(y.in_fixed_subset());
            from_fixed_subset.insert(awcsp::tprime_to_t(y));
        }
        EXPECT_EQ(fixed, from_fixed_subset) << m;
    }
}

TEST(DeltaOnScU, Examples) {
    const ScUElement even{1, {{1, 2}}, 1};
    EXPECT_EQ(awcsp::delta_on_scU(even), even);
    EXPECT_EQ(awcsp::delta_on_scU({1, {{2, 1}}, 1}), (ScUElement{1, {{2, 1}}, 2}));
}

TEST(DeltaOnScU, InvolutionWithOrbitsOfSizeTwo) {
    for (int n = 0; n <= 10; ++n) {
        const auto xs = awcsp::enum_scU(n);
        std::size_t fixed = 0;
        for (const auto& x : xs) {
            const auto y = awcsp::delta_on_scU(x);
            EXPECT_EQ(awcsp::delta_on_scU(y), x);
            EXPECT_EQ(y.mult, x.mult);
            fixed += y == x;
            EXPECT_EQ(y == x, x.all_even());
        }
        EXPECT_EQ(fixed, awcsp::enum_scU1(n).size());
        for (const auto& orbit : awcsp::orbit_indices(xs, awcsp::delta_on_scU))
            EXPECT_TRUE(orbit.size() == 1 || orbit.size() == 2);
    }
}

TEST(DeltaOnScT, FixedCountMatchesScU1) {
    for (int n = 0; n <= 12; ++n) {
        const auto ts = awcsp::enum_scT(n);
        EXPECT_EQ(awcsp::count_fixed(ts, awcsp::delta_on_scT), awcsp::enum_scU1(n).size()) << n;
    }
}

TEST(CountIdentity, EnumerationAgainstGeneratingFunctionsUpTo30) {
    const auto gu = awcsp::gf_counts(awcsp::LabelSet::scU, 30);
    const auto gt = awcsp::gf_counts(awcsp::LabelSet::scT, 30);
    const auto gu1 = awcsp::gf_counts(awcsp::LabelSet::scU1, 30);
    const auto gt1 = awcsp::gf_counts(awcsp::LabelSet::scT1prime, 30);
    for (int n = 0; n <= 30; ++n) {
        const auto N = static_cast<std::size_t>(n);
        std::uint64_t u = 0, t = 0, u1 = 0, t1 = 0;
        awcsp::for_each_scU(n, [&](const ScUElement&) { ++u; });
        awcsp::for_each_scT(n, [&](const ScTElement&) { ++t; });
        awcsp::for_each_scU1(n, [&](const ScUElement&) { ++u1; });
        awcsp::for_each_scT1_prime(n, [&](const ScTPrimeElement&) { ++t1; });
        EXPECT_EQ(u, t) << n;
        EXPECT_EQ(u1, t1) << n;
        EXPECT_EQ(gu[N], u) << n;
        EXPECT_EQ(gt[N], t) << n;
        EXPECT_EQ(gu1[N], u1) << n;
        EXPECT_EQ(gt1[N], t1) << n;
    }
}

TEST(CountIdentity, SpotValuesFromIndependentComputation) {
    // coefficients of prod (1+t^k)^2/(1-t^k) and prod (1+t^{2k})/(1-t^k),
    // expanded separately
    const std::vector<std::uint64_t> scU{1, 3, 7, 16, 32, 61, 112, 197, 336, 560, 912};
    const std::vector<std::uint64_t> scU1{1, 1, 3, 4, 8, 11, 20, 27, 44, 60, 92};
    for (int n = 0; n <= 10; ++n) {
        EXPECT_EQ(awcsp::enum_scU(n).size(), scU[static_cast<std::size_t>(n)]);
        EXPECT_EQ(awcsp::enum_scU1(n).size(), scU1[static_cast<std::size_t>(n)]);
    }
    std::uint64_t u30 = 0;
    awcsp::for_each_scU(30, [&](const ScUElement&) { ++u30; });
    EXPECT_EQ(u30, 1392496u);
}

TEST(SymplecticPartitions, Examples) {
    const auto two = awcsp::symplectic_partitions(2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], (awcsp::SymplecticClass{Partition{1, 1}, 0, 0}));
    EXPECT_EQ(two[1], (awcsp::SymplecticClass{Partition{2}, 1, 1}));
    const auto zero = awcsp::symplectic_partitions(0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero[0], (awcsp::SymplecticClass{Partition(), 0, 0}));
    EXPECT_THROW(awcsp::symplectic_partitions(3), std::invalid_argument);
    EXPECT_THROW(awcsp::symplectic_partitions(-2), std::invalid_argument);
}

TEST(SymplecticPartitions, ClassCountIsScUUpTo15) {
    for (int n = 0; n <= 15; ++n) {
        std::uint64_t classes = 0;
        for (const auto& c : awcsp::symplectic_partitions(2 * n))
            classes += std::uint64_t{1} << c.a;
        std::uint64_t u = 0;
        awcsp::for_each_scU(n, [&](const ScUElement&) { ++u; });
        EXPECT_EQ(classes, u) << n;
    }
}

TEST(SymplecticPartitions, DictionaryWithScU) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& c : awcsp::symplectic_partitions(2 * n)) {
            const ScUElement x{n, awcsp::multiplicities_of(c.lambda), 1};
            EXPECT_NO_THROW(x.validate());
            EXPECT_EQ(c.a, x.k());
            EXPECT_EQ(c.delta == 0, x.all_even());
            EXPECT_EQ(awcsp::partition_from_multiplicities(x.mult), c.lambda);
        }
}
