// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <cmath>

#include "vve/rng.hpp"

using namespace vve;

// Known-answer vectors published with the Random123 reference implementation.
TEST(PhiloxTest, KnownAnswers) {
    EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}),
              (Philox4x32Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
    EXPECT_EQ(philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}),
              (Philox4x32Block{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
    EXPECT_EQ(philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}),
              (Philox4x32Block{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(NormalStreamTest, Deterministic) {
    NormalStream a(42, 3), b(42, 3);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.normal(), b.normal());
}

TEST(NormalStreamTest, StreamsDiffer) {
    NormalStream a(42, 0), b(42, 1), c(43, 0);
    const double x = a.normal();
    EXPECT_NE(x, b.normal());
    EXPECT_NE(x, c.normal());
}

TEST(NormalStreamTest, SeekMatchesSequentialDraws) {
    NormalStream sequential(9, 5);
    std::vector<double> draws;
    for (int i = 0; i < 17; ++i) draws.push_back(sequential.normal());
    for (std::uint64_t i : {0u, 1u, 6u, 11u, 16u}) {
        NormalStream jumped(9, 5);
        jumped.seek(i);
        EXPECT_EQ(jumped.normal(), draws[i]) << i;
    }
}

TEST(NormalStreamTest, MomentsOfStandardNormal) {
    NormalStream s(2718, 0);
    constexpr int n = 200000;
    double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = s.normal();
        sum += z;
        sum2 += z * z;
        sum4 += z * z * z * z;
    }
    EXPECT_NEAR(sum / n, 0.0, 4.0 / std::sqrt(n));
    EXPECT_NEAR(sum2 / n, 1.0, 4.0 * std::sqrt(2.0 / n));
    EXPECT_NEAR(sum4 / n, 3.0, 4.0 * std::sqrt(96.0 / n));
}

TEST(UniformTest, OpenInterval) {
    EXPECT_GT(uniform_open(0, 0), 0.0);
    EXPECT_LT(uniform_open(0xffffffffu, 0xffffffffu), 1.0);
}
