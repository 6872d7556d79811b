#include <gtest/gtest.h>

#include <random>

#include "heapcrys/dynkin.hpp"
#include "heapcrys/errors.hpp"

using namespace heapcrys;

TEST(Dynkin, A3CartanMatrix) {
    const auto d = DynkinDiagram::from_spec("A3");
    EXPECT_EQ(d.rank(), 3);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(d.cartan(i, i), 2);
    EXPECT_EQ(d.cartan(0, 1), -1);
    EXPECT_EQ(d.cartan(1, 2), -1);
    EXPECT_EQ(d.cartan(0, 2), 0);
}

TEST(Dynkin, D4BranchVertex) {
    const auto d = DynkinDiagram::from_spec("D4");
    EXPECT_EQ(d.neighbours(1), (std::vector<int>{0, 2, 3}));
}

TEST(Dynkin, ENumbering) {
    const auto d = DynkinDiagram::from_spec("E6");
    EXPECT_TRUE(d.adjacent(5, 2));
    EXPECT_TRUE(d.adjacent(3, 4));
    EXPECT_EQ(d.neighbours(2).size(), 3U);
}

TEST(Dynkin, RejectsCycle) {
    EXPECT_THROW(DynkinDiagram::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}), Error);
    EXPECT_THROW(DynkinDiagram::from_json(R"({"vertices":[1,2,3],"edges":[[1,2],[2,3],[3,1]]})"), Error);
}

TEST(Dynkin, RejectsAffineAndHighDegree) {
    // Affine D4: one centre with four leaves.
    EXPECT_THROW(DynkinDiagram::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), Error);
    // Affine E6 (three arms of length 2).
    EXPECT_THROW(DynkinDiagram::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}), Error);
}

TEST(Dynkin, UnionSpec) {
    const auto d = DynkinDiagram::from_spec("A2+A1");
    EXPECT_EQ(d.rank(), 3);
    EXPECT_EQ(d.components().size(), 2U);
    const auto c = TwoColouring::canonical(d);
    EXPECT_EQ(c[0], Sign::Plus);
    EXPECT_EQ(c[1], Sign::Minus);
    EXPECT_EQ(c[2], Sign::Plus);
}

TEST(Dynkin, PairingAndReflection) {
    const auto d = DynkinDiagram::from_spec("A3");
    EXPECT_EQ(d.fundamental(0)[0], 1);
    EXPECT_EQ(d.reflect(1, d.fundamental(1)), Weight({1, -1, 1}));
    EXPECT_EQ(d.reflect(0, d.fundamental(1)), d.fundamental(1));
}

TEST(Dynkin, ReflectionIsInvolution) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coord(-5, 5);
    for (const char* spec : {"A4", "D5", "E6", "E8"}) {
        const auto d = DynkinDiagram::from_spec(spec);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> c(d.rank());
            for (auto& x : c) x = coord(rng);
            const Weight w(c);
            for (int i = 0; i < d.rank(); ++i) EXPECT_EQ(d.reflect(i, d.reflect(i, w)), w);
        }
    }
}

TEST(Dynkin, ColouringAndOrientation) {
    const auto a2 = DynkinDiagram::from_spec("A2");
    const auto c2 = TwoColouring::canonical(a2);
    EXPECT_EQ(c2[0], Sign::Plus);
    EXPECT_EQ(c2[1], Sign::Minus);
    const auto o2 = Orientation::from_colouring(a2, c2);
    ASSERT_EQ(o2.arrows().size(), 2U);
    EXPECT_EQ(o2.arrows()[0].tail, 1);
    EXPECT_EQ(o2.arrows()[0].head, 0);
    EXPECT_EQ(o2.arrows()[0].epsilon(), 1);
    EXPECT_EQ(o2.arrows()[1].epsilon(), -1);

    for (const char* spec : {"A3", "D5", "E7", "A2+A3"}) {
        const auto d = DynkinDiagram::from_spec(spec);
        const auto c = TwoColouring::canonical(d);
        EXPECT_TRUE(c.is_proper(d));
        const auto o = Orientation::from_colouring(d, c);
        for (std::size_t a = 0; a < o.arrows().size(); a += 2) {
            EXPECT_EQ(c[o.arrows()[a].tail], Sign::Minus);
            EXPECT_EQ(c[o.arrows()[a].head], Sign::Plus);
        }
    }
}

TEST(Dynkin, WeightParsing) {
    EXPECT_EQ(Weight::parse("2w1+w3", 3), Weight({2, 0, 1}));
    EXPECT_EQ(Weight::parse("w2", 3).str(), "w2");
    EXPECT_EQ(Weight::parse("1,0,1", 3), Weight({1, 0, 1}));
}
