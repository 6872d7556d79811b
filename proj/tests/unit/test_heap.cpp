#include <gtest/gtest.h>

#include <random>
#include <set>

#include "heapcrys/errors.hpp"
#include "heapcrys/heap.hpp"

using namespace heapcrys;

namespace {

Heap heap_of(const char* spec, const char* word) {
    const WeylGroup weyl(DynkinDiagram::from_spec(spec));
    return Heap::build(weyl, Word::parse(word));
}

// Brute force over all subsets.
std::size_t count_ideals_by_subsets(const Heap& h) {
    std::size_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << h.size()); ++bits)
        count += h.is_ideal(OrderIdeal(bits));
    return count;
}

}  // namespace

TEST(Heap, A4FigureHeap) {
    const Heap h = heap_of("A4", "3,4,2,3,1,2");
    EXPECT_EQ(h.size(), 6);
    EXPECT_EQ(h.fibre_size(0), 1);
    EXPECT_EQ(h.fibre_size(1), 2);
    EXPECT_EQ(h.fibre_size(2), 2);
    EXPECT_EQ(h.fibre_size(3), 1);
    EXPECT_EQ(h.level(h.element_at(1, 1)), 1);
    EXPECT_EQ(h.max_level(), 4);
}

TEST(Heap, A3Diamond) {
    const Heap h = heap_of("A3", "2,3,1,2");
    const int top = h.element_at(1, 2);
    const int bottom = h.element_at(1, 1);
    EXPECT_EQ(h.lower_covers(top), (std::vector<int>{h.element_at(0, 1), h.element_at(2, 1)}));
    EXPECT_EQ(h.lower_covers(h.element_at(0, 1)), std::vector<int>{bottom});
    EXPECT_EQ(h.lower_covers(h.element_at(2, 1)), std::vector<int>{bottom});
    EXPECT_EQ(h.order_ideals().size(), 6U);
}

TEST(Heap, SingleLetterAndChain) {
    const Heap one = heap_of("A2", "1");
    EXPECT_EQ(one.size(), 1);
    EXPECT_TRUE(one.edges().empty());
    EXPECT_EQ(one.level(0), 1);

    const Heap chain = heap_of("A3", "1,2,3");
    EXPECT_EQ(chain.order_ideals().size(), 4U);
    const auto order = chain.good_order();
    EXPECT_EQ(order, (std::vector<int>{chain.element_at(2, 1), chain.element_at(1, 1), chain.element_at(0, 1)}));
}

TEST(Heap, EmptyHeap) {
    const Heap h = heap_of("A3", "");
    EXPECT_EQ(h.size(), 0);
    const auto ideals = h.order_ideals();
    ASSERT_EQ(ideals.size(), 1U);
    EXPECT_TRUE(ideals[0].empty());
}

TEST(Heap, RejectsBadWords) {
    const WeylGroup a2(DynkinDiagram::from_spec("A2"));
    EXPECT_THROW(Heap::build(a2, Word::parse("1,2,1")), Error);
    EXPECT_THROW(Heap::build(a2, Word::parse("1,1")), Error);
    EXPECT_THROW(Heap::build(a2, Word::parse("3")), Error);
}

TEST(Heap, CanonicalIdealOrder) {
    const Heap h = heap_of("A3", "2,3,1,2");
    const auto ideals = h.order_ideals();
    for (std::size_t k = 1; k < ideals.size(); ++k) {
        EXPECT_TRUE(canonical_less(ideals[k - 1], ideals[k]));
        const auto a = ideals[k - 1].members();
        const auto b = ideals[k].members();
        if (a.size() == b.size()) EXPECT_LT(a, b);
    }
}

TEST(Heap, GoodOrderAcceptsBothDiamondOrders) {
    const Heap h = heap_of("A3", "2,3,1,2");
    const int b = h.element_at(1, 1);
    const int l = h.element_at(0, 1);
    const int r = h.element_at(2, 1);
    const int t = h.element_at(1, 2);
    EXPECT_TRUE(h.is_good_order({b, l, r, t}));
    EXPECT_TRUE(h.is_good_order({b, r, l, t}));
    EXPECT_FALSE(h.is_good_order({l, b, r, t}));
    EXPECT_TRUE(h.is_good_order(h.good_order()));
}

TEST(Heap, IdealsMatchWeakOrderIntervals) {
    for (const char* spec : {"A4", "D5", "E6"}) {
        const WeylGroup weyl(DynkinDiagram::from_spec(spec));
        for (const Word& w : weyl.dominant_minuscule_elements(12)) {
            const Heap h = Heap::build(weyl, w);
            const auto ideals = h.order_ideals();
            EXPECT_EQ(ideals.size(), weyl.lower_interval(w).size()) << spec << " " << w.str();
            if (h.size() <= 14) EXPECT_EQ(ideals.size(), count_ideals_by_subsets(h)) << w.str();
            // Ideal size equals length of the corresponding prefix element.
            for (const auto& ideal : ideals) {
                std::vector<int> order;
                auto remaining = ideal;
                while (!remaining.empty()) {
                    const int x = h.removable(remaining).front();
                    order.push_back(x);
                    remaining = remaining.without(x);
                }
                std::reverse(order.begin(), order.end());
                EXPECT_EQ(weyl.length(h.word_from_order(order)), ideal.size());
            }
        }
    }
}

TEST(Heap, StructuralInvariants) {
    std::mt19937_64 rng(11);
    for (const char* spec : {"A4", "D5", "E6"}) {
        const WeylGroup weyl(DynkinDiagram::from_spec(spec));
        for (const Word& w : weyl.dominant_minuscule_elements(12)) {
            const Heap h = Heap::build(weyl, w);
            for (const auto& e : h.edges()) EXPECT_EQ(h.level(e.upper), h.level(e.lower) + 1);
            for (int i = 0; i < weyl.rank(); ++i)
                for (int s = 1; s < h.fibre_size(i); ++s)
                    EXPECT_TRUE(h.less(h.element_at(i, s), h.element_at(i, s + 1)));
            const auto order = h.good_order();
            EXPECT_TRUE(h.is_good_order(order)) << w.str();
            const auto cls = weyl.commutation_class(w);
            const Word other = cls[std::uniform_int_distribution<std::size_t>(0, cls.size() - 1)(rng)];
            EXPECT_EQ(Heap::build(weyl, other), h) << w.str() << " vs " << other.str();
            EXPECT_EQ(Heap::build(weyl, h.word_from_order(order)), h);
        }
    }
}

TEST(Heap, FourColouringExamples) {
    const Heap h = heap_of("A3", "2,3,1,2");
    const auto d = h.diagram();
    const TwoColouring flipped = TwoColouring::canonical(d).flipped();
    const auto c = four_colouring(h, flipped);
    EXPECT_TRUE(colouring_violation(h, flipped, c).empty());
    // Top bead sits on the (+)-runner 2 under the flipped colouring.
    std::set<Colour> top;
    std::set<Colour> bottom;
    for (std::size_t k = 0; k < h.edges().size(); ++k)
        (h.runner(h.edges()[k].upper) == 1 ? top : bottom).insert(c[k]);
    EXPECT_EQ(top, (std::set<Colour>{Colour::Green, Colour::Yellow}));
    EXPECT_EQ(bottom, (std::set<Colour>{Colour::Red, Colour::Blue}));

    const Heap single = heap_of("A2", "1,2");
    const TwoColouring canonical = TwoColouring::canonical(single.diagram());
    const auto cs = four_colouring(single, canonical);
    ASSERT_EQ(cs.size(), 1U);
    EXPECT_TRUE(cs[0] == Colour::Green || cs[0] == Colour::Yellow);
}

TEST(Heap, FourColouringValidOnSuiteHeaps) {
    for (const char* spec : {"A4", "D5", "E6", "E7"}) {
        const WeylGroup weyl(DynkinDiagram::from_spec(spec), WeylBounds{64, 10000});
        const auto colouring = TwoColouring::canonical(weyl.diagram());
        for (const Word& w : weyl.dominant_minuscule_elements(spec[0] == 'E' && spec[1] == '7' ? 27 : 16)) {
            const Heap h = Heap::build(weyl, w);
            EXPECT_NO_THROW((void)four_colouring(h, colouring)) << spec << " " << w.str();
            EXPECT_NO_THROW((void)four_colouring(h, colouring.flipped())) << spec << " " << w.str();
        }
    }
}

TEST(Heap, ColouringViolationsAreDetected) {
    const Heap h = heap_of("A3", "2,3,1,2");
    const auto colouring = TwoColouring::canonical(h.diagram());
    auto c = four_colouring(h, colouring);
    auto same = c;
    same[0] = same[1];
    EXPECT_FALSE(colouring_violation(h, colouring, same).empty());
    const auto all = all_valid_colourings(h, colouring);
    EXPECT_GE(all.size(), 2U);
    for (const auto& v : all) EXPECT_TRUE(colouring_violation(h, colouring, v).empty());
}

TEST(Heap, DotExport) {
    const Heap h = heap_of("A4", "3,4,2,3,1,2");
    const auto dot = heap_to_dot(h);
    int nodes = 0;
    for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
    EXPECT_EQ(nodes, 6);
}

TEST(Heap, TripleCoveredBeadRelaxesEdgeRule) {
    // The bottom bead on runner 3 is covered by beads on runners 2, 4 and 5.
    const Heap h = heap_of("D5", "5,4,2,3");
    EXPECT_EQ(h.upper_covers(h.element_at(2, 1)).size(), 3U);
    const auto colouring = TwoColouring::canonical(h.diagram());
    const auto c = four_colouring(h, colouring);
    EXPECT_TRUE(colouring_violation(h, colouring, c).empty());
    EXPECT_FALSE(all_valid_colourings(h, colouring).empty());
}
