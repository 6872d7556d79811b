#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "heapcrys/errors.hpp"
#include "heapcrys/weyl.hpp"

using namespace heapcrys;

namespace {

// Type A oracle: a word in A_{m-1} as a permutation of {0..m-1}.
std::vector<int> permutation_of(const Word& w, int m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    for (int letter : w.letters()) std::swap(p[letter], p[letter + 1]);
    return p;
}

int inversions(const std::vector<int>& p) {
    int count = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b) count += p[a] > p[b];
    return count;
}

bool avoids_321(const std::vector<int>& p) {
    const auto n = p.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (p[a] > p[b] && p[b] > p[c]) return false;
    return true;
}

}  // namespace

TEST(Weyl, ReducedExamples) {
    const WeylGroup a2(DynkinDiagram::from_spec("A2"));
    EXPECT_TRUE(a2.is_reduced(Word::parse("1,2,1")));
    EXPECT_FALSE(a2.is_reduced(Word::parse("1,1")));
    const WeylGroup a4(DynkinDiagram::from_spec("A4"));
    EXPECT_TRUE(a4.is_reduced(Word::parse("3,4,2,3,1,2")));
    EXPECT_EQ(a4.length(Word::parse("3,4,2,3,1,2")), 6);
}

TEST(Weyl, LengthMatchesPermutationInversions) {
    const WeylGroup a4(DynkinDiagram::from_spec("A4"));
    std::vector<int> letters;
    // Every word of length <= 6 over A4.
    std::function<void()> walk = [&] {
        const Word w(letters);
        EXPECT_EQ(a4.length(w), inversions(permutation_of(w, 5))) << w.str();
        if (letters.size() == 6) return;
        for (int i = 0; i < 4; ++i) {
            letters.push_back(i);
            walk();
            letters.pop_back();
        }
    };
    walk();
}

TEST(Weyl, FullyCommutativeExamples) {
    const WeylGroup a3(DynkinDiagram::from_spec("A3"));
    EXPECT_TRUE(a3.is_fully_commutative(Word::parse("2,1,3,2")));
    const WeylGroup a2(DynkinDiagram::from_spec("A2"));
    EXPECT_FALSE(a2.is_fully_commutative(Word::parse("1,2,1")));
    const WeylGroup a4(DynkinDiagram::from_spec("A4"));
    EXPECT_TRUE(a4.is_fully_commutative(Word::parse("3,4,2,3,1,2")));
    EXPECT_TRUE(a4.is_fully_commutative_by_search(Word::parse("3,4,2,3,1,2")));
}

TEST(Weyl, FullyCommutativeMatches321Avoidance) {
    const WeylGroup a4(DynkinDiagram::from_spec("A4"));
    int checked = 0;
    a4.for_each_reduced_word(8, [&](const std::vector<int>& letters) {
        const Word w(letters);
        const bool fc = a4.is_fully_commutative(w);
        EXPECT_EQ(fc, avoids_321(permutation_of(w, 5))) << w.str();
        ++checked;
    });
    EXPECT_GT(checked, 1000);
}

TEST(Weyl, SpacingCriterionMatchesCommutationClassSearch) {
    for (const char* spec : {"D4", "D5"}) {
        const WeylGroup weyl(DynkinDiagram::from_spec(spec));
        weyl.for_each_reduced_word(7, [&](const std::vector<int>& letters) {
            const Word w(letters);
            EXPECT_EQ(weyl.is_fully_commutative(w), weyl.is_fully_commutative_by_search(w)) << spec << " " << w.str();
        });
    }
}

TEST(Weyl, MinusculeExamples) {
    const WeylGroup d4(DynkinDiagram::from_spec("D4"));
    EXPECT_FALSE(d4.is_minuscule(Word::parse("2,1,3,4,2")));
    EXPECT_FALSE(d4.is_dominant_minuscule(Word::parse("2,1,3,4,2")));
    const WeylGroup d5(DynkinDiagram::from_spec("D5"));
    EXPECT_TRUE(d5.is_dominant_minuscule(Word::parse("5,3,2,4,1,3,2,5,3,4")));
    const WeylGroup a4(DynkinDiagram::from_spec("A4"));
    const Word w = Word::parse("3,4,2,3,1,2");
    EXPECT_TRUE(a4.is_dominant_minuscule(w));
    EXPECT_TRUE(a4.is_lambda_minuscule(w, a4.witnesses(w).minimal));
}

TEST(Weyl, Witnesses) {
    const WeylGroup d4(DynkinDiagram::from_spec("D4"));
    const auto wd = d4.witnesses(Word::parse("1,3,4,2"));
    EXPECT_EQ(wd.minimal, Weight::fundamental(4, 1));
    EXPECT_TRUE(wd.free_directions.empty());
    const WeylGroup a3(DynkinDiagram::from_spec("A3"));
    EXPECT_EQ(a3.witnesses(Word::parse("2,3,1,2")).minimal, Weight::fundamental(3, 1));
    const WeylGroup a4(DynkinDiagram::from_spec("A4"));
    const auto partial = a4.witnesses(Word::parse("2,1"));
    EXPECT_EQ(partial.free_directions, (std::vector<int>{2, 3}));
    EXPECT_THROW((void)d4.witnesses(Word::parse("2,1,3,4,2")), Error);
}

TEST(Weyl, LongestCosetRepresentatives) {
    const WeylGroup a3(DynkinDiagram::from_spec("A3"));
    const Word w = a3.longest_coset_rep({0, 2});
    EXPECT_EQ(w.length(), 4);
    const auto cls = a3.commutation_class(w);
    EXPECT_NE(std::find(cls.begin(), cls.end(), Word::parse("2,3,1,2")), cls.end());
    EXPECT_EQ(a3.longest_coset_rep({0, 1, 2}).length(), 0);

    const WeylGroup a4(DynkinDiagram::from_spec("A4"));
    const Word w4 = a4.longest_coset_rep({0, 2, 3});
    EXPECT_EQ(w4.length(), 6);
    const auto cls4 = a4.commutation_class(w4);
    EXPECT_NE(std::find(cls4.begin(), cls4.end(), Word::parse("3,4,2,3,1,2")), cls4.end());
}

TEST(Weyl, CosetCountsAndOrbitSizes) {
    struct Case {
        const char* spec;
        int vertex;
        std::size_t count;
        int length;
    };
    for (const Case& c : {Case{"A3", 1, 6, 4}, Case{"A4", 1, 10, 6}, Case{"D4", 0, 8, 6}, Case{"D5", 4, 16, 10},
                          Case{"E6", 0, 27, 16}, Case{"E7", 5, 56, 27}}) {
        const WeylGroup weyl(DynkinDiagram::from_spec(c.spec));
        const Weight lambda = weyl.diagram().fundamental(c.vertex);
        const auto J = WeylGroup::stabiliser(lambda);
        EXPECT_EQ(weyl.coset_representatives(J).size(), c.count) << c.spec;
        EXPECT_EQ(weyl.orbit_size(lambda), c.count) << c.spec;
        EXPECT_EQ(weyl.longest_coset_rep(J).length(), c.length) << c.spec;
        EXPECT_TRUE(weyl.is_minuscule_weight(lambda));
        EXPECT_EQ(weyl.weyl_dimension(lambda), Rational(static_cast<long long>(c.count))) << c.spec;
    }
}

TEST(Weyl, WeylDimensionKnownValues) {
    const WeylGroup a3(DynkinDiagram::from_spec("A3"));
    EXPECT_EQ(a3.weyl_dimension(Weight({0, 2, 0})), Rational(20));
    EXPECT_EQ(a3.weyl_dimension(Weight({1, 1, 1})), Rational(64));
    const WeylGroup e8(DynkinDiagram::from_spec("E8"));
    EXPECT_EQ(e8.weyl_dimension(Weight::fundamental(8, 0)), Rational(3875));
}

TEST(Weyl, LongestElementAndTheta) {
    const WeylGroup a3(DynkinDiagram::from_spec("A3"));
    EXPECT_EQ(a3.longest_element({0, 1, 2}).length(), 6);
    EXPECT_EQ(a3.theta({0, 1, 2}), (std::vector<int>{2, 1, 0}));
    const WeylGroup d4(DynkinDiagram::from_spec("D4"));
    EXPECT_EQ(d4.theta({0, 1, 2, 3}), (std::vector<int>{0, 1, 2, 3}));
    const WeylGroup d5(DynkinDiagram::from_spec("D5"));
    EXPECT_EQ(d5.theta({0, 1, 2, 3, 4}), (std::vector<int>{0, 1, 2, 4, 3}));
    EXPECT_EQ(d5.theta({0, 1}), (std::vector<int>{1, 0, 2, 3, 4}));
}

TEST(Weyl, ReducedWordCountOfLongestA3) {
    const WeylGroup a3(DynkinDiagram::from_spec("A3"));
    int count = 0;
    a3.for_each_reduced_word(6, [&](const std::vector<int>& letters) { count += letters.size() == 6; });
    EXPECT_EQ(count, 16);
}

TEST(Weyl, LowerIntervalIsGraded) {
    const WeylGroup a4(DynkinDiagram::from_spec("A4"));
    const auto interval = a4.lower_interval(Word::parse("3,4,2,3,1,2"));
    EXPECT_EQ(interval.size(), 10U);
    std::vector<int> by_length(7, 0);
    for (const auto& key : interval) ++by_length[a4.reduced_word_of(key).length()];
    EXPECT_EQ(by_length, (std::vector<int>{1, 1, 2, 2, 2, 1, 1}));
}
