#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "heapcrys/crystal.hpp"
#include "heapcrys/errors.hpp"

using namespace heapcrys;

namespace {

IdealCrystal atom_of(const char* spec, const char* word) {
    const WeylGroup weyl(DynkinDiagram::from_spec(spec));
    return IdealCrystal::of_word(weyl, Word::parse(word));
}

}  // namespace

TEST(Crystal, SingleFactorOperators) {
    const IdealCrystal c = atom_of("A3", "2,3,1,2");
    const OrderIdeal empty;
    EXPECT_FALSE(c.f(empty, 0).has_value());
    ASSERT_TRUE(c.f(empty, 1).has_value());
    const OrderIdeal one = *c.f(empty, 1);
    EXPECT_EQ(one.size(), 1);
    EXPECT_EQ(c.e(one, 1), empty);
    EXPECT_EQ(c.weight(empty), Weight({0, 1, 0}));
    EXPECT_EQ(c.weight(one), Weight({1, -1, 1}));
    EXPECT_EQ(c.phi(one, 0), 1);
    EXPECT_EQ(c.epsilon(one, 1), 1);
    EXPECT_EQ(c.phi(one, 1), 0);
}

TEST(Crystal, RejectsWrongHighestWeight) {
    const WeylGroup weyl(DynkinDiagram::from_spec("A3"));
    EXPECT_THROW(IdealCrystal(Heap::build(weyl, Word::parse("2,3,1,2")), Weight({1, 0, 0})), Error);
}

TEST(Crystal, SignatureCancellation) {
    // Three copies of B(w1) in A2; factor ideals chosen so the raw 1-signature is "-+-".
    const IdealCrystal atom = atom_of("A2", "2,1");
    const TensorCrystal t = TensorCrystal::power(atom, 3);
    const OrderIdeal empty;
    const OrderIdeal low1 = *atom.f(empty, 0);
    const TensorElement b{low1, empty, low1};
    EXPECT_EQ(t.signature(b, 0), "-+-");
    // "-+" cancels, leaving the final "-".
    EXPECT_EQ(t.epsilon(b, 0), 1);
    EXPECT_EQ(t.phi(b, 0), 0);
    EXPECT_FALSE(t.f(b, 0).has_value());
    const TensorElement up = *t.e(b, 0);
    EXPECT_EQ(up, (TensorElement{low1, empty, empty}));
}

TEST(Crystal, TwoFactorRule) {
    const IdealCrystal atom = atom_of("A1", "1");
    const TensorCrystal t = TensorCrystal::power(atom, 2);
    const OrderIdeal lo = OrderIdeal(1), hi;
    // B(1) x B(1) in sl2: f acts on the rightmost surviving plus.
    EXPECT_EQ(*t.f({hi, hi}, 0), (TensorElement{hi, lo}));
    EXPECT_EQ(*t.f({hi, lo}, 0), (TensorElement{lo, lo}));
    EXPECT_FALSE(t.f({lo, hi}, 0).has_value());
    EXPECT_FALSE(t.e({lo, hi}, 0).has_value());
    const auto full = lowering_closure(t, t.highest());
    EXPECT_EQ(full.size(), 3u);
}

TEST(Crystal, FullCrystalMatchesWeylDimension) {
    struct Case {
        const char* spec;
        std::vector<int> parabolic;
        std::vector<int> lambda;
        int n;
    };
    for (const Case& c : std::vector<Case>{{"A3", {0, 2}, {0, 1, 0}, 2},
                                           {"A3", {0, 2}, {0, 1, 0}, 3},
                                           {"A4", {0, 2, 3}, {0, 1, 0, 0}, 2},
                                           {"D4", {1, 2, 3}, {1, 0, 0, 0}, 2}}) {
        const WeylGroup weyl(DynkinDiagram::from_spec(c.spec));
        const IdealCrystal atom = IdealCrystal::of_word(weyl, weyl.longest_coset_rep(c.parabolic));
        const TensorCrystal t = TensorCrystal::power(atom, c.n);
        const auto component = lowering_closure(t, t.highest());
        Weight lambda(c.lambda);
        EXPECT_EQ(Rational(static_cast<long long>(component.size())), weyl.weyl_dimension(c.n * lambda)) << c.spec;
        EXPECT_EQ(crystal_axiom_violation(t, component), "") << c.spec;
    }
}

TEST(Crystal, GravsortA3) {
    const IdealCrystal atom = atom_of("A3", "2,3,1,2");
    const auto r1 = verify_gravsort(atom, atom.heap().word(), 1);
    EXPECT_TRUE(r1.ok()) << r1.witness << r1.axioms;
    EXPECT_EQ(r1.demazure_size, 6u);
    const auto r2 = verify_gravsort(atom, atom.heap().word(), 2);
    EXPECT_TRUE(r2.ok()) << r2.witness << r2.axioms;
    EXPECT_EQ(r2.demazure_size, 20u);
}

TEST(Crystal, GravsortPartialHeaps) {
    for (const char* word : {"3,4,2,3,1,2", "2,3,1,2", "3,2,4,3"}) {
        const IdealCrystal atom = atom_of("A4", word);
        for (int n = 1; n <= 3; ++n) {
            const auto r = verify_gravsort(atom, atom.heap().word(), n);
            EXPECT_TRUE(r.ok()) << word << " n=" << n << " " << r.witness << r.axioms;
        }
    }
}

TEST(Crystal, RppChainRoundTrip) {
    const IdealCrystal atom = atom_of("A3", "2,3,1,2");
    const auto rpps = enumerate_rpps(atom.heap(), 2);
    EXPECT_EQ(rpps.size(), 20u);
    for (const Rpp& p : rpps) {
        EXPECT_TRUE(p.is_valid(atom.heap()));
        EXPECT_EQ(Rpp::from_chain(atom.heap(), p.chain()), p);
    }
    EXPECT_TRUE(std::is_sorted(rpps.begin(), rpps.end()));
}

TEST(Crystal, RppWeightMatchesTensorWeight) {
    const IdealCrystal atom = atom_of("A3", "2,3,1,2");
    const TensorCrystal t = TensorCrystal::power(atom, 3);
    for (const Rpp& p : enumerate_rpps(atom.heap(), 3))
        EXPECT_EQ(p.weight(atom.heap(), atom.highest_weight()), t.weight(p.chain()));
}

TEST(Crystal, Sl3DemazureCounterexample) {
    const WeylGroup weyl(DynkinDiagram::from_spec("A2"));
    const IdealCrystal b1 = IdealCrystal::of_word(weyl, Word::parse("2,1"));
    const IdealCrystal b2 = IdealCrystal::of_word(weyl, Word::parse("1,2"));
    ASSERT_EQ(b1.highest_weight(), Weight({1, 0}));
    ASSERT_EQ(b2.highest_weight(), Weight({0, 1}));
    const Word w = Word::parse("1,2");

    const auto d1 = generate_demazure(TensorCrystal({b1}), w);
    const auto d2 = generate_demazure(TensorCrystal({b2}), w);
    EXPECT_EQ(d1.size(), 2u);
    EXPECT_EQ(d2.size(), 3u);

    const TensorCrystal both({b1, b2});
    EXPECT_EQ(generate_demazure(both, w).size(), 5u);
    const auto component = lowering_closure(both, both.highest());
    EXPECT_EQ(component.size(), 8u);
    const std::set<std::pair<std::uint64_t, std::uint64_t>> comp = [&] {
        std::set<std::pair<std::uint64_t, std::uint64_t>> s;
        for (const auto& b : component) s.emplace(b[0].bits(), b[1].bits());
        return s;
    }();
    int intersection = 0;
    for (const auto& x : d1)
        for (const auto& y : d2) intersection += comp.count({x[0].bits(), y[0].bits()});
    EXPECT_EQ(intersection, 6);
}

TEST(Crystal, DotOutputListsEveryEdge) {
    const IdealCrystal atom = atom_of("A3", "2,3,1,2");
    const TensorCrystal t = TensorCrystal::power(atom, 1);
    const auto elements = lowering_closure(t, t.highest());
    const CrystalGraph g = crystal_graph(t, elements);
    const std::string dot = crystal_to_dot(g, {});
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 6);  // 6 elements, 6 edges in B(w2)
    EXPECT_NE(dot.find("digraph"), std::string::npos);
}

TEST(Crystal, DominantMinusculeCountsAgreeWithBruteForce) {
    // Brute force: every reduced word of length <= 6 in A3 that is dominant minuscule, up to commutation.
    const WeylGroup weyl(DynkinDiagram::from_spec("A3"));
    const auto listed = weyl.dominant_minuscule_elements(6);
    std::set<std::vector<int>> brute;
    std::vector<int> letters;
    auto grow = [&](auto&& self) -> void {
        if (!letters.empty()) {
            const Word w(letters);
            if (weyl.is_reduced(w) && weyl.is_dominant_minuscule(w)) {
                const Heap h = Heap::build(weyl, w);
                std::vector<int> key;
                for (int x = 0; x < h.size(); ++x) key.push_back(h.runner(x));
                for (int x = 0; x < h.size(); ++x) key.push_back(static_cast<int>(h.strictly_below(x)));
                brute.insert(key);
            }
        }
        if (letters.size() == 6) return;
        for (int i = 0; i < 3; ++i) {
            letters.push_back(i);
            self(self);
            letters.pop_back();
        }
    };
    grow(grow);
    EXPECT_EQ(listed.size(), brute.size());
    EXPECT_EQ(listed.size(), 12u);
}
