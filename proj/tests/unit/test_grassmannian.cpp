#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "heapcrys/errors.hpp"
#include "heapcrys/grassmannian.hpp"
#include "heapcrys/suite.hpp"

using namespace heapcrys;

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(HEAPCRYS_FIXTURE_DIR) + "/" + name);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::shared_ptr<const Ambient> ambient_of(const char* spec, const char* word, int n) {
    const WeylGroup weyl(DynkinDiagram::from_spec(spec));
    return std::make_shared<const Ambient>(HeapModule::build(weyl, Word::parse(word)), n);
}

OrderIdeal ideal_of(const Heap& heap, const std::vector<std::pair<int, int>>& beads) {
    OrderIdeal ideal;
    for (auto [runner, index] : beads) ideal = ideal.with(heap.element_at(runner, index));
    return ideal;
}

Vector unit(int dim, int c) {
    Vector v(dim);
    v[c] = 1;
    return v;
}

}  // namespace

TEST(Grassmannian, AmbientLayout) {
    const auto amb = ambient_of("A3", "2,3,1,2", 3);
    EXPECT_EQ(amb->total_dim(), 12);
    EXPECT_EQ(amb->offset(1), 3);
    EXPECT_EQ(amb->offset(2), 9);
    EXPECT_EQ(amb->coordinate(1, 2, 1), 4);
    EXPECT_EQ(amb->kernel_coordinates(1, 1), (std::vector<int>{0, 2, 4}));
    EXPECT_EQ(amb->first_copies(1, 2), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(amb->socle_layer(1, 1).dim(), 3);
    EXPECT_EQ(amb->socle_layer(1, 2).dim(), 3);
    EXPECT_EQ(amb->socle_layer(1, 3).dim(), 6);
}

TEST(Grassmannian, PhiOfIdealIsIndicator) {
    const auto amb = ambient_of("A3", "2,3,1,2", 1);
    const Heap& heap = amb->heap();
    for (const auto& ideal : heap.order_ideals()) {
        const Submodule m = Submodule::coordinate(amb, {ideal});
        EXPECT_EQ(phi_of_module(m), Rpp::indicator(heap, ideal));
        EXPECT_TRUE(socle_mismatch(m, Rpp::indicator(heap, ideal)).empty());
    }
}

TEST(Grassmannian, WholeAmbientHasConstantPhi) {
    for (int n = 1; n <= 3; ++n) {
        const auto amb = ambient_of("D4", "1,2,3,4,2,1", n);
        const Submodule m = Submodule::whole(amb);
        EXPECT_EQ(phi_of_module(m), Rpp(std::vector<int>(amb->heap().size(), n), n));
        EXPECT_EQ(phi_of_module(Submodule::zero(amb)), Rpp::zero(amb->heap(), n));
    }
}

TEST(Grassmannian, RejectsNonClosedSubspace) {
    const auto amb = ambient_of("A3", "2,3,1,2", 1);
    // The top bead alone: its arrows land outside.
    std::vector<Subspace> parts{Subspace(1), Subspace::coordinate(2, {1}), Subspace(1)};
    EXPECT_THROW(Submodule(amb, parts), Error);
}

TEST(Grassmannian, GeneratedByClosesUnderArrows) {
    const auto amb = ambient_of("A3", "2,3,1,2", 1);
    const Submodule m = Submodule::generated_by(amb, {{1, unit(2, 1)}});
    EXPECT_EQ(m.dimension_vector(), (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(m, Submodule::whole(amb));
}

TEST(Grassmannian, DiagonalPointHasItsChainAsSubquotients) {
    const auto amb = ambient_of("A3", "2,3,1,2", 2);
    for (const auto& phi : enumerate_rpps(amb->heap(), 2)) {
        const auto chain = phi.chain();
        const Submodule m = Submodule::coordinate(amb, chain);
        EXPECT_EQ(m.subquotient_ideal(1), chain[0]);
        EXPECT_EQ(m.subquotient_ideal(2), chain[1]);
        EXPECT_EQ(phi_of_module(m), phi);
    }
}

TEST(Grassmannian, EndomorphismsCommuteWithArrows) {
    const auto amb = ambient_of("A1", "1", 1);
    EXPECT_EQ(endomorphism_basis(amb->module()).size(), 1U);

    const WeylGroup weyl(DynkinDiagram::from_spec("A3"));
    const HeapModule module = HeapModule::build(weyl, Word::parse("2,3,1,2"));
    const auto basis = endomorphism_basis(module);
    ASSERT_FALSE(basis.empty());
    const auto& arrows = module.orientation().arrows();
    for (const auto& h : basis)
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            const Matrix& ma = module.arrow_matrix(static_cast<int>(a));
            EXPECT_EQ(ma * h[arrows[a].tail], h[arrows[a].head] * ma);
        }
}

TEST(Grassmannian, SamplerTrivialCases) {
    const auto amb = ambient_of("A3", "2,3,1,2", 2);
    const ZPhiSampler sampler(amb);
    std::mt19937_64 rng(7);
    EXPECT_EQ(sampler.sample(Rpp::zero(amb->heap(), 2), rng), Submodule::zero(amb));

    const auto amb1 = ambient_of("A3", "2,3,1,2", 1);
    const ZPhiSampler single(amb1);
    for (const auto& ideal : amb1->heap().order_ideals())
        EXPECT_EQ(single.sample(Rpp::indicator(amb1->heap(), ideal), rng), Submodule::coordinate(amb1, {ideal}));
}

TEST(Grassmannian, SamplerIsDeterministic) {
    const auto amb = ambient_of("A3", "2,3,1,2", 3);
    const ZPhiSampler sampler(amb);
    const Rpp phi(std::vector<int>(amb->heap().size(), 2), 3);
    std::mt19937_64 a(derive_seed(11, 4));
    std::mt19937_64 b(derive_seed(11, 4));
    const Submodule ma = sampler.sample(phi, a);
    EXPECT_EQ(ma, sampler.sample(phi, b));
    EXPECT_EQ(ma.to_json(), submodule_from_json(ma.to_json()).to_json());

    // Different seeds move the point off the diagonal.
    std::set<std::string> distinct;
    for (std::uint64_t s = 0; s < 5; ++s) {
        std::mt19937_64 rng(derive_seed(11, s));
        distinct.insert(sampler.sample(phi, rng).to_json());
    }
    EXPECT_GT(distinct.size(), 1U);
    EXPECT_NE(derive_seed(1, 2), derive_seed(2, 1));
}

TEST(Grassmannian, MainTheoremDiamond) {
    const WeylGroup weyl(DynkinDiagram::from_spec("A3"));
    const MainTheoremReport report = verify_main_theorem(weyl, Word::parse("2,3,1,2"), 2, 100, 2024);
    EXPECT_EQ(report.rpps, 20U);
    EXPECT_EQ(report.samples, 2000U);
    EXPECT_TRUE(report.ok()) << report.witness;
}

TEST(Grassmannian, MainTheoremD4Vector) {
    const WeylGroup weyl(DynkinDiagram::from_spec("D4"));
    const Word word = weyl.longest_coset_rep({1, 2, 3});
    const MainTheoremReport report = verify_main_theorem(weyl, word, 2, 5, 99);
    EXPECT_EQ(report.rpps, 35U);  // dim V(2 omega_1) for so(8)
    EXPECT_TRUE(report.ok()) << report.witness;
}

TEST(Grassmannian, FiltrationFixtureThreeCopies) {
    const Submodule m = submodule_from_json(read_fixture("filtration_three_copies.json"));
    const Ambient& amb = m.ambient();
    const Heap& heap = amb.heap();
    EXPECT_EQ(m.dimension_vector(), (std::vector<int>{1, 4, 2}));

    const Submodule first = m.truncated(1);
    EXPECT_EQ(first.dimension_vector(), (std::vector<int>{0, 1, 0}));
    EXPECT_TRUE(first.part(1).contains(unit(6, amb.coordinate(1, 0, 1))));

    const Submodule second = m.truncated(2);
    EXPECT_EQ(second.dimension_vector(), (std::vector<int>{0, 2, 1}));
    EXPECT_TRUE(second.part(1).contains(unit(6, amb.coordinate(1, 1, 1))));
    EXPECT_TRUE(second.part(2).contains(Vector{2, 1, 0}));
    EXPECT_EQ(m.truncated(3), m);

    const int bottom = heap.element_at(1, 1);
    const int right = heap.element_at(2, 1);
    EXPECT_EQ(m.subquotient_ideal(1), OrderIdeal().with(bottom));
    EXPECT_EQ(m.subquotient_ideal(2), OrderIdeal().with(bottom).with(right));
    EXPECT_EQ(m.subquotient_ideal(3), heap.full());

    // dim(M_2 ∩ ker A_2) against the three subquotients.
    EXPECT_EQ(m.part(1).dim_meet_coordinate(amb.kernel_coordinates(1, 1)), 3);
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(m.subquotient(1, k).dim_meet_coordinate({0}), 1);
    EXPECT_TRUE(subquotient_kernel_mismatch(m).empty());
    const ConditionSummary conditions = check_all_conditions(m);
    EXPECT_TRUE(conditions.c1 && conditions.c2);
}

TEST(Grassmannian, FiltrationFixtureTwoCopies) {
    const Submodule m = submodule_from_json(read_fixture("filtration_two_copies.json"));
    const Ambient& amb = m.ambient();
    const Heap& heap = amb.heap();
    const Submodule first = m.truncated(1);
    EXPECT_EQ(first.dimension_vector(), (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(m.truncated(2), m);
    EXPECT_EQ(m.subquotient_ideal(1), ideal_of(heap, {{0, 1}, {1, 1}, {2, 1}}));
    EXPECT_EQ(m.subquotient_ideal(2), ideal_of(heap, {{1, 1}}));

    const int left = m.part(1).dim_meet_coordinate(amb.kernel_coordinates(1, 1));
    const int right = m.subquotient(1, 1).dim_meet_coordinate({0}) + m.subquotient(1, 2).dim_meet_coordinate({0});
    EXPECT_EQ(left, 1);
    EXPECT_EQ(right, 2);
    EXPECT_FALSE(subquotient_kernel_mismatch(m).empty());

    const ConditionResult r = check_c1_c2(m, 1, 2, 1);
    EXPECT_TRUE(r.c1);
    EXPECT_FALSE(r.c2);
    const ConditionSummary all = check_all_conditions(m);
    EXPECT_FALSE(all.c1);
    EXPECT_FALSE(all.c2);
    EXPECT_EQ(all.first_c1_failure, "(i=1, k=2, s=0)");
}

TEST(Grassmannian, ConditionsHoldOnSamples) {
    const auto amb = ambient_of("A3", "2,3,1,2", 3);
    const ZPhiSampler sampler(amb);
    std::mt19937_64 rng(5);
    for (const auto& phi : enumerate_rpps(amb->heap(), 3)) {
        const ConditionSummary s = check_all_conditions(sampler.sample(phi, rng));
        EXPECT_TRUE(s.c1) << phi.str() << " " << s.first_c1_failure;
        EXPECT_TRUE(s.c2) << phi.str() << " " << s.first_c2_failure;
    }
}

TEST(Grassmannian, FixtureJsonErrors) {
    EXPECT_THROW(submodule_from_json("{"), Error);
    EXPECT_THROW(submodule_from_json(R"({"type":"A3","word":"2,3,1,2","n":1,"rows":[["1"]]})"), Error);
    // u + v_1 is not homogeneous and its parts are not separately present.
    EXPECT_THROW(submodule_from_json(R"({"type":"A3","word":"2,3,1,2","n":1,"rows":[["1","1","0","0"]]})"), Error);
}

TEST(Grassmannian, SpringerFlagsAreStable) {
    for (int n = 1; n <= 2; ++n) {
        const SpringerReport report = springer_compare(4, 2, n, n == 1 ? 1 : 3, 17);
        EXPECT_EQ(report.comparisons, n == 1 ? 6U : 60U);
        EXPECT_TRUE(report.flags_stable) << report.witness;
        EXPECT_EQ(report.direct_matches, report.comparisons) << report.witness;
        EXPECT_EQ(report.crystal_matches, report.comparisons) << report.witness;
    }
}

TEST(Grassmannian, EmbeddedFixturesMatchFiles) {
    EXPECT_EQ(submodule_from_json(std::string(module_fixture("three_copies"))),
              submodule_from_json(read_fixture("filtration_three_copies.json")));
    EXPECT_EQ(submodule_from_json(std::string(module_fixture("two_copies"))),
              submodule_from_json(read_fixture("filtration_two_copies.json")));
    EXPECT_THROW((void)module_fixture("four_copies"), Error);
}
