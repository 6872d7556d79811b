#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "heapcrys/crystal.hpp"
#include "heapcrys/linalg.hpp"
#include "heapcrys/preproj.hpp"
#include "heapcrys/tableaux.hpp"

namespace heapcrys {

// CH(w)^{⊕n}. At vertex i the coordinates are copy * dim_i + (s - 1) for bead x_i^s, copies 0-based.
class Ambient {
public:
    Ambient(HeapModule module, int copies);

    [[nodiscard]] const HeapModule& module() const { return module_; }
    [[nodiscard]] const Heap& heap() const { return module_.heap(); }
    [[nodiscard]] int copies() const { return copies_; }
    [[nodiscard]] int rank() const { return module_.rank(); }
    [[nodiscard]] int fibre(int vertex) const { return module_.dim(vertex); }
    [[nodiscard]] int dim(int vertex) const { return copies_ * module_.dim(vertex); }
    [[nodiscard]] int total_dim() const;
    [[nodiscard]] int coordinate(int vertex, int copy, int bead_index) const {
        return copy * module_.dim(vertex) + bead_index - 1;
    }
    // Offset of vertex i in the flat basis ordered by vertex, then copy, then bead.
    [[nodiscard]] int offset(int vertex) const;

    [[nodiscard]] const Matrix& arrow(int a) const { return arrows_[a]; }
    // A_i on every copy.
    [[nodiscard]] const Matrix& nilpotent(int vertex) const { return nilpotents_[vertex]; }
    [[nodiscard]] const Matrix& nilpotent_power(int vertex, int s) const { return nilpotent_powers_[vertex][s]; }
    // ker A_i^s: the bottom s beads of every copy.
    [[nodiscard]] std::vector<int> kernel_coordinates(int vertex, int s) const;
    // Copies 0..k-1.
    [[nodiscard]] std::vector<int> first_copies(int vertex, int k) const;
    // soc^k of the ambient at vertex i (kernel of all paths of length k).
    [[nodiscard]] const Subspace& socle_layer(int vertex, int k) const;
    // Projection onto copy `copy` at vertex i, a (fibre x dim) matrix.
    [[nodiscard]] Matrix projection(int vertex, int copy) const;

private:
    HeapModule module_;
    int copies_;
    std::vector<Matrix> arrows_;
    std::vector<Matrix> nilpotents_;
    std::vector<std::vector<Matrix>> nilpotent_powers_;
    std::vector<std::vector<Subspace>> socle_layers_;
};

// A graded, arrow-closed subspace of the ambient.
class Submodule {
public:
    Submodule(std::shared_ptr<const Ambient> ambient, std::vector<Subspace> parts);
    static Submodule zero(std::shared_ptr<const Ambient> ambient);
    static Submodule whole(std::shared_ptr<const Ambient> ambient);
    // Smallest submodule containing the homogeneous generators (vertex, vector).
    static Submodule generated_by(std::shared_ptr<const Ambient> ambient,
                                  const std::vector<std::pair<int, Vector>>& generators);
    // Copy k carries the coordinate submodule spanned by ideals[k].
    static Submodule coordinate(std::shared_ptr<const Ambient> ambient, const std::vector<OrderIdeal>& ideals);

    [[nodiscard]] const Ambient& ambient() const { return *ambient_; }
    [[nodiscard]] const std::shared_ptr<const Ambient>& ambient_ptr() const { return ambient_; }
    [[nodiscard]] const Subspace& part(int vertex) const { return parts_[vertex]; }
    [[nodiscard]] std::vector<int> dimension_vector() const;
    [[nodiscard]] int dim() const;

    // M^{<=k} = M ∩ (copies 1..k); k = 0 gives 0.
    [[nodiscard]] Submodule truncated(int k) const;
    // M^k = M^{<=k} / M^{<=k-1}, realised as the projection of M^{<=k}_i onto copy k (1-based).
    [[nodiscard]] Subspace subquotient(int vertex, int k) const;
    // The ideal of M^k when every part of it is a coordinate subspace.
    [[nodiscard]] std::optional<OrderIdeal> subquotient_ideal(int k) const;

    friend bool operator==(const Submodule& a, const Submodule& b) { return a.parts_ == b.parts_; }

    // {"type","word","n","rows":[["p/q",...],...]} over the flat basis.
    [[nodiscard]] std::string to_json() const;

private:
    std::shared_ptr<const Ambient> ambient_;
    std::vector<Subspace> parts_;
};

// Loads a module fixture; the ambient is built from "type", "word" and "n".
Submodule submodule_from_json(const std::string& text);

// Phi_M(x_i^s) = dim(M_i ∩ ker A_i^s) - dim(M_i ∩ ker A_i^{s-1}); not necessarily an RPP.
Rpp phi_of_module(const Submodule& m);
// SD_M(i, k) for k = 1..max level + 1, keyed by (vertex, level).
std::map<std::pair<int, int>, int> socle_dimension_matrix(const Submodule& m);
// Empty when SD_M agrees with Phi_M on (runner, level) and vanishes elsewhere.
std::string socle_mismatch(const Submodule& m, const Rpp& phi);
// Empty when dim(M_i ∩ ker A_i^s) = sum_k dim(M^k_i ∩ ker A_i^s) for all i, s.
std::string subquotient_kernel_mismatch(const Submodule& m);

struct ConditionResult {
    bool c1 = true;
    bool c2 = true;
};
// C1(i,k,s): A^s(M_i^{<=k-1}) not inside M_i^{<=k-2} forces A^s(M_i^{<=k}) not inside M_i^{<=k-1}.
// C2(i,k,s): A^s(M_i^{<=k}) != 0 forces A^s(M_i^{<=k}) not inside M_i^{<=k-1}.
ConditionResult check_c1_c2(const Submodule& m, int vertex, int k, int s);
// Both conditions over every i, k = 1..n, s = 0..fibre size, with the first failing triple.
struct ConditionSummary {
    bool c1 = true;
    bool c2 = true;
    std::string first_c1_failure;
    std::string first_c2_failure;
};
ConditionSummary check_all_conditions(const Submodule& m);

// Basis of End_Π(CH(w)) as per-vertex matrix tuples.
std::vector<std::vector<Matrix>> endomorphism_basis(const HeapModule& module);

struct SamplerConfig {
    int coefficient_range = 9;
    int retries = 32;
};

// Draws M in Z(Phi)°: M = sum_k of the image of C phi^k under x -> (h_1k x, ..., h_{k-1,k} x, x, 0, ...)
// with random endomorphisms h_jk.
class ZPhiSampler {
public:
    ZPhiSampler(std::shared_ptr<const Ambient> ambient, SamplerConfig config = {});
    [[nodiscard]] Submodule sample(const Rpp& phi, std::mt19937_64& rng) const;
    [[nodiscard]] const std::shared_ptr<const Ambient>& ambient() const { return ambient_; }
    [[nodiscard]] std::size_t endomorphism_dim() const { return basis_.size(); }

private:
    std::shared_ptr<const Ambient> ambient_;
    SamplerConfig config_;
    std::vector<std::vector<Matrix>> basis_;
};

// Independent per-task seed from (task id, root seed).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t task);

struct MainTheoremReport {
    std::size_t rpps = 0;
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::string witness;
    [[nodiscard]] bool ok() const { return failures == 0 && rpps > 0; }
};
// For every Phi in RPP(w, n) and every seed: Phi_M = Phi, the kernel-dimension identity, SD_M = Phi
// on H(w) and zero elsewhere, and injectivity of Phi -> Phi_M.
MainTheoremReport verify_main_theorem(const WeylGroup& weyl, const Word& word, int n, int seeds,
                                      std::uint64_t root_seed);

// Type A comparison with the Springer fibre of a nilpotent with n Jordan blocks of size p.
struct SpringerFlag {
    std::vector<Subspace> spaces;  // V_0 ⊆ ... ⊆ V_m inside CH(w)_p^{⊕n}
    bool stable = false;           // A V_i ⊆ V_{i-1} and the chain increases
};
SpringerFlag springer_flag(const Submodule& m, int p);
// Psi_V: the tableau whose first i labels form the transpose of the Jordan type of A on V_i.
Tableau springer_tableau(const Submodule& m, const SpringerFlag& flag, int p);

struct SpringerReport {
    std::size_t comparisons = 0;
    std::size_t twisted_matches = 0;  // Psi_V = xi(tableau of Phi_M)
    std::size_t direct_matches = 0;   // Psi_V = tableau of Phi_M
    std::size_t crystal_matches = 0;  // Psi_V = xi(crystal-isomorphic tableau of Phi_M)
    bool flags_stable = true;
    std::string witness;
};
// n = 1 runs over every submodule (the order ideals); n >= 2 samples each Phi with `seeds` seeds.
SpringerReport springer_compare(int m, int p, int n, int seeds, std::uint64_t root_seed);

}  // namespace heapcrys
