#pragma once

#include <string>
#include <vector>

#include "heapcrys/crystal.hpp"
#include "heapcrys/heap.hpp"
#include "heapcrys/weyl.hpp"

namespace heapcrys {

// Toggle x into or out of an order ideal when the result is still an ideal.
OrderIdeal toggle_ideal(const Heap& heap, const OrderIdeal& ideal, int x);

// Toggle every ideal of the chain of an RPP at x. Values are order-reversing, so the new value
// is min(lower covers, or height) + max(upper covers, or 0) - old value.
Rpp toggle_rpp(const Heap& heap, const Rpp& rpp, int x);
// Product of toggles over runner i, applied bottom to top.
Rpp runner_toggle(const Heap& heap, const Rpp& rpp, int i);

// Permutation of {0..size-1}; compose(a, b) applies b first.
using Permutation = std::vector<int>;
Permutation compose(const Permutation& a, const Permutation& b);
Permutation identity_permutation(int size);

// B(n lambda) realised on RPP(w_0^J, n) for a minuscule lambda, J its stabiliser.
class RppCrystal {
public:
    RppCrystal(const WeylGroup& weyl, const Weight& lambda, int n);
    RppCrystal(const WeylGroup& weyl, const Word& word, int n);

    [[nodiscard]] const WeylGroup& weyl() const { return weyl_; }
    [[nodiscard]] const IdealCrystal& atom() const { return atom_; }
    [[nodiscard]] const Heap& heap() const { return atom_.heap(); }
    [[nodiscard]] int height() const { return n_; }
    [[nodiscard]] const std::vector<Rpp>& elements() const { return elements_; }
    [[nodiscard]] int size() const { return static_cast<int>(elements_.size()); }
    [[nodiscard]] int index_of(const Rpp& rpp) const;
    [[nodiscard]] const CrystalGraph& graph() const { return graph_; }

    [[nodiscard]] Permutation toggle(int i) const;
    // Partial Schuetzenberger involution for the connected subdiagram J.
    [[nodiscard]] Permutation cactus(const std::vector<int>& J) const;

private:
    WeylGroup weyl_;
    IdealCrystal atom_;
    int n_;
    std::vector<Rpp> elements_;
    CrystalGraph graph_;
};

// "t4 t2 t4 = s2" style identities: t<i> is a runner toggle, s<digits> or s{i,j,...} a cactus
// generator, "id" the identity. Juxtaposition composes, the rightmost factor acting first.
Permutation evaluate_expression(const RppCrystal& crystal, const std::string& expression);

struct IdentityResult {
    std::string identity;
    int height = 0;
    bool equal = false;
    std::string witness;  // an RPP where the two sides differ
};
IdentityResult check_identity(const RppCrystal& crystal, const std::string& identity);

// Involutivity of every t_x and t_i, and wt(t_i b) = s_i wt(b), on all of RPP(w, n).
struct ToggleReport {
    std::size_t checks = 0;
    std::string violation;
    [[nodiscard]] bool ok() const { return violation.empty(); }
};
ToggleReport check_toggles(const RppCrystal& crystal);

// Relations s_J^2 = 1, s_J s_K = s_{theta_J(K)} s_J for K inside J, and s_J s_K = s_K s_J when
// J and K are disjoint and not adjacent, over all connected J, K.
struct CactusReport {
    std::size_t relations = 0;
    std::string violation;
    [[nodiscard]] bool ok() const { return violation.empty(); }
};
CactusReport check_cactus_relations(const RppCrystal& crystal);

// Instance-level comparisons of toggle words against cactus words, for n = 1..n_max.
std::vector<IdentityResult> check_conjectures(const WeylGroup& weyl, const Weight& lambda, int n_max);

// All connected subsets of the diagram, ascending by size then lexicographically.
std::vector<std::vector<int>> connected_subdiagrams(const DynkinDiagram& diagram);

}  // namespace heapcrys
