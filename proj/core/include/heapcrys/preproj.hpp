#pragma once

#include <map>
#include <string>
#include <vector>

#include "heapcrys/dynkin.hpp"
#include "heapcrys/heap.hpp"
#include "heapcrys/linalg.hpp"
#include "heapcrys/weyl.hpp"

namespace heapcrys {

// A path in the doubled quiver, arrows listed in the order they are applied.
struct QuiverPath {
    int start = 0;
    std::vector<int> arrows;
};

// The module CH(w): basis = heap elements, the fibre over vertex i ordered bottom to top.
// Arrow a : i -> j sends a bead x on runner i to sigma(c(x > y)) y for the bead y on runner j
// that x covers (and to 0 when there is none).
class HeapModule {
public:
    // Uses the canonical 2-colouring and the greedy 4-colouring.
    static HeapModule build(const WeylGroup& weyl, const Word& word);
    static HeapModule build(const WeylGroup& weyl, const Word& word, const TwoColouring& colouring,
                            const EdgeColouring& edge_colouring);

    [[nodiscard]] const Heap& heap() const { return heap_; }
    [[nodiscard]] const DynkinDiagram& diagram() const { return heap_.diagram(); }
    [[nodiscard]] int rank() const { return heap_.diagram().rank(); }
    [[nodiscard]] const TwoColouring& colouring() const { return colouring_; }
    [[nodiscard]] const Orientation& orientation() const { return orientation_; }
    [[nodiscard]] const EdgeColouring& edge_colouring() const { return edge_colouring_; }
    [[nodiscard]] const Weight& witness() const { return witness_; }
    [[nodiscard]] int dim(int vertex) const { return heap_.fibre_size(vertex); }
    [[nodiscard]] std::vector<int> dimension_vector() const;

    // (dim head) x (dim tail) integer matrix.
    [[nodiscard]] const Matrix& arrow_matrix(int arrow) const { return arrows_[arrow]; }
    // sum over arrows a with head i of eps(a) M_a M_{a*}.
    [[nodiscard]] Matrix relation_residual(int vertex) const;
    [[nodiscard]] bool satisfies_relation() const;
    // Downward shift x_i^s -> x_i^{s-1} on one copy of the fibre.
    [[nodiscard]] Matrix shift(int vertex) const;
    [[nodiscard]] Matrix path_matrix(const QuiverPath& path) const;

    // Distinct nonzero matrices of paths of exactly `length` arrows starting at `vertex`,
    // grouped by end vertex, each with one representative path.
    struct PathImage {
        int end = 0;
        Matrix matrix;
        QuiverPath path;
    };
    [[nodiscard]] const std::vector<PathImage>& paths_from(int vertex, int length) const;
    // Kernel of every path of length `length` out of `vertex`, inside one copy of the fibre.
    [[nodiscard]] const Subspace& path_kernel(int vertex, int length) const;

    // A combination of closed paths at `vertex` whose action is `target`, if one exists.
    struct PathCombination {
        std::vector<std::pair<Rational, QuiverPath>> terms;
    };
    [[nodiscard]] std::optional<PathCombination> realise(int vertex, const Matrix& target) const;

    // The nilpotent operator A_i used throughout: an element of the algebra acting on the
    // fibre as the downward shift up to signs, x_i^s -> +-x_i^{s-1}. It equals shift(i) when the
    // unsigned shift is itself realised by paths. Its kernels are the coordinate flags.
    [[nodiscard]] const Matrix& nilpotent(int vertex) const { return nilpotent_[vertex]; }
    [[nodiscard]] bool shift_is_exact(int vertex) const { return nilpotent_[vertex] == shift(vertex); }

    [[nodiscard]] std::string to_json() const;

private:
    Heap heap_;
    TwoColouring colouring_;
    Orientation orientation_;
    EdgeColouring edge_colouring_;
    Weight witness_;
    std::vector<Matrix> arrows_;
    int max_path_length_ = 0;
    // paths_[vertex][length]
    std::vector<std::vector<std::vector<PathImage>>> paths_;
    std::vector<std::vector<Subspace>> path_kernels_;
    std::vector<Matrix> nilpotent_;

    void choose_nilpotents();
};

// Sum of the arrows' actions for a list of arrows (used for the type-A Springer flag).
Matrix sum_of_arrows(const HeapModule& module, const std::vector<int>& arrows, int tail, int head);

// Why the word cannot carry a module structure: the failed minuscule criterion and, when the
// heap exists, the vertices where an odd number of two-step paths joins consecutive beads.
std::string module_refusal(const WeylGroup& weyl, const Word& word);

struct SocleReport {
    bool socle_is_minimal_beads = false;
    bool socle_matches_descents = false;
    bool dimension_vector_matches = false;
    bool levels_span_socle_layers = false;
    bool shift_kernels_match = false;
    std::vector<int> socle;  // multiset of vertices, sorted
    std::string detail;
    [[nodiscard]] bool ok() const {
        return socle_is_minimal_beads && socle_matches_descents && dimension_vector_matches &&
               levels_span_socle_layers && shift_kernels_match;
    }
};
SocleReport socle_and_hull_checks(const HeapModule& module, const WeylGroup& weyl);

// Coordinate subspace of CH(w) spanned by a set of beads, checked for arrow closure.
bool is_coordinate_submodule(const HeapModule& module, const OrderIdeal& beads);

}  // namespace heapcrys
