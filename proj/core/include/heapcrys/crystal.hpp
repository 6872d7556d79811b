#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "heapcrys/dynkin.hpp"
#include "heapcrys/heap.hpp"
#include "heapcrys/weyl.hpp"

namespace heapcrys {

// J(H) for a lambda-minuscule heap H, with f_i adding the next bead on runner i.
class IdealCrystal {
public:
    IdealCrystal(Heap heap, Weight lambda);
    // Heap of the word with its minimal witness.
    static IdealCrystal of_word(const WeylGroup& weyl, const Word& word);

    [[nodiscard]] const Heap& heap() const { return heap_; }
    [[nodiscard]] const Weight& highest_weight() const { return lambda_; }
    [[nodiscard]] int rank() const { return heap_.diagram().rank(); }

    [[nodiscard]] std::optional<OrderIdeal> e(const OrderIdeal& b, int i) const;
    [[nodiscard]] std::optional<OrderIdeal> f(const OrderIdeal& b, int i) const;
    [[nodiscard]] int epsilon(const OrderIdeal& b, int i) const { return e(b, i).has_value() ? 1 : 0; }
    [[nodiscard]] int phi(const OrderIdeal& b, int i) const { return epsilon(b, i) + weight(b)[i]; }
    [[nodiscard]] Weight weight(const OrderIdeal& b) const;

private:
    Heap heap_;
    Weight lambda_;
    std::vector<Weight> roots_;
};

using TensorElement = std::vector<OrderIdeal>;

struct TensorElementHash {
    std::size_t operator()(const TensorElement& t) const noexcept;
};

// Tensor product of ideal crystals under the signature rule: each factor contributes phi_i
// pluses followed by eps_i minuses, left to right; adjacent "-+" pairs cancel; f_i acts on the
// factor of the rightmost surviving +, e_i on the factor of the leftmost surviving -.
class TensorCrystal {
public:
    explicit TensorCrystal(std::vector<IdealCrystal> factors);
    static TensorCrystal power(const IdealCrystal& atom, int n);

    [[nodiscard]] int size() const { return static_cast<int>(factors_.size()); }
    [[nodiscard]] int rank() const { return factors_.empty() ? 0 : factors_.front().rank(); }
    [[nodiscard]] const IdealCrystal& factor(int k) const { return factors_[k]; }
    [[nodiscard]] TensorElement highest() const { return TensorElement(factors_.size()); }

    [[nodiscard]] std::optional<TensorElement> e(const TensorElement& b, int i) const;
    [[nodiscard]] std::optional<TensorElement> f(const TensorElement& b, int i) const;
    [[nodiscard]] int epsilon(const TensorElement& b, int i) const;
    [[nodiscard]] int phi(const TensorElement& b, int i) const;
    [[nodiscard]] Weight weight(const TensorElement& b) const;
    // The raw sign sequence before cancellation, e.g. "-+-".
    [[nodiscard]] std::string signature(const TensorElement& b, int i) const;

private:
    std::vector<IdealCrystal> factors_;
    // Surviving sign positions after cancellation: (factor of rightmost +, factor of leftmost -).
    struct Reduced {
        int pluses = 0;
        int minuses = 0;
        int rightmost_plus = -1;
        int leftmost_minus = -1;
    };
    [[nodiscard]] Reduced reduce(const TensorElement& b, int i) const;
};

struct CrystalBounds {
    std::size_t max_elements = 2000000;
};

// Closure of the highest element under f-strings read from the right end of the word.
std::vector<TensorElement> generate_demazure(const TensorCrystal& crystal, const Word& word,
                                             CrystalBounds bounds = {});
// Everything reachable from `start` by lowering operators.
std::vector<TensorElement> lowering_closure(const TensorCrystal& crystal, const TensorElement& start,
                                            CrystalBounds bounds = {});
// Empty when the crystal axioms hold on `elements` (a set closed under e_i), else the first failure.
std::string crystal_axiom_violation(const TensorCrystal& crystal, const std::vector<TensorElement>& elements);

// An order-reversing map H -> {0..height}, stored per heap element id.
class Rpp {
public:
    Rpp() = default;
    Rpp(std::vector<int> values, int height) : values_(std::move(values)), height_(height) {}
    static Rpp zero(const Heap& heap, int height) { return Rpp(std::vector<int>(heap.size(), 0), height); }
    // chain[k-1] = phi_k; requires phi_1 within phi_2 within ... within phi_n.
    static Rpp from_chain(const Heap& heap, const std::vector<OrderIdeal>& chain);
    static Rpp indicator(const Heap& heap, const OrderIdeal& ideal, int height = 1);

    [[nodiscard]] const std::vector<int>& values() const { return values_; }
    [[nodiscard]] int height() const { return height_; }
    int operator[](int element) const { return values_[element]; }
    [[nodiscard]] Rpp with_value(int element, int value) const;

    [[nodiscard]] bool is_valid(const Heap& heap) const;
    // phi_k = {x : value(x) >= height - k + 1}, k = 1..height.
    [[nodiscard]] std::vector<OrderIdeal> chain() const;
    // height * lambda - sum value(x) alpha_{runner(x)}.
    [[nodiscard]] Weight weight(const Heap& heap, const Weight& lambda) const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Rpp&, const Rpp&) = default;
    friend auto operator<=>(const Rpp&, const Rpp&) = default;

private:
    std::vector<int> values_;
    int height_ = 0;
};

// Every RPP of the given height, in lexicographic order of value vectors.
std::vector<Rpp> enumerate_rpps(const Heap& heap, int height, std::size_t limit = 2000000);

struct GravsortReport {
    std::size_t demazure_size = 0;
    std::size_t chain_image_size = 0;
    bool sets_equal = false;
    bool chains_closed = false;
    std::string axioms;   // empty when the axioms hold
    std::string witness;  // a mismatching element when the sets differ
    [[nodiscard]] bool ok() const { return sets_equal && chains_closed && axioms.empty(); }
};
GravsortReport verify_gravsort(const IdealCrystal& atom, const Word& word, int height);

// A finite crystal graph with explicit operator tables, used by the involutions.
struct CrystalGraph {
    int rank = 0;
    std::vector<Weight> weight;
    // f[i][v] / e[i][v]: target vertex or -1.
    std::vector<std::vector<int>> f;
    std::vector<std::vector<int>> e;
    [[nodiscard]] int size() const { return static_cast<int>(weight.size()); }
};
CrystalGraph crystal_graph(const TensorCrystal& crystal, const std::vector<TensorElement>& elements);

std::string crystal_to_dot(const CrystalGraph& graph, const std::vector<std::string>& labels);

}  // namespace heapcrys
