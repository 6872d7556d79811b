#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heapcrys/dynkin.hpp"
#include "heapcrys/weyl.hpp"

namespace heapcrys {

// Subset of heap elements as a bit mask (heaps are capped at 64 elements).
class OrderIdeal {
public:
    OrderIdeal() = default;
    explicit OrderIdeal(std::uint64_t bits) : bits_(bits) {}

    [[nodiscard]] std::uint64_t bits() const { return bits_; }
    [[nodiscard]] bool contains(int element) const { return (bits_ >> element) & 1U; }
    [[nodiscard]] int size() const { return __builtin_popcountll(bits_); }
    [[nodiscard]] bool empty() const { return bits_ == 0; }
    [[nodiscard]] bool subset_of(const OrderIdeal& other) const { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] OrderIdeal with(int element) const { return OrderIdeal(bits_ | (std::uint64_t{1} << element)); }
    [[nodiscard]] OrderIdeal without(int element) const { return OrderIdeal(bits_ & ~(std::uint64_t{1} << element)); }
    [[nodiscard]] std::vector<int> members() const;

    friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
    // Canonical order: by size, then lexicographically by sorted member list.
    friend bool canonical_less(const OrderIdeal& a, const OrderIdeal& b);

private:
    std::uint64_t bits_ = 0;
};

struct OrderIdealHash {
    std::size_t operator()(const OrderIdeal& ideal) const noexcept {
        std::uint64_t x = ideal.bits() + 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

// A covering relation: `upper` covers `lower`.
struct CoverEdge {
    int upper = 0;
    int lower = 0;
    friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

// The heap poset of a reduced, fully commutative word. Elements are numbered by
// (runner, index from the bottom of that runner), so element ids are stable under
// commutation moves on the word.
class Heap {
public:
    static constexpr int max_elements = 64;

    static Heap build(const WeylGroup& weyl, const Word& word);

    [[nodiscard]] const DynkinDiagram& diagram() const { return diagram_; }
    [[nodiscard]] const Word& word() const { return word_; }
    [[nodiscard]] int size() const { return static_cast<int>(runner_.size()); }

    [[nodiscard]] int runner(int element) const { return runner_[element]; }
    // 1-based position within the runner, counted from the bottom.
    [[nodiscard]] int index(int element) const { return index_[element]; }
    [[nodiscard]] int level(int element) const { return level_[element]; }
    [[nodiscard]] int max_level() const { return max_level_; }
    [[nodiscard]] std::string label(int element) const;

    // Elements covered by `element` / covering `element`, ascending ids.
    [[nodiscard]] const std::vector<int>& lower_covers(int element) const { return lower_covers_[element]; }
    [[nodiscard]] const std::vector<int>& upper_covers(int element) const { return upper_covers_[element]; }
    [[nodiscard]] const std::vector<CoverEdge>& edges() const { return edges_; }
    [[nodiscard]] int edge_index(int upper, int lower) const;
    [[nodiscard]] bool less(int a, int b) const { return (below_[b] >> a) & 1U; }
    [[nodiscard]] std::uint64_t strictly_below(int element) const { return below_[element]; }
    [[nodiscard]] std::uint64_t strictly_above(int element) const { return above_[element]; }

    // Elements of runner i from bottom to top.
    [[nodiscard]] const std::vector<int>& fibre(int runner) const { return fibres_[runner]; }
    [[nodiscard]] int fibre_size(int runner) const { return static_cast<int>(fibres_[runner].size()); }
    [[nodiscard]] int element_at(int runner, int index) const;
    [[nodiscard]] std::vector<int> minimal_elements() const;
    [[nodiscard]] OrderIdeal full() const;

    [[nodiscard]] bool is_ideal(const OrderIdeal& subset) const;
    // Elements x not in the ideal whose lower covers all lie in it.
    [[nodiscard]] std::vector<int> addable(const OrderIdeal& ideal) const;
    [[nodiscard]] std::vector<int> removable(const OrderIdeal& ideal) const;
    [[nodiscard]] std::vector<OrderIdeal> order_ideals(std::size_t limit = 2000000) const;

    // Drop order built level by level, walking each same-level bead path from one end.
    [[nodiscard]] std::vector<int> good_order() const;
    [[nodiscard]] bool is_good_order(const std::vector<int>& order) const;
    // Reduced word whose heap is this one, read from a drop order (first dropped = last letter).
    [[nodiscard]] Word word_from_order(const std::vector<int>& order) const;

    // Same labelled poset (element numbering is canonical, so this is literal equality).
    friend bool operator==(const Heap& a, const Heap& b) {
        return a.runner_ == b.runner_ && a.index_ == b.index_ && a.below_ == b.below_;
    }

    [[nodiscard]] std::string to_json() const;

private:
    DynkinDiagram diagram_;
    Word word_;
    std::vector<int> runner_;
    std::vector<int> index_;
    std::vector<int> level_;
    int max_level_ = 0;
    std::vector<std::uint64_t> below_;
    std::vector<std::uint64_t> above_;
    std::vector<std::vector<int>> lower_covers_;
    std::vector<std::vector<int>> upper_covers_;
    std::vector<CoverEdge> edges_;
    std::vector<std::vector<int>> fibres_;
};

enum class Colour { Red, Blue, Green, Yellow };
char colour_letter(Colour c);
// sigma: Red -> -1, everything else -> +1.
int colour_sign(Colour c);

// Colour per cover edge, aligned with Heap::edges().
using EdgeColouring = std::vector<Colour>;

EdgeColouring four_colouring(const Heap& heap, const TwoColouring& colouring);
// Empty string when valid, otherwise the first violated property.
std::string colouring_violation(const Heap& heap, const TwoColouring& colouring, const EdgeColouring& c);
// Every valid colouring (backtracking), up to `limit` of them.
std::vector<EdgeColouring> all_valid_colourings(const Heap& heap, const TwoColouring& colouring,
                                                std::size_t limit = 64);

std::string heap_to_dot(const Heap& heap, const EdgeColouring* colouring = nullptr);

}  // namespace heapcrys
