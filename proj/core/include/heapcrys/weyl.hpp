#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "heapcrys/dynkin.hpp"
#include "heapcrys/rational.hpp"

namespace heapcrys {

// A word in the simple reflections, letters 0-based. Printed 1-based: "3,4,2,3,1,2".
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
    static Word parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& letters() const { return letters_; }
    [[nodiscard]] int length() const { return static_cast<int>(letters_.size()); }
    int operator[](int k) const { return letters_[k]; }
    [[nodiscard]] bool uses(int vertex) const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

// Positive root in simple-root coordinates.
using Root = std::vector<int>;

struct Witness {
    Weight minimal;                  // sum of w_i over right descents i
    std::vector<int> free_directions;  // vertices that do not occur in the word
};

struct WeylBounds {
    int max_word_length = 24;
    std::size_t max_coset_size = 10000;
};

class WeylGroup {
public:
    explicit WeylGroup(DynkinDiagram diagram, WeylBounds bounds = {});

    [[nodiscard]] const DynkinDiagram& diagram() const { return diagram_; }
    [[nodiscard]] int rank() const { return diagram_.rank(); }
    [[nodiscard]] const WeylBounds& bounds() const { return bounds_; }

    // Applies the rightmost letter first.
    [[nodiscard]] Weight act(const Word& word, Weight weight) const;
    [[nodiscard]] Root act_on_root(const Word& word, Root root) const;
    [[nodiscard]] Root reflect_root(int i, Root root) const;
    [[nodiscard]] Weight rho() const { return Weight(std::vector<int>(rank(), 1)); }
    [[nodiscard]] Weight key(const Word& word) const { return act(word, rho()); }

    [[nodiscard]] const std::vector<Root>& positive_roots() const { return positive_roots_; }
    [[nodiscard]] static int pairing(const Root& coroot, const Weight& weight);

    [[nodiscard]] int length(const Word& word) const;
    [[nodiscard]] bool is_reduced(const Word& word) const;
    [[nodiscard]] std::vector<int> right_descents(const Word& word) const;

    [[nodiscard]] bool is_fully_commutative(const Word& word) const;
    // Oracle: walks the commutation class looking for a braid factor i j i.
    [[nodiscard]] bool is_fully_commutative_by_search(const Word& word, std::size_t class_limit = 200000) const;
    [[nodiscard]] std::vector<Word> commutation_class(const Word& word, std::size_t class_limit = 200000) const;

    [[nodiscard]] bool is_lambda_minuscule(const Word& word, const Weight& lambda) const;
    [[nodiscard]] bool is_minuscule(const Word& word) const;
    [[nodiscard]] bool is_dominant_minuscule(const Word& word) const;
    // Empty when the word is dominant minuscule, otherwise the first violated criterion.
    [[nodiscard]] std::string dominant_minuscule_failure(const Word& word) const;
    [[nodiscard]] Witness witnesses(const Word& word) const;

    // Reduced word of the maximal element of W^J.
    [[nodiscard]] Word longest_coset_rep(const std::vector<int>& J) const;
    // J = vertices where the dominant weight pairs to zero.
    [[nodiscard]] static std::vector<int> stabiliser(const Weight& dominant);
    // All of W^J as reduced words, shortest first.
    [[nodiscard]] std::vector<Word> coset_representatives(const std::vector<int>& J) const;
    // {v <=_L w}, each element identified by v(rho).
    [[nodiscard]] std::vector<Weight> lower_interval(const Word& word, std::size_t limit = 1000000) const;
    [[nodiscard]] Word reduced_word_of(const Weight& key) const;

    [[nodiscard]] Word longest_element(const std::vector<int>& J) const;
    // theta_J(j) defined by w_0^J(alpha_j) = -alpha_{theta(j)}; identity outside J.
    [[nodiscard]] std::vector<int> theta(const std::vector<int>& J) const;

    [[nodiscard]] bool is_minuscule_weight(const Weight& dominant) const;
    [[nodiscard]] Rational weyl_dimension(const Weight& dominant) const;
    [[nodiscard]] std::size_t orbit_size(const Weight& weight, std::size_t limit = 1000000) const;

    // Every reduced word with length <= max_length, in depth-first lexicographic order.
    void for_each_reduced_word(int max_length, const std::function<void(const std::vector<int>&)>& visit) const;
    // One canonical reduced word per dominant minuscule element of length <= max_length.
    [[nodiscard]] std::vector<Word> dominant_minuscule_elements(int max_length) const;

private:
    DynkinDiagram diagram_;
    WeylBounds bounds_;
    std::vector<Root> positive_roots_;
};

}  // namespace heapcrys
