#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "heapcrys/crystal.hpp"
#include "heapcrys/heap.hpp"
#include "heapcrys/weyl.hpp"

namespace heapcrys {

// A semistandard Young tableau with entries in {1..m}, stored row by row.
class Tableau {
public:
    Tableau() = default;
    Tableau(std::vector<std::vector<int>> rows, int m);

    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }
    [[nodiscard]] int alphabet() const { return m_; }
    [[nodiscard]] std::vector<int> shape() const;
    [[nodiscard]] int size() const;

    // Rows bottom to top, each left to right.
    [[nodiscard]] std::vector<int> reading_word() const;
    // Refill the same shape from a reading word.
    [[nodiscard]] Tableau with_reading_word(const std::vector<int>& word) const;

    // Crystal operators on letters i+1, i+2 (0-based i), by the signature rule on the reading word.
    [[nodiscard]] std::optional<Tableau> f(int i) const;
    [[nodiscard]] std::optional<Tableau> e(int i) const;
    // Weight in fundamental-weight coordinates of sl_m: (#j - #(j+1))_j.
    [[nodiscard]] Weight weight() const;

    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::string to_json() const;
    static Tableau from_json(const std::string& text, int m);

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
    int m_ = 0;
};

// Gelfand-Tsetlin pattern: rows[i-1] = lambda^(i), padded to i parts.
class GtPattern {
public:
    explicit GtPattern(std::vector<std::vector<int>> rows);
    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }
    [[nodiscard]] int alphabet() const { return static_cast<int>(rows_.size()); }
    // lambda^(i)_k with 1-based i and k.
    [[nodiscard]] int at(int i, int k) const { return rows_[i - 1][k - 1]; }
    [[nodiscard]] std::string to_json() const;

    friend bool operator==(const GtPattern&, const GtPattern&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

GtPattern gt_of_tableau(const Tableau& tableau);
Tableau tableau_of_gt(const GtPattern& pattern);

// Every SSYT of the given shape with entries in {1..m}, sorted.
std::vector<Tableau> enumerate_ssyt(const std::vector<int>& shape, int m);

// SSYT(n^p) over {1..m} and RPP(w_0^J, n), J = all vertices of A_{m-1} except p. GT entries
// lambda^(i)_k become the values on runner m-i, smallest k at the bottom.
class RectangularCorrespondence {
public:
    RectangularCorrespondence(int m, int p);

    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] const WeylGroup& weyl() const { return weyl_; }
    [[nodiscard]] const Heap& heap() const { return heap_; }
    [[nodiscard]] const Word& word() const { return heap_.word(); }

    [[nodiscard]] Rpp rpp_of_tableau(const Tableau& tableau) const;
    [[nodiscard]] Tableau tableau_of_rpp(const Rpp& rpp) const;

private:
    int m_;
    int p_;
    WeylGroup weyl_;
    Heap heap_;
    // First free GT index on row i (1-based), so the bead index is k - first + 1.
    [[nodiscard]] int first_free(int i) const { return std::max(1, i - (m_ - p_) + 1); }
    [[nodiscard]] int last_free(int i) const { return std::min(i, p_); }
};

// Explicit graph on a list of tableaux, closed under e and f.
CrystalGraph tableau_crystal_graph(const std::vector<Tableau>& tableaux);

// Partial Schuetzenberger involution: on every J-component (edges coloured in J), sends the
// highest element to the lowest and intertwines f_j with e_{theta(j)}. `theta` is indexed by
// vertex and fixes everything outside J. Fails on components without a unique highest and
// lowest element.
std::vector<int> partial_schuetzenberger(const CrystalGraph& graph, const std::vector<int>& J,
                                         const std::vector<int>& theta);
// The full involution on a connected graph.
std::vector<int> schuetzenberger(const CrystalGraph& graph, const std::vector<int>& theta);

}  // namespace heapcrys
