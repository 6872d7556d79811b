#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heapcrys {

// Vertices are 0-based internally and printed 1-based everywhere a user sees them.
inline std::string vertex_label(int v) { return std::to_string(v + 1); }

// A weight in fundamental-weight coordinates: coords()[i] = <alpha_i^vee, weight>.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}

    static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }
    static Weight fundamental(int rank, int i);
    // Accepts "w2", "2w1+w3", "0", or a coordinate list "1,0,1".
    static Weight parse(std::string_view text, int rank);

    [[nodiscard]] int rank() const { return static_cast<int>(coords_.size()); }
    [[nodiscard]] const std::vector<int>& coords() const { return coords_; }
    int operator[](int i) const { return coords_[i]; }
    int& operator[](int i) { return coords_[i]; }

    [[nodiscard]] bool is_dominant() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::string str() const;

    Weight& operator+=(const Weight& rhs);
    Weight& operator-=(const Weight& rhs);
    friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
    friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
    friend Weight operator*(int k, Weight w) {
        for (auto& c : w.coords_) c *= k;
        return w;
    }
    Weight operator-() const { return -1 * *this; }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    std::vector<int> coords_;
};

enum class Sign : int { Minus = -1, Plus = 1 };

class DynkinDiagram {
public:
    // "A4", "D5", "E6", unions such as "A2+A1".
    static DynkinDiagram from_spec(std::string_view spec);
    // Edges given on 0-based vertices.
    static DynkinDiagram from_edges(int rank, const std::vector<std::pair<int, int>>& edges,
                                    std::string name = "custom");
    // {"vertices":[labels...], "edges":[[a,b],...]}; labels are integers, renumbered in sorted order.
    static DynkinDiagram from_json(std::string_view json_text);

    [[nodiscard]] int rank() const { return rank_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] int cartan(int i, int j) const { return cartan_[i][j]; }
    [[nodiscard]] bool adjacent(int i, int j) const { return i != j && cartan_[i][j] == -1; }
    [[nodiscard]] bool commute(int i, int j) const { return cartan_[i][j] == 0; }
    [[nodiscard]] const std::vector<int>& neighbours(int i) const { return neighbours_[i]; }
    [[nodiscard]] const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    [[nodiscard]] std::vector<std::vector<int>> components() const;
    [[nodiscard]] bool is_connected(const std::vector<int>& subset) const;

    // alpha_i in fundamental-weight coordinates (row i of the Cartan matrix).
    [[nodiscard]] Weight simple_root(int i) const;
    [[nodiscard]] Weight reflect(int i, Weight w) const;
    [[nodiscard]] Weight fundamental(int i) const { return Weight::fundamental(rank_, i); }

    [[nodiscard]] std::string to_json() const;

    friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
        return a.rank_ == b.rank_ && a.edges_ == b.edges_;
    }

private:
    int rank_ = 0;
    std::string name_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> neighbours_;
    std::vector<std::vector<int>> cartan_;
};

class TwoColouring {
public:
    TwoColouring() = default;
    explicit TwoColouring(std::vector<Sign> signs) : signs_(std::move(signs)) {}

    // Lowest-numbered vertex of each component gets +, then alternate.
    static TwoColouring canonical(const DynkinDiagram& diagram);

    [[nodiscard]] Sign operator[](int v) const { return signs_[v]; }
    [[nodiscard]] TwoColouring flipped() const;
    [[nodiscard]] bool is_proper(const DynkinDiagram& diagram) const;
    [[nodiscard]] int size() const { return static_cast<int>(signs_.size()); }

private:
    std::vector<Sign> signs_;
};

// One arrow of the doubled quiver. Arrows 2e and 2e+1 are a and a* for diagram edge e.
struct Arrow {
    int tail = 0;
    int head = 0;
    bool starred = false;
    [[nodiscard]] int epsilon() const { return starred ? -1 : 1; }
};

class Orientation {
public:
    // Unstarred arrows point from (-)-vertices to (+)-vertices.
    static Orientation from_colouring(const DynkinDiagram& diagram, const TwoColouring& colouring);

    [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
    [[nodiscard]] static int partner(int arrow) { return arrow ^ 1; }
    [[nodiscard]] std::vector<int> arrows_into(int v) const;
    [[nodiscard]] std::vector<int> arrows_from(int v) const;

private:
    std::vector<Arrow> arrows_;
};

}  // namespace heapcrys
