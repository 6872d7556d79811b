#include "heapcrys/heap.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "heapcrys/errors.hpp"

namespace heapcrys {

std::vector<int> OrderIdeal::members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
}

bool canonical_less(const OrderIdeal& a, const OrderIdeal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    return (a.bits_ & (diff & (~diff + 1))) != 0;
}

Heap Heap::build(const WeylGroup& weyl, const Word& word) {
    const DynkinDiagram& d = weyl.diagram();
    for (int letter : word.letters())
        if (letter < 0 || letter >= d.rank()) throw Error("word letter " + vertex_label(letter) + " is not a vertex");
    if (word.length() > max_elements) throw BoundExceeded("heaps are limited to 64 elements");
    if (word.length() > weyl.bounds().max_word_length)
        throw BoundExceeded("word length " + std::to_string(word.length()) + " exceeds the configured bound " +
                            std::to_string(weyl.bounds().max_word_length));
    if (!weyl.is_reduced(word)) throw Error("word " + word.str() + " is not reduced");
    if (!weyl.is_fully_commutative(word))
        throw Error("word " + word.str() + " is not fully commutative; its heap depends on the chosen word");

    const int n = word.length();
    // Position-indexed strict-below sets: q > p sits below p when the letters do not commute.
    std::vector<std::uint64_t> below_pos(n, 0);
    for (int p = n - 1; p >= 0; --p)
        for (int q = p + 1; q < n; ++q)
            if (!d.commute(word[p], word[q])) below_pos[p] |= (std::uint64_t{1} << q) | below_pos[q];

    std::vector<int> index_pos(n, 0);
    std::vector<int> count(d.rank(), 0);
    for (int p = n - 1; p >= 0; --p) index_pos[p] = ++count[word[p]];

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return word[a] != word[b] ? word[a] < word[b] : index_pos[a] < index_pos[b];
    });
    std::vector<int> id_of(n);
    for (int k = 0; k < n; ++k) id_of[order[k]] = k;

    Heap h;
    h.diagram_ = d;
    h.word_ = word;
    h.runner_.resize(n);
    h.index_.resize(n);
    h.below_.assign(n, 0);
    h.above_.assign(n, 0);
    for (int p = 0; p < n; ++p) {
        const int e = id_of[p];
        h.runner_[e] = word[p];
        h.index_[e] = index_pos[p];
        for (std::uint64_t b = below_pos[p]; b != 0; b &= b - 1) h.below_[e] |= std::uint64_t{1} << id_of[__builtin_ctzll(b)];
    }
    for (int x = 0; x < n; ++x)
        for (std::uint64_t b = h.below_[x]; b != 0; b &= b - 1) h.above_[__builtin_ctzll(b)] |= std::uint64_t{1} << x;

    h.lower_covers_.assign(n, {});
    h.upper_covers_.assign(n, {});
    for (int x = 0; x < n; ++x) {
        for (std::uint64_t b = h.below_[x]; b != 0; b &= b - 1) {
            const int y = __builtin_ctzll(b);
            if ((h.above_[y] & h.below_[x]) == 0) {
                h.lower_covers_[x].push_back(y);
                h.upper_covers_[y].push_back(x);
            }
        }
    }
    for (auto& v : h.upper_covers_) std::sort(v.begin(), v.end());
    for (int x = 0; x < n; ++x)
        for (int y : h.lower_covers_[x]) h.edges_.push_back(CoverEdge{x, y});

    h.level_.assign(n, 0);
    for (int p = n - 1; p >= 0; --p) {
        const int x = id_of[p];
        int lvl = 1;
        for (int y : h.lower_covers_[x]) lvl = std::max(lvl, h.level_[y] + 1);
        h.level_[x] = lvl;
        h.max_level_ = std::max(h.max_level_, lvl);
    }

    h.fibres_.assign(d.rank(), {});
    for (int x = 0; x < n; ++x) h.fibres_[h.runner_[x]].push_back(x);
    for (const auto& f : h.fibres_)
        for (std::size_t k = 1; k < f.size(); ++k)
            if (!h.less(f[k - 1], f[k])) throw InternalError("runner fibre is not a chain");
    return h;
}

std::string Heap::label(int element) const {
    return "x" + vertex_label(runner_[element]) + "^" + std::to_string(index_[element]);
}

int Heap::edge_index(int upper, int lower) const {
    for (std::size_t k = 0; k < edges_.size(); ++k)
        if (edges_[k].upper == upper && edges_[k].lower == lower) return static_cast<int>(k);
    return -1;
}

int Heap::element_at(int runner, int index) const {
    if (runner < 0 || runner >= diagram_.rank()) return -1;
    if (index < 1 || index > fibre_size(runner)) return -1;
    return fibres_[runner][index - 1];
}

std::vector<int> Heap::minimal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (below_[x] == 0) out.push_back(x);
    return out;
}

OrderIdeal Heap::full() const {
    return OrderIdeal(size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1);
}

bool Heap::is_ideal(const OrderIdeal& subset) const {
    if (!subset.subset_of(full())) return false;
    for (int x : subset.members())
        if ((below_[x] & ~subset.bits()) != 0) return false;
    return true;
}

std::vector<int> Heap::addable(const OrderIdeal& ideal) const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (!ideal.contains(x) && (below_[x] & ~ideal.bits()) == 0) out.push_back(x);
    return out;
}

std::vector<int> Heap::removable(const OrderIdeal& ideal) const {
    std::vector<int> out;
    for (int x : ideal.members())
        if ((above_[x] & ideal.bits()) == 0) out.push_back(x);
    return out;
}

std::vector<OrderIdeal> Heap::order_ideals(std::size_t limit) const {
    std::vector<OrderIdeal> all{OrderIdeal{}};
    std::vector<OrderIdeal> layer{OrderIdeal{}};
    while (!layer.empty()) {
        std::unordered_set<OrderIdeal, OrderIdealHash> next;
        for (const auto& ideal : layer)
            for (int x : addable(ideal)) next.insert(ideal.with(x));
        layer.assign(next.begin(), next.end());
        all.insert(all.end(), layer.begin(), layer.end());
        if (all.size() > limit)
            throw BoundExceeded("more than " + std::to_string(limit) +
                                " order ideals; enumerate chains incrementally instead");
    }
    std::sort(all.begin(), all.end(), canonical_less);
    return all;
}

std::vector<int> Heap::good_order() const {
    std::vector<int> order;
    order.reserve(size());
    for (int k = 1; k <= max_level_; ++k) {
        std::vector<int> beads;
        for (int x = 0; x < size(); ++x)
            if (level_[x] == k) beads.push_back(x);
        std::vector<std::vector<int>> adj(beads.size());
        for (std::size_t a = 0; a < beads.size(); ++a)
            for (std::size_t b = a + 1; b < beads.size(); ++b) {
                const auto& la = lower_covers_[beads[a]];
                const auto& lb = lower_covers_[beads[b]];
                // A runner-top bead may be covered three times; it never closes a diamond, so it is skipped.
                const bool share = std::any_of(la.begin(), la.end(), [&](int y) {
                    return upper_covers_[y].size() <= 2 && std::find(lb.begin(), lb.end(), y) != lb.end();
                });
                if (share) {
                    adj[a].push_back(static_cast<int>(b));
                    adj[b].push_back(static_cast<int>(a));
                }
            }
        std::vector<bool> placed(beads.size(), false);
        for (std::size_t start = 0; start < beads.size(); ++start) {
            if (placed[start]) continue;
            // Collect the component, check it is a path, then walk it from its smallest endpoint.
            std::vector<int> comp{static_cast<int>(start)};
            std::vector<bool> in_comp(beads.size(), false);
            in_comp[start] = true;
            std::size_t edge_ends = 0;
            for (std::size_t t = 0; t < comp.size(); ++t) {
                edge_ends += adj[comp[t]].size();
                if (adj[comp[t]].size() > 2) throw Error("heap is not minuscule: bead graph at level " +
                                                         std::to_string(k) + " is not a union of paths");
                for (int nb : adj[comp[t]])
                    if (!in_comp[nb]) {
                        in_comp[nb] = true;
                        comp.push_back(nb);
                    }
            }
            if (edge_ends / 2 != comp.size() - 1)
                throw Error("heap is not minuscule: bead graph at level " + std::to_string(k) + " has a cycle");
            int current = -1;
            for (int v : comp)
                if (adj[v].size() <= 1 && (current < 0 || beads[v] < beads[current])) current = v;
            int previous = -1;
            while (current >= 0) {
                placed[current] = true;
                order.push_back(beads[current]);
                int next = -1;
                for (int nb : adj[current])
                    if (nb != previous && !placed[nb]) next = nb;
                previous = current;
                current = next;
            }
        }
    }
    return order;
}

bool Heap::is_good_order(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != size()) return false;
    std::uint64_t dropped = 0;
    for (int b : order) {
        if (b < 0 || b >= size() || ((dropped >> b) & 1U)) return false;
        const auto& covered = lower_covers_[b];
        for (int y : covered)
            if (!((dropped >> y) & 1U)) return false;
        if (covered.size() >= 2) {
            const bool one_maximal = std::any_of(covered.begin(), covered.end(),
                                                 [&](int y) { return (above_[y] & dropped) == 0; });
            if (!one_maximal) return false;
        }
        dropped |= std::uint64_t{1} << b;
    }
    return true;
}

Word Heap::word_from_order(const std::vector<int>& order) const {
    std::vector<int> letters;
    letters.reserve(order.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) letters.push_back(runner_[*it]);
    return Word(std::move(letters));
}

std::string Heap::to_json() const {
    nlohmann::json j;
    j["diagram"] = diagram_.name();
    j["word"] = word_.str();
    std::vector<int> runners;
    for (int r : runner_) runners.push_back(r + 1);
    j["runner"] = runners;
    j["index"] = index_;
    j["level"] = level_;
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& e : edges_) covers.push_back({e.upper, e.lower});
    j["covers"] = covers;
    return j.dump();
}

char colour_letter(Colour c) {
    switch (c) {
        case Colour::Red: return 'R';
        case Colour::Blue: return 'B';
        case Colour::Green: return 'G';
        case Colour::Yellow: return 'Y';
    }
    return '?';
}

int colour_sign(Colour c) { return c == Colour::Red ? -1 : 1; }

namespace {

std::array<Colour, 2> palette(Sign runner_sign) {
    if (runner_sign == Sign::Minus) return {Colour::Red, Colour::Blue};
    return {Colour::Green, Colour::Yellow};
}

}  // namespace

namespace {

Colour swapped(Colour c) {
    switch (c) {
        case Colour::Red: return Colour::Blue;
        case Colour::Blue: return Colour::Red;
        case Colour::Green: return Colour::Yellow;
        case Colour::Yellow: return Colour::Green;
    }
    return c;
}

// Two cover edges must differ when they share the upper bead, or share a lower bead with at most
// two upper covers. A bead covered three times cannot satisfy the rule with a two-colour palette.
bool must_differ(const Heap& heap, const CoverEdge& e, const CoverEdge& f) {
    if (e.upper == f.upper) return e.lower != f.lower;
    return e.lower == f.lower && heap.upper_covers(e.lower).size() <= 2;
}

}  // namespace

EdgeColouring four_colouring(const Heap& heap, const TwoColouring& colouring) {
    if (!colouring.is_proper(heap.diagram())) throw Error("2-colouring is not proper for this diagram");
    const auto& edges = heap.edges();
    std::vector<std::optional<Colour>> assigned(edges.size());
    std::vector<std::vector<int>> conflicts(edges.size());
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = 0; b < edges.size(); ++b)
            if (a != b && must_differ(heap, edges[a], edges[b])) conflicts[a].push_back(static_cast<int>(b));

    // Swaps the colours on the coloured part of the conflict component containing `seed`.
    auto flip_component = [&](int seed) {
        std::vector<int> stack{seed};
        std::vector<bool> seen(edges.size(), false);
        seen[seed] = true;
        while (!stack.empty()) {
            const int e = stack.back();
            stack.pop_back();
            assigned[e] = swapped(*assigned[e]);
            for (int f : conflicts[e])
                if (!seen[f] && assigned[f]) {
                    seen[f] = true;
                    stack.push_back(f);
                }
        }
    };

    for (int b : heap.good_order()) {
        std::vector<int> covered = heap.lower_covers(b);
        // Beads that already carry a coloured upper edge are the constrained ones; colour them first.
        auto constrained = [&](int y) {
            return std::any_of(heap.upper_covers(y).begin(), heap.upper_covers(y).end(),
                                [&](int z) { return assigned[heap.edge_index(z, y)].has_value(); });
        };
        std::stable_sort(covered.begin(), covered.end(),
                         [&](int y1, int y2) { return constrained(y1) && !constrained(y2); });
        const auto choices = palette(colouring[heap.runner(b)]);
        for (int y : covered) {
            const int e = heap.edge_index(b, y);
            std::vector<int> coloured;
            for (int f : conflicts[e])
                if (assigned[f]) coloured.push_back(f);
            if (coloured.size() == 2 && *assigned[coloured[0]] != *assigned[coloured[1]]) {
                // Both colours are blocked; the two neighbours lie in different components
                // (the conflict graph is bipartite), so recolouring one of them frees a colour.
                flip_component(coloured.back());
                if (*assigned[coloured[0]] != *assigned[coloured[1]])
                    throw InternalError("conflict graph has an odd cycle at edge " + heap.label(b) + " -> " +
                                        heap.label(y));
            }
            std::optional<Colour> pick;
            for (Colour c : choices) {
                const bool used = std::any_of(coloured.begin(), coloured.end(), [&](int f) { return *assigned[f] == c; });
                if (!used) {
                    pick = c;
                    break;
                }
            }
            if (!pick) throw InternalError("no admissible colour for edge " + heap.label(b) + " -> " + heap.label(y));
            assigned[e] = *pick;
        }
    }
    EdgeColouring result;
    result.reserve(assigned.size());
    for (const auto& c : assigned) result.push_back(c.value());
    if (const std::string v = colouring_violation(heap, colouring, result); !v.empty())
        throw InternalError("four-colouring failed validation: " + v);
    return result;
}

std::string colouring_violation(const Heap& heap, const TwoColouring& colouring, const EdgeColouring& c) {
    if (c.size() != heap.edges().size()) return "colouring has the wrong number of edges";
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto& e = heap.edges()[k];
        const auto allowed = palette(colouring[heap.runner(e.upper)]);
        if (c[k] != allowed[0] && c[k] != allowed[1])
            return "edge " + heap.label(e.upper) + " -> " + heap.label(e.lower) + " has colour " +
                   colour_letter(c[k]) + " outside the palette of its upper runner";
    }
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) {
            const auto& e = heap.edges()[a];
            const auto& f = heap.edges()[b];
            const bool touch = e.upper == f.upper || e.lower == f.lower || e.upper == f.lower || e.lower == f.upper;
            if (touch && c[a] == c[b] && (must_differ(heap, e, f) || e.upper == f.lower || e.lower == f.upper))
                return "two edges at a common element share colour " + std::string(1, colour_letter(c[a]));
        }
    for (int x = 0; x < heap.size(); ++x) {
        const auto& lows = heap.lower_covers(x);
        for (std::size_t a = 0; a < lows.size(); ++a)
            for (std::size_t b = a + 1; b < lows.size(); ++b)
                for (int y : heap.lower_covers(lows[a])) {
                    const auto& lb = heap.lower_covers(lows[b]);
                    if (std::find(lb.begin(), lb.end(), y) == lb.end()) continue;
                    std::array<Colour, 4> diamond{c[heap.edge_index(x, lows[a])], c[heap.edge_index(x, lows[b])],
                                                  c[heap.edge_index(lows[a], y)], c[heap.edge_index(lows[b], y)]};
                    std::sort(diamond.begin(), diamond.end());
                    if (std::adjacent_find(diamond.begin(), diamond.end()) != diamond.end())
                        return "diamond with top " + heap.label(x) + " and bottom " + heap.label(y) +
                               " repeats a colour";
                }
    }
    return {};
}

std::vector<EdgeColouring> all_valid_colourings(const Heap& heap, const TwoColouring& colouring, std::size_t limit) {
    std::vector<EdgeColouring> out;
    const std::size_t m = heap.edges().size();
    EdgeColouring current(m, Colour::Red);
    auto search = [&](auto&& self, std::size_t k) -> void {
        if (out.size() >= limit) return;
        if (k == m) {
            if (colouring_violation(heap, colouring, current).empty()) out.push_back(current);
            return;
        }
        const auto& e = heap.edges()[k];
        for (Colour c : palette(colouring[heap.runner(e.upper)])) {
            bool clash = false;
            for (std::size_t j = 0; j < k && !clash; ++j) {
                const auto& f = heap.edges()[j];
                clash = current[j] == c && must_differ(heap, e, f);
            }
            if (clash) continue;
            current[k] = c;
            self(self, k + 1);
        }
    };
    search(search, 0);
    return out;
}

std::string heap_to_dot(const Heap& heap, const EdgeColouring* colouring) {
    std::ostringstream out;
    out << "digraph heap {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int x = 0; x < heap.size(); ++x)
        out << "  e" << x << " [label=\"" << vertex_label(heap.runner(x)) << "\", xlabel=\"" << heap.label(x)
            << " L" << heap.level(x) << "\"];\n";
    for (std::size_t k = 0; k < heap.edges().size(); ++k) {
        const auto& e = heap.edges()[k];
        out << "  e" << e.lower << " -> e" << e.upper;
        if (colouring) {
            static constexpr const char* names[] = {"red", "blue", "green", "gold"};
            const Colour c = (*colouring)[k];
            out << " [color=" << names[static_cast<int>(c)] << ", label=\"" << colour_letter(c) << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace heapcrys
