#include "heapcrys/tableaux.hpp"

#include <deque>
#include <map>
#include <numeric>

#include <json.hpp>

#include "heapcrys/errors.hpp"

namespace heapcrys {

Tableau::Tableau(std::vector<std::vector<int>> rows, int m) : rows_(std::move(rows)), m_(m) {
    if (m < 1) throw Error("tableau alphabet must be non-empty");
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw Error("tableau has an empty row above a non-empty one");
        if (r > 0 && row.size() > rows_[r - 1].size()) throw Error("tableau rows must weakly shorten");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > m) throw Error("tableau entry " + std::to_string(row[c]) + " outside 1.." + std::to_string(m));
            if (c > 0 && row[c - 1] > row[c]) throw Error("tableau row " + std::to_string(r + 1) + " decreases");
            if (r > 0 && rows_[r - 1][c] >= row[c]) throw Error("tableau column " + std::to_string(c + 1) + " is not strictly increasing");
        }
    }
}

std::vector<int> Tableau::shape() const {
    std::vector<int> out;
    for (const auto& row : rows_) out.push_back(static_cast<int>(row.size()));
    return out;
}

int Tableau::size() const {
    int total = 0;
    for (const auto& row : rows_) total += static_cast<int>(row.size());
    return total;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
    return word;
}

Tableau Tableau::with_reading_word(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) != size()) throw Error("reading word has the wrong length");
    std::vector<std::vector<int>> rows = rows_;
    std::size_t pos = 0;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        for (int& entry : *it) entry = word[pos++];
    return Tableau(std::move(rows), m_);
}

namespace {

struct LetterSignature {
    int rightmost_plus = -1;  // position in the reading word
    int leftmost_minus = -1;
};

LetterSignature letter_signature(const std::vector<int>& word, int i) {
    LetterSignature s;
    std::vector<int> open_minuses;
    for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
        if (word[pos] == i + 1) {
            if (!open_minuses.empty()) open_minuses.pop_back();
            else s.rightmost_plus = pos;
        } else if (word[pos] == i + 2) {
            open_minuses.push_back(pos);
        }
    }
    if (!open_minuses.empty()) s.leftmost_minus = open_minuses.front();
    return s;
}

}  // namespace

std::optional<Tableau> Tableau::f(int i) const {
    if (i < 0 || i >= m_ - 1) throw Error("crystal index out of range for the tableau alphabet");
    std::vector<int> word = reading_word();
    const LetterSignature s = letter_signature(word, i);
    if (s.rightmost_plus < 0) return std::nullopt;
    word[s.rightmost_plus] = i + 2;
    return with_reading_word(word);
}

std::optional<Tableau> Tableau::e(int i) const {
    if (i < 0 || i >= m_ - 1) throw Error("crystal index out of range for the tableau alphabet");
    std::vector<int> word = reading_word();
    const LetterSignature s = letter_signature(word, i);
    if (s.leftmost_minus < 0) return std::nullopt;
    word[s.leftmost_minus] = i + 1;
    return with_reading_word(word);
}

Weight Tableau::weight() const {
    std::vector<int> count(m_ + 2, 0);
    for (const auto& row : rows_)
        for (int x : row) ++count[x];
    std::vector<int> coords(m_ - 1);
    for (int j = 0; j < m_ - 1; ++j) coords[j] = count[j + 1] - count[j + 2];
    return Weight(std::move(coords));
}

std::string Tableau::str() const {
    std::string s;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += "/";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) s += " ";
            s += std::to_string(rows_[r][c]);
        }
    }
    return s;
}

std::string Tableau::to_json() const { return nlohmann::json(rows_).dump(); }

Tableau Tableau::from_json(const std::string& text, int m) {
    try {
        return Tableau(nlohmann::json::parse(text).get<std::vector<std::vector<int>>>(), m);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("tableau JSON: ") + ex.what());
    }
}

GtPattern::GtPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != i + 1) throw Error("GT row " + std::to_string(i + 1) + " must have " + std::to_string(i + 1) + " parts");
        for (int x : rows_[i])
            if (x < 0) throw Error("GT pattern has a negative entry");
    }
    for (std::size_t i = 0; i + 1 < rows_.size(); ++i)
        for (std::size_t k = 0; k <= i; ++k)
            if (!(rows_[i + 1][k + 1] <= rows_[i][k] && rows_[i][k] <= rows_[i + 1][k]))
                throw Error("GT pattern violates interlacing at row " + std::to_string(i + 1) + ", entry " +
                            std::to_string(k + 1));
}

std::string GtPattern::to_json() const { return nlohmann::json(rows_).dump(); }

GtPattern gt_of_tableau(const Tableau& tableau) {
    const int m = tableau.alphabet();
    std::vector<std::vector<int>> rows(m);
    for (int i = 1; i <= m; ++i) {
        rows[i - 1].assign(i, 0);
        for (int r = 0; r < i && r < static_cast<int>(tableau.rows().size()); ++r) {
            const auto& row = tableau.rows()[r];
            rows[i - 1][r] = static_cast<int>(std::upper_bound(row.begin(), row.end(), i) - row.begin());
        }
    }
    return GtPattern(std::move(rows));
}

Tableau tableau_of_gt(const GtPattern& pattern) {
    const int m = pattern.alphabet();
    if (m == 0) throw Error("empty GT pattern");
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= m && pattern.at(m, r) > 0; ++r) {
        std::vector<int> row;
        for (int i = r; i <= m; ++i) {
            const int before = i - 1 >= r ? pattern.at(i - 1, r) : 0;
            row.insert(row.end(), static_cast<std::size_t>(pattern.at(i, r) - before), i);
        }
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows), m);
}

std::vector<Tableau> enumerate_ssyt(const std::vector<int>& shape, int m) {
    for (std::size_t r = 1; r < shape.size(); ++r)
        if (shape[r] > shape[r - 1]) throw Error("shape is not a partition");
    std::vector<std::vector<int>> rows;
    for (int len : shape)
        if (len > 0) rows.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<Tableau> out;
    auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == rows.size()) {
            out.emplace_back(rows, m);
            return;
        }
        if (c == rows[r].size()) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= m; ++v) {
            rows[r][c] = v;
            self(self, r, c + 1);
        }
    };
    fill(fill, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

RectangularCorrespondence::RectangularCorrespondence(int m, int p)
    : m_(m),
      p_(p),
      weyl_(DynkinDiagram::from_spec("A" + std::to_string(m - 1)), WeylBounds{Heap::max_elements, 100000}),
      heap_([&] {
          if (m < 2 || p < 1 || p > m - 1) throw Error("rectangle needs 1 <= p <= m-1");
          std::vector<int> J;
          for (int j = 0; j < m - 1; ++j)
              if (j != p - 1) J.push_back(j);
          return Heap::build(weyl_, weyl_.longest_coset_rep(J));
      }()) {
    for (int i = 1; i <= m - 1; ++i)
        if (heap_.fibre_size(m - i - 1) != last_free(i) - first_free(i) + 1)
            throw InternalError("runner " + vertex_label(m - i - 1) + " does not match GT row " + std::to_string(i));
}

Rpp RectangularCorrespondence::rpp_of_tableau(const Tableau& tableau) const {
    if (tableau.alphabet() != m_) throw Error("tableau alphabet differs from m");
    const auto shape = tableau.shape();
    if (static_cast<int>(shape.size()) != p_ || shape.front() != shape.back())
        throw Error("tableau is not a rectangle with " + std::to_string(p_) + " rows");
    const int n = shape.front();
    const GtPattern gt = gt_of_tableau(tableau);
    std::vector<int> values(heap_.size(), 0);
    for (int i = 1; i <= m_ - 1; ++i)
        for (int k = first_free(i); k <= last_free(i); ++k)
            values[heap_.element_at(m_ - i - 1, k - first_free(i) + 1)] = gt.at(i, k);
    Rpp out(std::move(values), n);
    if (!out.is_valid(heap_)) throw InternalError("GT pattern produced an invalid RPP " + out.str());
    return out;
}

Tableau RectangularCorrespondence::tableau_of_rpp(const Rpp& rpp) const {
    if (!rpp.is_valid(heap_)) throw Error("not an RPP on the rectangle heap: " + rpp.str());
    const int n = rpp.height();
    if (n < 1) throw Error("rectangle tableaux need height at least 1");
    std::vector<std::vector<int>> rows(m_);
    for (int i = 1; i <= m_; ++i) {
        rows[i - 1].assign(i, 0);
        for (int k = 1; k <= i; ++k) {
            if (k < first_free(i)) rows[i - 1][k - 1] = n;
            else if (k <= last_free(i) && i < m_) rows[i - 1][k - 1] = rpp[heap_.element_at(m_ - i - 1, k - first_free(i) + 1)];
        }
    }
    return tableau_of_gt(GtPattern(std::move(rows)));
}

CrystalGraph tableau_crystal_graph(const std::vector<Tableau>& tableaux) {
    CrystalGraph g;
    if (tableaux.empty()) return g;
    g.rank = tableaux.front().alphabet() - 1;
    std::map<Tableau, int> index;
    for (std::size_t v = 0; v < tableaux.size(); ++v) index.emplace(tableaux[v], static_cast<int>(v));
    g.f.assign(g.rank, std::vector<int>(tableaux.size(), -1));
    g.e.assign(g.rank, std::vector<int>(tableaux.size(), -1));
    for (std::size_t v = 0; v < tableaux.size(); ++v) {
        g.weight.push_back(tableaux[v].weight());
        for (int i = 0; i < g.rank; ++i) {
            if (auto down = tableaux[v].f(i)) {
                auto it = index.find(*down);
                if (it == index.end()) throw Error("tableau set is not closed under f_" + vertex_label(i));
                g.f[i][v] = it->second;
            }
            if (auto up = tableaux[v].e(i)) {
                auto it = index.find(*up);
                if (it == index.end()) throw Error("tableau set is not closed under e_" + vertex_label(i));
                g.e[i][v] = it->second;
            }
        }
    }
    return g;
}

std::vector<int> partial_schuetzenberger(const CrystalGraph& graph, const std::vector<int>& J,
                                         const std::vector<int>& theta) {
    const int size = graph.size();
    std::vector<int> parent(size);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int j : J)
        for (int v = 0; v < size; ++v)
            if (graph.f[j][v] >= 0) parent[find(v)] = find(graph.f[j][v]);

    std::map<int, std::vector<int>> highest, lowest;
    for (int v = 0; v < size; ++v) {
        bool top = true, bottom = true;
        for (int j : J) {
            top = top && graph.e[j][v] < 0;
            bottom = bottom && graph.f[j][v] < 0;
        }
        if (top) highest[find(v)].push_back(v);
        if (bottom) lowest[find(v)].push_back(v);
    }

    std::vector<int> xi(size, -1);
    std::deque<int> queue;
    for (const auto& [root, tops] : highest) {
        const auto& bottoms = lowest[root];
        if (tops.size() != 1 || bottoms.size() != 1)
            throw Error("component has " + std::to_string(tops.size()) + " highest and " + std::to_string(bottoms.size()) +
                        " lowest elements; the involution needs exactly one of each");
        xi[tops.front()] = bottoms.front();
        queue.push_back(tops.front());
    }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int j : J) {
            const int u = graph.f[j][v];
            if (u < 0 || xi[u] >= 0) continue;
            const int image = graph.e[theta[j]][xi[v]];
            if (image < 0) throw Error("component is not the crystal of a highest weight module");
            xi[u] = image;
            queue.push_back(u);
        }
    }
    for (int v = 0; v < size; ++v) {
        if (xi[v] < 0) throw Error("element unreachable from the highest element of its component");
        for (int j : J)
            if (graph.f[j][v] >= 0 && xi[graph.f[j][v]] != graph.e[theta[j]][xi[v]])
                throw Error("involution does not intertwine f_j with e_theta(j)");
    }
    for (int v = 0; v < size; ++v)
        if (xi[xi[v]] != v) throw InternalError("Schuetzenberger map is not an involution");
    return xi;
}

std::vector<int> schuetzenberger(const CrystalGraph& graph, const std::vector<int>& theta) {
    std::vector<int> all(graph.rank);
    std::iota(all.begin(), all.end(), 0);
    const auto xi = partial_schuetzenberger(graph, all, theta);
    int highest = 0;
    for (int v = 0; v < graph.size(); ++v) {
        bool top = true;
        for (int i = 0; i < graph.rank; ++i) top = top && graph.e[i][v] < 0;
        highest += top;
    }
    if (highest != 1) throw Error("crystal graph is not connected");
    return xi;
}

}  // namespace heapcrys
