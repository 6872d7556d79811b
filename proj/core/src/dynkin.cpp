#include "heapcrys/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "heapcrys/errors.hpp"
#include "heapcrys/rational.hpp"

namespace heapcrys {

Weight Weight::fundamental(int rank, int i) {
    if (i < 0 || i >= rank) throw Error("fundamental weight index " + vertex_label(i) + " out of range");
    Weight w = zero(rank);
    w.coords_[i] = 1;
    return w;
}

Weight Weight::parse(std::string_view text, int rank) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error("empty weight");
    if (s == "0") return zero(rank);
    if (s.find(',') != std::string::npos || std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
        })) {
        std::vector<int> coords;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            const std::size_t next = s.find(',', pos);
            const std::string item = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (item.empty()) throw Error("malformed weight '" + std::string(text) + "'");
            coords.push_back(std::stoi(item));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (static_cast<int>(coords.size()) != rank)
            throw Error("weight '" + std::string(text) + "' has " + std::to_string(coords.size()) +
                        " coordinates, diagram has rank " + std::to_string(rank));
        return Weight(coords);
    }
    Weight result = zero(rank);
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        int coefficient = 1;
        const std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos > digits) coefficient = std::stoi(s.substr(digits, pos - digits));
        if (pos >= s.size() || (s[pos] != 'w' && s[pos] != 'W'))
            throw Error("malformed weight '" + std::string(text) + "' (expected terms like 2w1)");
        ++pos;
        const std::size_t index_start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == index_start) throw Error("malformed weight '" + std::string(text) + "'");
        const int index = std::stoi(s.substr(index_start, pos - index_start)) - 1;
        if (index < 0 || index >= rank) throw Error("weight index out of range in '" + std::string(text) + "'");
        result.coords_[index] += sign * coefficient;
    }
    return result;
}

bool Weight::is_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

bool Weight::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

std::string Weight::str() const {
    std::string out;
    for (int i = 0; i < rank(); ++i) {
        const int c = coords_[i];
        if (c == 0) continue;
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        if (std::abs(c) != 1) out += std::to_string(std::abs(c));
        out += "w" + vertex_label(i);
    }
    return out.empty() ? "0" : out;
}

Weight& Weight::operator+=(const Weight& rhs) {
    if (rhs.rank() != rank()) throw Error("weights of different rank");
    for (int i = 0; i < rank(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
    if (rhs.rank() != rank()) throw Error("weights of different rank");
    for (int i = 0; i < rank(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

namespace {

std::vector<std::pair<int, int>> component_edges(char type, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (type) {
        case 'A':
            if (n < 1) throw Error("type A needs rank >= 1");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case 'D':
            if (n < 4) throw Error("type D needs rank >= 4");
            for (int i = 0; i + 1 < n - 1; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 3, n - 1);
            break;
        case 'E':
            if (n < 6 || n > 8) throw Error("type E needs rank 6, 7 or 8");
            for (int i = 0; i + 1 < n - 1; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(2, n - 1);
            break;
        default:
            throw Error(std::string("unsupported Dynkin type '") + type + "' (only A, D, E are simply laced)");
    }
    return edges;
}

}  // namespace

DynkinDiagram DynkinDiagram::from_spec(std::string_view spec) {
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    std::string name;
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error("empty diagram spec");
    std::size_t pos = 0;
    while (pos < s.size()) {
        const std::size_t next = s.find('+', pos);
        const std::string token = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (token.size() < 2) throw Error("malformed diagram component '" + token + "'");
        const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
        const std::string digits = token.substr(1);
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw Error("malformed diagram component '" + token + "'");
        const int n = std::stoi(digits);
        for (auto [a, b] : component_edges(type, n)) edges.emplace_back(a + offset, b + offset);
        offset += n;
        if (!name.empty()) name += "+";
        name += std::string(1, type) + digits;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return from_edges(offset, edges, name);
}

DynkinDiagram DynkinDiagram::from_edges(int rank, const std::vector<std::pair<int, int>>& edges, std::string name) {
    if (rank < 1) throw Error("diagram must have at least one vertex");
    DynkinDiagram d;
    d.rank_ = rank;
    d.name_ = std::move(name);
    d.neighbours_.assign(rank, {});
    d.cartan_.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) d.cartan_[i][i] = 2;

    std::vector<int> parent(rank);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        const std::string label = "{" + vertex_label(a) + "," + vertex_label(b) + "}";
        if (a < 0 || b < 0 || a >= rank || b >= rank) throw Error("edge " + label + " uses an unknown vertex");
        if (a == b) throw Error("edge " + label + " is a loop");
        const auto key = std::minmax(a, b);
        if (!seen.insert(key).second) throw Error("edge " + label + " is repeated (not simply laced)");
        const int ra = find(a);
        const int rb = find(b);
        if (ra == rb) throw Error("edge " + label + " closes a cycle; Dynkin diagrams must be forests");
        parent[ra] = rb;
        d.edges_.push_back(key);
        d.neighbours_[a].push_back(b);
        d.neighbours_[b].push_back(a);
        d.cartan_[a][b] = d.cartan_[b][a] = -1;
    }
    for (int v = 0; v < rank; ++v) {
        if (d.neighbours_[v].size() > 3)
            throw Error("vertex " + vertex_label(v) + " has degree " + std::to_string(d.neighbours_[v].size()) +
                        " > 3");
        std::sort(d.neighbours_[v].begin(), d.neighbours_[v].end());
    }
    std::sort(d.edges_.begin(), d.edges_.end());

    // Finite type: the Cartan matrix must be positive definite (all LDL^T pivots > 0).
    std::vector<std::vector<Rational>> m(rank, std::vector<Rational>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m[i][j] = d.cartan_[i][j];
    for (int k = 0; k < rank; ++k) {
        if (m[k][k].sign() <= 0)
            throw Error("Cartan matrix is not positive definite (leading minor " + std::to_string(k + 1) +
                        "); not a finite ADE diagram");
        for (int i = k + 1; i < rank; ++i) {
            if (m[i][k].is_zero()) continue;
            const Rational f = m[i][k] / m[k][k];
            for (int j = k; j < rank; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return d;
}

DynkinDiagram DynkinDiagram::from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("diagram JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges")) throw Error("diagram JSON needs 'vertices' and 'edges'");
    std::vector<long long> labels = j.at("vertices").get<std::vector<long long>>();
    std::vector<long long> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("duplicate vertex label");
    std::map<long long, int> index;
    for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        const auto pair = e.get<std::vector<long long>>();
        if (pair.size() != 2) throw Error("each edge must list two vertices");
        if (!index.count(pair[0]) || !index.count(pair[1]))
            throw Error("edge {" + std::to_string(pair[0]) + "," + std::to_string(pair[1]) + "} uses an unknown vertex");
        edges.emplace_back(index.at(pair[0]), index.at(pair[1]));
    }
    return from_edges(static_cast<int>(sorted.size()), edges, j.value("name", std::string("custom")));
}

std::vector<std::vector<int>> DynkinDiagram::components() const {
    std::vector<int> comp(rank_, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < rank_; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> members{start};
        comp[start] = static_cast<int>(out.size());
        for (std::size_t k = 0; k < members.size(); ++k)
            for (int nb : neighbours_[members[k]])
                if (comp[nb] < 0) {
                    comp[nb] = comp[start];
                    members.push_back(nb);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool DynkinDiagram::is_connected(const std::vector<int>& subset) const {
    if (subset.empty()) return false;
    std::set<int> members(subset.begin(), subset.end());
    std::set<int> reached{*members.begin()};
    std::vector<int> stack{*members.begin()};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int nb : neighbours_[v])
            if (members.count(nb) && reached.insert(nb).second) stack.push_back(nb);
    }
    return reached.size() == members.size();
}

Weight DynkinDiagram::simple_root(int i) const { return Weight(cartan_[i]); }

Weight DynkinDiagram::reflect(int i, Weight w) const {
    const int pairing = w[i];
    if (pairing == 0) return w;
    for (int j = 0; j < rank_; ++j) w[j] -= pairing * cartan_[i][j];
    return w;
}

std::string DynkinDiagram::to_json() const {
    nlohmann::json j;
    j["name"] = name_;
    std::vector<int> vertices(rank_);
    std::iota(vertices.begin(), vertices.end(), 1);
    j["vertices"] = vertices;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : edges_) edges.push_back({a + 1, b + 1});
    j["edges"] = edges;
    return j.dump();
}

TwoColouring TwoColouring::canonical(const DynkinDiagram& diagram) {
    std::vector<Sign> signs(diagram.rank(), Sign::Plus);
    for (const auto& component : diagram.components()) {
        std::vector<bool> done(diagram.rank(), false);
        std::vector<int> queue{component.front()};
        signs[component.front()] = Sign::Plus;
        done[component.front()] = true;
        for (std::size_t k = 0; k < queue.size(); ++k) {
            const int v = queue[k];
            for (int nb : diagram.neighbours(v)) {
                if (done[nb]) continue;
                done[nb] = true;
                signs[nb] = signs[v] == Sign::Plus ? Sign::Minus : Sign::Plus;
                queue.push_back(nb);
            }
        }
    }
    return TwoColouring(std::move(signs));
}

TwoColouring TwoColouring::flipped() const {
    std::vector<Sign> out = signs_;
    for (auto& s : out) s = s == Sign::Plus ? Sign::Minus : Sign::Plus;
    return TwoColouring(std::move(out));
}

bool TwoColouring::is_proper(const DynkinDiagram& diagram) const {
    if (size() != diagram.rank()) return false;
    return std::all_of(diagram.edges().begin(), diagram.edges().end(),
                       [&](const auto& e) { return signs_[e.first] != signs_[e.second]; });
}

Orientation Orientation::from_colouring(const DynkinDiagram& diagram, const TwoColouring& colouring) {
    if (!colouring.is_proper(diagram)) throw Error("2-colouring is not proper for this diagram");
    Orientation o;
    for (auto [a, b] : diagram.edges()) {
        const int minus = colouring[a] == Sign::Minus ? a : b;
        const int plus = minus == a ? b : a;
        o.arrows_.push_back(Arrow{minus, plus, false});
        o.arrows_.push_back(Arrow{plus, minus, true});
    }
    return o;
}

std::vector<int> Orientation::arrows_into(int v) const {
    std::vector<int> out;
    for (int a = 0; a < static_cast<int>(arrows_.size()); ++a)
        if (arrows_[a].head == v) out.push_back(a);
    return out;
}

std::vector<int> Orientation::arrows_from(int v) const {
    std::vector<int> out;
    for (int a = 0; a < static_cast<int>(arrows_.size()); ++a)
        if (arrows_[a].tail == v) out.push_back(a);
    return out;
}

}  // namespace heapcrys
