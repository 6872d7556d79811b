#include "heapcrys/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "heapcrys/errors.hpp"

namespace heapcrys {

namespace {

int beads_on_runner(const Heap& heap, const OrderIdeal& b, int i) {
    int count = 0;
    for (int x : heap.fibre(i)) count += b.contains(x);
    return count;
}

bool tensor_less(const TensorElement& a, const TensorElement& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const OrderIdeal& x, const OrderIdeal& y) { return x.bits() < y.bits(); });
}

std::vector<TensorElement> sorted(std::unordered_set<TensorElement, TensorElementHash> set) {
    std::vector<TensorElement> out(set.begin(), set.end());
    std::sort(out.begin(), out.end(), tensor_less);
    return out;
}

}  // namespace

IdealCrystal::IdealCrystal(Heap heap, Weight lambda) : heap_(std::move(heap)), lambda_(std::move(lambda)) {
    if (lambda_.rank() != rank()) throw Error("highest weight has the wrong rank");
    for (int i = 0; i < rank(); ++i) roots_.push_back(heap_.diagram().simple_root(i));
    // Every bead must lower the weight by a root with pairing one (lambda-minuscule condition).
    const WeylGroup weyl(heap_.diagram(), WeylBounds{Heap::max_elements, 10000});
    if (!weyl.is_lambda_minuscule(heap_.word(), lambda_))
        throw Error("word " + heap_.word().str() + " is not " + lambda_.str() + "-minuscule");
}

IdealCrystal IdealCrystal::of_word(const WeylGroup& weyl, const Word& word) {
    return IdealCrystal(Heap::build(weyl, word), weyl.witnesses(word).minimal);
}

std::optional<OrderIdeal> IdealCrystal::f(const OrderIdeal& b, int i) const {
    const int next = heap_.element_at(i, beads_on_runner(heap_, b, i) + 1);
    if (next < 0 || (heap_.strictly_below(next) & ~b.bits()) != 0) return std::nullopt;
    return b.with(next);
}

std::optional<OrderIdeal> IdealCrystal::e(const OrderIdeal& b, int i) const {
    const int count = beads_on_runner(heap_, b, i);
    if (count == 0) return std::nullopt;
    const int top = heap_.element_at(i, count);
    if ((heap_.strictly_above(top) & b.bits()) != 0) return std::nullopt;
    return b.without(top);
}

Weight IdealCrystal::weight(const OrderIdeal& b) const {
    Weight w = lambda_;
    for (int x : b.members()) w -= roots_[heap_.runner(x)];
    return w;
}

std::size_t TensorElementHash::operator()(const TensorElement& t) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    OrderIdealHash inner;
    for (const auto& b : t) h = (h ^ inner(b)) * 0x100000001b3ULL;
    return h;
}

TensorCrystal::TensorCrystal(std::vector<IdealCrystal> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_)
        if (f.rank() != factors_.front().rank()) throw Error("tensor factors have different ranks");
}

TensorCrystal TensorCrystal::power(const IdealCrystal& atom, int n) {
    if (n < 0) throw Error("tensor power must be non-negative");
    return TensorCrystal(std::vector<IdealCrystal>(static_cast<std::size_t>(n), atom));
}

TensorCrystal::Reduced TensorCrystal::reduce(const TensorElement& b, int i) const {
    Reduced r;
    std::vector<int> open_minuses;  // factor of each unmatched -, left to right
    for (int k = 0; k < size(); ++k) {
        const int eps = factors_[k].epsilon(b[k], i);
        const int phi = factors_[k].phi(b[k], i);
        if (phi < 0) throw InternalError("negative phi in an ideal crystal");
        for (int p = 0; p < phi; ++p) {
            if (!open_minuses.empty()) {
                open_minuses.pop_back();
            } else {
                ++r.pluses;
                r.rightmost_plus = k;
            }
        }
        for (int m = 0; m < eps; ++m) open_minuses.push_back(k);
    }
    r.minuses = static_cast<int>(open_minuses.size());
    if (!open_minuses.empty()) r.leftmost_minus = open_minuses.front();
    return r;
}

std::optional<TensorElement> TensorCrystal::f(const TensorElement& b, int i) const {
    const Reduced r = reduce(b, i);
    if (r.rightmost_plus < 0) return std::nullopt;
    auto moved = factors_[r.rightmost_plus].f(b[r.rightmost_plus], i);
    if (!moved) return std::nullopt;
    TensorElement out = b;
    out[r.rightmost_plus] = *moved;
    return out;
}

std::optional<TensorElement> TensorCrystal::e(const TensorElement& b, int i) const {
    const Reduced r = reduce(b, i);
    if (r.leftmost_minus < 0) return std::nullopt;
    auto moved = factors_[r.leftmost_minus].e(b[r.leftmost_minus], i);
    if (!moved) throw InternalError("surviving minus on a factor without e_i");
    TensorElement out = b;
    out[r.leftmost_minus] = *moved;
    return out;
}

int TensorCrystal::epsilon(const TensorElement& b, int i) const { return reduce(b, i).minuses; }
int TensorCrystal::phi(const TensorElement& b, int i) const { return reduce(b, i).pluses; }

Weight TensorCrystal::weight(const TensorElement& b) const {
    Weight w = Weight::zero(rank());
    for (int k = 0; k < size(); ++k) w += factors_[k].weight(b[k]);
    return w;
}

std::string TensorCrystal::signature(const TensorElement& b, int i) const {
    std::string s;
    for (int k = 0; k < size(); ++k) {
        s.append(static_cast<std::size_t>(factors_[k].phi(b[k], i)), '+');
        s.append(static_cast<std::size_t>(factors_[k].epsilon(b[k], i)), '-');
    }
    return s;
}

std::vector<TensorElement> generate_demazure(const TensorCrystal& crystal, const Word& word, CrystalBounds bounds) {
    std::unordered_set<TensorElement, TensorElementHash> current{crystal.highest()};
    for (int k = word.length() - 1; k >= 0; --k) {
        const int i = word[k];
        std::vector<TensorElement> seeds(current.begin(), current.end());
        for (auto b : seeds) {
            while (auto next = crystal.f(b, i)) {
                b = *next;
                if (!current.insert(b).second) continue;
                if (current.size() > bounds.max_elements)
                    throw BoundExceeded("Demazure crystal exceeds " + std::to_string(bounds.max_elements) + " elements");
            }
        }
    }
    return sorted(std::move(current));
}

std::vector<TensorElement> lowering_closure(const TensorCrystal& crystal, const TensorElement& start,
                                            CrystalBounds bounds) {
    std::unordered_set<TensorElement, TensorElementHash> seen{start};
    std::deque<TensorElement> queue{start};
    while (!queue.empty()) {
        const TensorElement b = queue.front();
        queue.pop_front();
        for (int i = 0; i < crystal.rank(); ++i)
            if (auto next = crystal.f(b, i); next && seen.insert(*next).second) {
                if (seen.size() > bounds.max_elements)
                    throw BoundExceeded("crystal exceeds " + std::to_string(bounds.max_elements) + " elements");
                queue.push_back(*next);
            }
    }
    return sorted(std::move(seen));
}

std::string crystal_axiom_violation(const TensorCrystal& crystal, const std::vector<TensorElement>& elements) {
    const std::unordered_set<TensorElement, TensorElementHash> members(elements.begin(), elements.end());
    auto name = [](const TensorElement& b) {
        std::string s = "(";
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (k) s += "|";
            for (int x : b[k].members()) s += std::to_string(x) + ",";
        }
        return s + ")";
    };
    for (const auto& b : elements) {
        const Weight wt = crystal.weight(b);
        for (int i = 0; i < crystal.rank(); ++i) {
            const int eps = crystal.epsilon(b, i);
            const int phi = crystal.phi(b, i);
            const Weight alpha = crystal.factor(0).heap().diagram().simple_root(i);
            if (phi != eps + wt[i]) return "phi != eps + <alpha^vee, wt> at " + name(b);
            if (auto up = crystal.e(b, i)) {
                if (!members.count(*up)) return "set not closed under e_" + vertex_label(i) + " at " + name(b);
                if (crystal.weight(*up) != wt + alpha) return "e_i does not raise the weight by alpha_i at " + name(b);
                if (crystal.epsilon(*up, i) != eps - 1 || crystal.phi(*up, i) != phi + 1)
                    return "e_i breaks the eps/phi shifts at " + name(b);
                if (crystal.f(*up, i) != b) return "f_i e_i b != b at " + name(b);
            }
            if (auto down = crystal.f(b, i); down && members.count(*down)) {
                if (crystal.weight(*down) != wt - alpha) return "f_i does not lower the weight by alpha_i at " + name(b);
                if (crystal.epsilon(*down, i) != eps + 1 || crystal.phi(*down, i) != phi - 1)
                    return "f_i breaks the eps/phi shifts at " + name(b);
                if (crystal.e(*down, i) != b) return "e_i f_i b != b at " + name(b);
            }
            int string_length = 0;
            for (auto x = crystal.e(b, i); x; x = crystal.e(*x, i)) ++string_length;
            if (string_length != eps) return "eps_i differs from the e_i-string length at " + name(b);
        }
    }
    return {};
}

Rpp Rpp::from_chain(const Heap& heap, const std::vector<OrderIdeal>& chain) {
    const int n = static_cast<int>(chain.size());
    std::vector<int> values(heap.size(), 0);
    for (int k = 0; k < n; ++k) {
        if (!heap.is_ideal(chain[k])) throw Error("chain entry " + std::to_string(k + 1) + " is not an order ideal");
        if (k > 0 && !chain[k - 1].subset_of(chain[k]))
            throw Error("chain is not increasing at position " + std::to_string(k + 1));
        for (int x : chain[k].members()) ++values[x];
    }
    return Rpp(std::move(values), n);
}

Rpp Rpp::indicator(const Heap& heap, const OrderIdeal& ideal, int height) {
    std::vector<int> values(heap.size(), 0);
    for (int x : ideal.members()) values[x] = height;
    return Rpp(std::move(values), height);
}

Rpp Rpp::with_value(int element, int value) const {
    Rpp out = *this;
    out.values_[element] = value;
    return out;
}

bool Rpp::is_valid(const Heap& heap) const {
    if (static_cast<int>(values_.size()) != heap.size()) return false;
    for (int v : values_)
        if (v < 0 || v > height_) return false;
    for (const auto& e : heap.edges())
        if (values_[e.upper] > values_[e.lower]) return false;
    return true;
}

std::vector<OrderIdeal> Rpp::chain() const {
    std::vector<OrderIdeal> out;
    for (int k = 1; k <= height_; ++k) {
        std::uint64_t bits = 0;
        for (std::size_t x = 0; x < values_.size(); ++x)
            if (values_[x] >= height_ - k + 1) bits |= std::uint64_t{1} << x;
        out.emplace_back(bits);
    }
    return out;
}

Weight Rpp::weight(const Heap& heap, const Weight& lambda) const {
    Weight w = height_ * lambda;
    for (std::size_t x = 0; x < values_.size(); ++x)
        w -= values_[x] * heap.diagram().simple_root(heap.runner(static_cast<int>(x)));
    return w;
}

std::string Rpp::str() const {
    std::string s = "[";
    for (std::size_t x = 0; x < values_.size(); ++x) {
        if (x) s += ",";
        s += std::to_string(values_[x]);
    }
    return s + "]";
}

std::vector<Rpp> enumerate_rpps(const Heap& heap, int height, std::size_t limit) {
    // Fill values bottom-up along a linear extension; each value is capped by its lower covers.
    std::vector<int> order(heap.size());
    for (int x = 0; x < heap.size(); ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return heap.level(a) < heap.level(b); });
    std::vector<Rpp> out;
    std::vector<int> values(heap.size(), 0);
    auto fill = [&](auto&& self, std::size_t pos) -> void {
        if (pos == order.size()) {
            out.emplace_back(values, height);
            if (out.size() > limit) throw BoundExceeded("more than " + std::to_string(limit) + " RPPs");
            return;
        }
        const int x = order[pos];
        int cap = height;
        for (int y : heap.lower_covers(x)) cap = std::min(cap, values[y]);
        for (int v = 0; v <= cap; ++v) {
            values[x] = v;
            self(self, pos + 1);
        }
        values[x] = 0;
    };
    fill(fill, 0);
    std::sort(out.begin(), out.end());
    return out;
}

GravsortReport verify_gravsort(const IdealCrystal& atom, const Word& word, int height) {
    GravsortReport report;
    const TensorCrystal crystal = TensorCrystal::power(atom, height);
    const auto demazure = generate_demazure(crystal, word);
    report.demazure_size = demazure.size();

    std::vector<TensorElement> chains;
    for (const Rpp& rpp : enumerate_rpps(atom.heap(), height)) chains.push_back(rpp.chain());
    std::sort(chains.begin(), chains.end(), tensor_less);
    report.chain_image_size = chains.size();
    report.sets_equal = demazure == chains;
    if (!report.sets_equal) {
        std::vector<TensorElement> diff;
        std::set_symmetric_difference(demazure.begin(), demazure.end(), chains.begin(), chains.end(),
                                      std::back_inserter(diff), tensor_less);
        if (!diff.empty()) {
            std::vector<int> values(atom.heap().size(), 0);
            for (const auto& ideal : diff.front())
                for (int x : ideal.members()) ++values[x];
            report.witness = "chain with multiplicities " + Rpp(values, height).str();
        }
    }

    report.chains_closed = true;
    auto increasing = [&](const TensorElement& t) {
        for (std::size_t k = 1; k < t.size(); ++k)
            if (!t[k - 1].subset_of(t[k])) return false;
        return true;
    };
    for (const auto& c : chains)
        for (int i = 0; i < crystal.rank(); ++i) {
            if (auto up = crystal.e(c, i); up && !increasing(*up)) report.chains_closed = false;
            if (auto down = crystal.f(c, i); down && !increasing(*down)) report.chains_closed = false;
        }
    report.axioms = crystal_axiom_violation(crystal, demazure);
    return report;
}

CrystalGraph crystal_graph(const TensorCrystal& crystal, const std::vector<TensorElement>& elements) {
    CrystalGraph g;
    g.rank = crystal.rank();
    std::unordered_map<TensorElement, int, TensorElementHash> index;
    for (std::size_t v = 0; v < elements.size(); ++v) index.emplace(elements[v], static_cast<int>(v));
    g.f.assign(g.rank, std::vector<int>(elements.size(), -1));
    g.e.assign(g.rank, std::vector<int>(elements.size(), -1));
    for (std::size_t v = 0; v < elements.size(); ++v) {
        g.weight.push_back(crystal.weight(elements[v]));
        for (int i = 0; i < g.rank; ++i) {
            if (auto down = crystal.f(elements[v], i))
                if (auto it = index.find(*down); it != index.end()) g.f[i][v] = it->second;
            if (auto up = crystal.e(elements[v], i))
                if (auto it = index.find(*up); it != index.end()) g.e[i][v] = it->second;
        }
    }
    return g;
}

std::string crystal_to_dot(const CrystalGraph& graph, const std::vector<std::string>& labels) {
    static constexpr const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "black", "cyan"};
    std::ostringstream out;
    out << "digraph crystal {\n  node [shape=box];\n";
    for (int v = 0; v < graph.size(); ++v)
        out << "  b" << v << " [label=\"" << (v < static_cast<int>(labels.size()) ? labels[v] : std::to_string(v))
            << "\\n" << graph.weight[v].str() << "\"];\n";
    for (int i = 0; i < graph.rank; ++i)
        for (int v = 0; v < graph.size(); ++v)
            if (graph.f[i][v] >= 0)
                out << "  b" << v << " -> b" << graph.f[i][v] << " [label=\"" << vertex_label(i) << "\", color=" << palette[i % 8]
                    << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace heapcrys
