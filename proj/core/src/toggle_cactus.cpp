#include "heapcrys/toggle_cactus.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "heapcrys/errors.hpp"
#include "heapcrys/tableaux.hpp"

namespace heapcrys {

OrderIdeal toggle_ideal(const Heap& heap, const OrderIdeal& ideal, int x) {
    if (ideal.contains(x)) {
        if ((heap.strictly_above(x) & ideal.bits()) == 0) return ideal.without(x);
    } else if ((heap.strictly_below(x) & ~ideal.bits()) == 0) {
        return ideal.with(x);
    }
    return ideal;
}

Rpp toggle_rpp(const Heap& heap, const Rpp& rpp, int x) {
    int low = rpp.height();
    for (int y : heap.lower_covers(x)) low = std::min(low, rpp[y]);
    int high = 0;
    for (int z : heap.upper_covers(x)) high = std::max(high, rpp[z]);
    return rpp.with_value(x, low + high - rpp[x]);
}

Rpp runner_toggle(const Heap& heap, const Rpp& rpp, int i) {
    Rpp out = rpp;
    for (int x : heap.fibre(i)) out = toggle_rpp(heap, out, x);
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw Error("composing permutations of different sizes");
    Permutation out(b.size());
    for (std::size_t v = 0; v < b.size(); ++v) out[v] = a[b[v]];
    return out;
}

Permutation identity_permutation(int size) {
    Permutation out(size);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

namespace {

Word coset_word(const WeylGroup& weyl, const Weight& lambda) {
    if (lambda.rank() != weyl.rank()) throw Error("weight has the wrong rank");
    if (!weyl.is_minuscule_weight(lambda)) throw Error(lambda.str() + " is not a minuscule weight");
    return weyl.longest_coset_rep(WeylGroup::stabiliser(lambda));
}

}  // namespace

RppCrystal::RppCrystal(const WeylGroup& weyl, const Weight& lambda, int n)
    : RppCrystal(weyl, coset_word(weyl, lambda), n) {}

RppCrystal::RppCrystal(const WeylGroup& weyl, const Word& word, int n)
    : weyl_(weyl), atom_(IdealCrystal::of_word(weyl, word)), n_(n) {
    if (n < 0) throw Error("RPP height must be non-negative");
    elements_ = enumerate_rpps(atom_.heap(), n);
    std::vector<TensorElement> chains;
    chains.reserve(elements_.size());
    for (const Rpp& r : elements_) chains.push_back(r.chain());
    graph_ = crystal_graph(TensorCrystal::power(atom_, n), chains);
}

int RppCrystal::index_of(const Rpp& rpp) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), rpp);
    if (it == elements_.end() || *it != rpp) throw Error("not an element of RPP(w, n): " + rpp.str());
    return static_cast<int>(it - elements_.begin());
}

Permutation RppCrystal::toggle(int i) const {
    if (i < 0 || i >= weyl_.rank()) throw Error("toggle index out of range");
    Permutation out(elements_.size());
    for (std::size_t v = 0; v < elements_.size(); ++v) out[v] = index_of(runner_toggle(heap(), elements_[v], i));
    return out;
}

Permutation RppCrystal::cactus(const std::vector<int>& J) const {
    if (J.empty()) throw Error("cactus generator needs a non-empty subdiagram");
    for (int j : J)
        if (j < 0 || j >= weyl_.rank()) throw Error("cactus vertex out of range");
    if (!weyl_.diagram().is_connected(J)) throw Error("cactus generator needs a connected subdiagram");
    return partial_schuetzenberger(graph_, J, weyl_.theta(J));
}

namespace {

std::vector<int> parse_vertex_set(const std::string& token, int rank) {
    std::vector<int> out;
    const std::string body = token.substr(1);
    if (body.empty()) throw Error("generator '" + token + "' has no vertices");
    if (body.front() == '{') {
        if (body.back() != '}') throw Error("unbalanced braces in '" + token + "'");
        std::stringstream in(body.substr(1, body.size() - 2));
        std::string part;
        while (std::getline(in, part, ',')) {
            if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) throw Error("bad vertex in '" + token + "'");
            out.push_back(std::stoi(part) - 1);
        }
    } else {
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad vertex in '" + token + "'");
            out.push_back(c - '1');
        }
    }
    for (int v : out)
        if (v < 0 || v >= rank) throw Error("vertex out of range in '" + token + "'");
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw Error("repeated vertex in '" + token + "'");
    return out;
}

}  // namespace

Permutation evaluate_expression(const RppCrystal& crystal, const std::string& expression) {
    std::stringstream in(expression);
    std::string token;
    std::vector<Permutation> factors;
    while (in >> token) {
        if (token == "id") {
            factors.push_back(identity_permutation(crystal.size()));
        } else if (token.size() >= 2 && token[0] == 't') {
            const auto vertices = parse_vertex_set(token, crystal.weyl().rank());
            if (vertices.size() != 1) throw Error("toggle '" + token + "' must name one vertex");
            factors.push_back(crystal.toggle(vertices.front()));
        } else if (token.size() >= 2 && token[0] == 's') {
            factors.push_back(crystal.cactus(parse_vertex_set(token, crystal.weyl().rank())));
        } else {
            throw Error("unknown generator '" + token + "'");
        }
    }
    if (factors.empty()) throw Error("empty expression");
    Permutation out = identity_permutation(crystal.size());
    for (const auto& p : factors) out = compose(out, p);
    return out;
}

IdentityResult check_identity(const RppCrystal& crystal, const std::string& identity) {
    const auto eq = identity.find('=');
    if (eq == std::string::npos || identity.find('=', eq + 1) != std::string::npos)
        throw Error("identity must have the form 'lhs = rhs'");
    IdentityResult result;
    result.identity = identity;
    result.height = crystal.height();
    const Permutation lhs = evaluate_expression(crystal, identity.substr(0, eq));
    const Permutation rhs = evaluate_expression(crystal, identity.substr(eq + 1));
    result.equal = lhs == rhs;
    for (int v = 0; v < crystal.size() && !result.equal; ++v)
        if (lhs[v] != rhs[v]) {
            result.witness = crystal.elements()[v].str() + ": lhs gives " + crystal.elements()[lhs[v]].str() +
                             ", rhs gives " + crystal.elements()[rhs[v]].str();
            break;
        }
    return result;
}

ToggleReport check_toggles(const RppCrystal& crystal) {
    ToggleReport report;
    const Heap& heap = crystal.heap();
    const Weight& lambda = crystal.atom().highest_weight();
    for (const Rpp& r : crystal.elements()) {
        for (int x = 0; x < heap.size(); ++x) {
            const Rpp once = toggle_rpp(heap, r, x);
            ++report.checks;
            if (!once.is_valid(heap)) return report.violation = "t_" + heap.label(x) + " leaves RPP(w,n) at " + r.str(), report;
            if (toggle_rpp(heap, once, x) != r)
                return report.violation = "t_" + heap.label(x) + " is not an involution at " + r.str(), report;
        }
        for (int i = 0; i < crystal.weyl().rank(); ++i) {
            const Rpp t = runner_toggle(heap, r, i);
            ++report.checks;
            if (runner_toggle(heap, t, i) != r)
                return report.violation = "t_" + vertex_label(i) + " is not an involution at " + r.str(), report;
            Rpp reversed = r;
            const auto& fibre = heap.fibre(i);
            for (auto it = fibre.rbegin(); it != fibre.rend(); ++it) reversed = toggle_rpp(heap, reversed, *it);
            if (reversed != t)
                return report.violation = "toggles on runner " + vertex_label(i) + " do not commute at " + r.str(), report;
            if (t.weight(heap, lambda) != crystal.weyl().diagram().reflect(i, r.weight(heap, lambda)))
                return report.violation = "wt(t_" + vertex_label(i) + " b) != s_i wt(b) at " + r.str(), report;
        }
    }
    return report;
}

std::vector<std::vector<int>> connected_subdiagrams(const DynkinDiagram& diagram) {
    if (diagram.rank() > 63) throw Error("diagram too large for subdiagram enumeration");
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier;
    for (int v = 0; v < diagram.rank(); ++v) {
        seen.insert(std::uint64_t{1} << v);
        frontier.push_back(std::uint64_t{1} << v);
    }
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t mask : frontier)
            for (int v = 0; v < diagram.rank(); ++v)
                if ((mask >> v) & 1U)
                    for (int u : diagram.neighbours(v))
                        if (!((mask >> u) & 1U) && seen.insert(mask | (std::uint64_t{1} << u)).second)
                            next.push_back(mask | (std::uint64_t{1} << u));
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask : seen) {
        std::vector<int> J;
        for (int v = 0; v < diagram.rank(); ++v)
            if ((mask >> v) & 1U) J.push_back(v);
        out.push_back(std::move(J));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

namespace {

std::string set_name(const std::vector<int>& J) {
    std::string s = "{";
    for (std::size_t k = 0; k < J.size(); ++k) s += (k ? "," : "") + vertex_label(J[k]);
    return s + "}";
}

}  // namespace

CactusReport check_cactus_relations(const RppCrystal& crystal) {
    CactusReport report;
    const auto subs = connected_subdiagrams(crystal.weyl().diagram());
    std::map<std::vector<int>, Permutation> gens;
    for (const auto& J : subs) gens.emplace(J, crystal.cactus(J));
    const Permutation id = identity_permutation(crystal.size());
    const DynkinDiagram& d = crystal.weyl().diagram();

    for (const auto& J : subs) {
        ++report.relations;
        if (compose(gens[J], gens[J]) != id) return report.violation = "s_" + set_name(J) + " squared is not 1", report;
        const auto theta = crystal.weyl().theta(J);
        for (const auto& K : subs) {
            const bool inside = std::includes(J.begin(), J.end(), K.begin(), K.end());
            if (inside) {
                std::vector<int> image;
                for (int k : K) image.push_back(theta[k]);
                std::sort(image.begin(), image.end());
                ++report.relations;
                if (compose(gens[J], gens[K]) != compose(gens.at(image), gens[J]))
                    return report.violation = "s_" + set_name(J) + " s_" + set_name(K) + " != s_" + set_name(image) + " s_" +
                                              set_name(J),
                           report;
            }
            std::vector<int> both;
            std::set_union(J.begin(), J.end(), K.begin(), K.end(), std::back_inserter(both));
            if (!d.is_connected(both)) {
                ++report.relations;
                if (compose(gens[J], gens[K]) != compose(gens[K], gens[J]))
                    return report.violation = "s_" + set_name(J) + " and s_" + set_name(K) + " do not commute", report;
            }
        }
    }
    return report;
}

std::vector<IdentityResult> check_conjectures(const WeylGroup& weyl, const Weight& lambda, int n_max) {
    const DynkinDiagram& d = weyl.diagram();
    const int rank = d.rank();
    std::vector<std::string> identities;
    auto range = [](int from, int to) {
        std::vector<int> J;
        for (int v = from; v <= to; ++v) J.push_back(v - 1);
        return "s" + set_name(J);
    };
    const std::string spec = d.name();
    const bool type_d = spec.size() >= 2 && spec[0] == 'D' && rank >= 4 &&
                        std::all_of(spec.begin() + 1, spec.end(), ::isdigit);
    if (type_d && lambda == d.fundamental(0)) {
        if (rank == 4) {
            identities = {"t3 = s3", "t4 = s4", "t1 = s1", "t1 = s2 s1 s12", "t4 t2 t4 t2 t4 = s2"};
        } else {
            identities = {"t1 = s1", "t1 = s2 s1 s12"};
        }
    } else if (type_d && (lambda == d.fundamental(rank - 2) || lambda == d.fundamental(rank - 1))) {
        identities = {"t1 = s1", "t2 = s1 s12 s1"};
        for (int k = 3; k <= rank - 2; ++k)
            identities.push_back("t" + std::to_string(k) + " = " + range(1, k - 1) + " " + range(1, k) + " " + range(1, k - 1) +
                                 " " + range(1, k - 2));
    } else {
        for (int i = 0; i < rank; ++i) identities.push_back("t{" + vertex_label(i) + "} = s{" + vertex_label(i) + "}");
    }
    std::vector<IdentityResult> out;
    for (int n = 1; n <= n_max; ++n) {
        const RppCrystal crystal(weyl, lambda, n);
        for (const auto& identity : identities) out.push_back(check_identity(crystal, identity));
    }
    return out;
}

}  // namespace heapcrys
