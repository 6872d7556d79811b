#include "heapcrys/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "heapcrys/errors.hpp"

namespace heapcrys {

Word Word::parse(std::string_view text) {
    std::vector<int> letters;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw Error("malformed word letter '" + token + "'");
        const int letter = std::stoi(token);
        if (letter < 1) throw Error("word letters are 1-based vertex indices");
        letters.push_back(letter - 1);
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '(' || c == ')') flush();
        else token += c;
    }
    flush();
    return Word(std::move(letters));
}

bool Word::uses(int vertex) const { return std::find(letters_.begin(), letters_.end(), vertex) != letters_.end(); }

std::string Word::str() const {
    std::string out;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k) out += ",";
        out += vertex_label(letters_[k]);
    }
    return out;
}

namespace {

bool is_positive(const Root& r) {
    bool nonzero = false;
    for (int c : r) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int c : w.coords()) h = (h ^ static_cast<std::size_t>(c + 1000)) * 1099511628211ULL;
        return h;
    }
};

}  // namespace

WeylGroup::WeylGroup(DynkinDiagram diagram, WeylBounds bounds) : diagram_(std::move(diagram)), bounds_(bounds) {
    const int r = rank();
    std::set<Root> seen;
    std::deque<Root> queue;
    for (int i = 0; i < r; ++i) {
        Root a(r, 0);
        a[i] = 1;
        seen.insert(a);
        queue.push_back(a);
    }
    while (!queue.empty()) {
        Root beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            Root gamma = reflect_root(i, beta);
            if (is_positive(gamma) && seen.insert(gamma).second) queue.push_back(gamma);
        }
    }
    positive_roots_.assign(seen.begin(), seen.end());
    std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
        int ha = 0, hb = 0;
        for (int c : a) ha += c;
        for (int c : b) hb += c;
        return ha != hb ? ha < hb : a > b;
    });
}

Weight WeylGroup::act(const Word& word, Weight weight) const {
    for (int k = word.length() - 1; k >= 0; --k) weight = diagram_.reflect(word[k], std::move(weight));
    return weight;
}

Root WeylGroup::reflect_root(int i, Root root) const {
    int pairing = 0;
    for (int j = 0; j < rank(); ++j) pairing += diagram_.cartan(i, j) * root[j];
    root[i] -= pairing;
    return root;
}

Root WeylGroup::act_on_root(const Word& word, Root root) const {
    for (int k = word.length() - 1; k >= 0; --k) root = reflect_root(word[k], std::move(root));
    return root;
}

int WeylGroup::pairing(const Root& coroot, const Weight& weight) {
    int s = 0;
    for (std::size_t j = 0; j < coroot.size(); ++j) s += coroot[j] * weight[static_cast<int>(j)];
    return s;
}

int WeylGroup::length(const Word& word) const {
    for (int letter : word.letters())
        if (letter < 0 || letter >= rank()) throw Error("word letter " + vertex_label(letter) + " is not a vertex");
    const Weight k = key(word);
    int inversions = 0;
    for (const Root& beta : positive_roots_)
        if (pairing(beta, k) < 0) ++inversions;
    return inversions;
}

bool WeylGroup::is_reduced(const Word& word) const { return length(word) == word.length(); }

std::vector<int> WeylGroup::right_descents(const Word& word) const {
    std::vector<int> out;
    for (int i = 0; i < rank(); ++i) {
        Root a(rank(), 0);
        a[i] = 1;
        if (!is_positive(act_on_root(word, a))) out.push_back(i);
    }
    return out;
}

bool WeylGroup::is_fully_commutative(const Word& word) const {
    // Reduced words: the number of non-commuting letters strictly between two consecutive
    // occurrences of a generator is invariant under commutations; a braid i j i can be
    // produced exactly when that number is 1 for some pair.
    std::vector<int> last(rank(), -1);
    for (int k = 0; k < word.length(); ++k) {
        const int i = word[k];
        if (last[i] >= 0) {
            int between = 0;
            for (int t = last[i] + 1; t < k; ++t)
                if (diagram_.adjacent(i, word[t])) ++between;
            if (between < 2) return false;
        }
        last[i] = k;
    }
    return true;
}

std::vector<Word> WeylGroup::commutation_class(const Word& word, std::size_t class_limit) const {
    std::set<std::vector<int>> seen{word.letters()};
    std::deque<std::vector<int>> queue{word.letters()};
    while (!queue.empty()) {
        std::vector<int> w = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] == w[k + 1] || !diagram_.commute(w[k], w[k + 1])) continue;
            std::swap(w[k], w[k + 1]);
            if (seen.insert(w).second) {
                if (seen.size() > class_limit) throw BoundExceeded("commutation class exceeds limit");
                queue.push_back(w);
            }
            std::swap(w[k], w[k + 1]);
        }
    }
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const auto& w : seen) out.emplace_back(w);
    return out;
}

bool WeylGroup::is_fully_commutative_by_search(const Word& word, std::size_t class_limit) const {
    for (const Word& w : commutation_class(word, class_limit))
        for (int k = 0; k + 2 < w.length(); ++k)
            if (w[k] == w[k + 2] && diagram_.adjacent(w[k], w[k + 1])) return false;
    return true;
}

bool WeylGroup::is_lambda_minuscule(const Word& word, const Weight& lambda) const {
    Weight mu = lambda;
    for (int k = word.length() - 1; k >= 0; --k) {
        if (mu[word[k]] != 1) return false;
        mu = diagram_.reflect(word[k], std::move(mu));
    }
    return true;
}

std::string WeylGroup::dominant_minuscule_failure(const Word& word) const {
    if (!is_reduced(word)) return "word " + word.str() + " is not reduced";
    std::vector<int> last(rank(), -1);
    for (int k = 0; k < word.length(); ++k) {
        const int i = word[k];
        if (last[i] >= 0) {
            int between = 0;
            for (int t = last[i] + 1; t < k; ++t)
                if (diagram_.adjacent(i, word[t])) ++between;
            if (between != 2)
                return "consecutive occurrences of s" + vertex_label(i) + " at positions " +
                       std::to_string(last[i] + 1) + " and " + std::to_string(k + 1) + " are separated by " +
                       std::to_string(between) +
                       " non-commuting generators; a minuscule word needs exactly two";
        }
        last[i] = k;
    }
    for (int i = 0; i < rank(); ++i) {
        if (last[i] < 0) continue;
        int after = 0;
        for (int t = last[i] + 1; t < word.length(); ++t)
            if (diagram_.adjacent(i, word[t])) ++after;
        if (after > 1)
            return "the last occurrence of s" + vertex_label(i) + " (position " + std::to_string(last[i] + 1) +
                   ") is followed by " + std::to_string(after) +
                   " non-commuting generators; a dominant minuscule word allows at most one";
    }
    return {};
}

bool WeylGroup::is_minuscule(const Word& word) const {
    std::vector<int> last(rank(), -1);
    for (int k = 0; k < word.length(); ++k) {
        const int i = word[k];
        if (last[i] >= 0) {
            int between = 0;
            for (int t = last[i] + 1; t < k; ++t)
                if (diagram_.adjacent(i, word[t])) ++between;
            if (between != 2) return false;
        }
        last[i] = k;
    }
    return true;
}

bool WeylGroup::is_dominant_minuscule(const Word& word) const {
    if (!is_minuscule(word)) return false;
    std::vector<int> last(rank(), -1);
    for (int k = 0; k < word.length(); ++k) last[word[k]] = k;
    for (int i = 0; i < rank(); ++i) {
        if (last[i] < 0) continue;
        int after = 0;
        for (int t = last[i] + 1; t < word.length(); ++t)
            if (diagram_.adjacent(i, word[t])) ++after;
        if (after > 1) return false;
    }
    return true;
}

Witness WeylGroup::witnesses(const Word& word) const {
    const std::string failure = dominant_minuscule_failure(word);
    if (!failure.empty()) throw Error("no dominant witness: " + failure);
    Witness w{Weight::zero(rank()), {}};
    for (int i : right_descents(word)) w.minimal[i] = 1;
    for (int v = 0; v < rank(); ++v)
        if (!word.uses(v)) w.free_directions.push_back(v);
    if (!is_lambda_minuscule(word, w.minimal))
        throw InternalError("minimal witness " + w.minimal.str() + " fails the minuscule chain for " + word.str());
    return w;
}

std::vector<int> WeylGroup::stabiliser(const Weight& dominant) {
    std::vector<int> J;
    for (int i = 0; i < dominant.rank(); ++i)
        if (dominant[i] == 0) J.push_back(i);
    return J;
}

Word WeylGroup::longest_coset_rep(const std::vector<int>& J) const {
    Weight mu = Weight::zero(rank());
    std::vector<bool> in_j(rank(), false);
    for (int j : J) in_j.at(j) = true;
    for (int i = 0; i < rank(); ++i)
        if (!in_j[i]) mu[i] = 1;
    std::vector<int> applied;
    for (;;) {
        int pick = -1;
        for (int i = 0; i < rank(); ++i)
            if (mu[i] > 0) {
                pick = i;
                break;
            }
        if (pick < 0) break;
        mu = diagram_.reflect(pick, std::move(mu));
        applied.push_back(pick);
        if (static_cast<int>(applied.size()) > static_cast<int>(positive_roots_.size()))
            throw InternalError("greedy descent did not terminate");
    }
    std::reverse(applied.begin(), applied.end());
    return Word(std::move(applied));
}

std::vector<Word> WeylGroup::coset_representatives(const std::vector<int>& J) const {
    Weight start = Weight::zero(rank());
    std::vector<bool> in_j(rank(), false);
    for (int j : J) in_j.at(j) = true;
    for (int i = 0; i < rank(); ++i)
        if (!in_j[i]) start[i] = 1;
    std::vector<std::pair<Weight, Word>> found{{start, Word{}}};
    std::unordered_set<Weight, WeightHash> seen{start};
    for (std::size_t k = 0; k < found.size(); ++k) {
        for (int i = 0; i < rank(); ++i) {
            if (found[k].first[i] <= 0) continue;
            Weight next = diagram_.reflect(i, found[k].first);
            if (!seen.insert(next).second) continue;
            if (seen.size() > bounds_.max_coset_size)
                throw BoundExceeded("|W^J| exceeds the configured bound of " + std::to_string(bounds_.max_coset_size));
            std::vector<int> letters{i};
            letters.insert(letters.end(), found[k].second.letters().begin(), found[k].second.letters().end());
            found.emplace_back(std::move(next), Word(std::move(letters)));
        }
    }
    std::vector<Word> out;
    out.reserve(found.size());
    for (auto& [mu, w] : found) out.push_back(std::move(w));
    return out;
}

std::vector<Weight> WeylGroup::lower_interval(const Word& word, std::size_t limit) const {
    const Weight top = key(word);
    std::vector<Weight> out{top};
    std::unordered_set<Weight, WeightHash> seen{top};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int i = 0; i < rank(); ++i) {
            if (out[k][i] >= 0) continue;
            Weight next = diagram_.reflect(i, out[k]);
            if (!seen.insert(next).second) continue;
            if (seen.size() > limit) throw BoundExceeded("lower interval exceeds limit");
            out.push_back(std::move(next));
        }
    }
    return out;
}

Word WeylGroup::reduced_word_of(const Weight& key) const {
    Weight k = key;
    std::vector<int> letters;
    for (;;) {
        int pick = -1;
        for (int i = 0; i < rank(); ++i)
            if (k[i] < 0) {
                pick = i;
                break;
            }
        if (pick < 0) break;
        letters.push_back(pick);
        k = diagram_.reflect(pick, std::move(k));
    }
    if (k != rho()) throw Error("weight " + key.str() + " is not in the orbit of rho");
    return Word(std::move(letters));
}

Word WeylGroup::longest_element(const std::vector<int>& J) const {
    std::vector<bool> in_j(rank(), false);
    for (int j : J) in_j.at(j) = true;
    Weight mu = rho();
    std::vector<int> applied;
    for (;;) {
        int pick = -1;
        for (int j = 0; j < rank(); ++j)
            if (in_j[j] && mu[j] > 0) {
                pick = j;
                break;
            }
        if (pick < 0) break;
        mu = diagram_.reflect(pick, std::move(mu));
        applied.push_back(pick);
    }
    std::reverse(applied.begin(), applied.end());
    return Word(std::move(applied));
}

std::vector<int> WeylGroup::theta(const std::vector<int>& J) const {
    const Word w0 = longest_element(J);
    std::vector<int> out(rank());
    for (int v = 0; v < rank(); ++v) out[v] = v;
    for (int j : J) {
        Root a(rank(), 0);
        a[j] = 1;
        const Root image = act_on_root(w0, a);
        int target = -1;
        for (int v = 0; v < rank(); ++v) {
            if (image[v] == -1 && target < 0) target = v;
            else if (image[v] != 0) {
                target = -2;
                break;
            }
        }
        if (target < 0) throw InternalError("longest element of W_J does not send a simple root to a negative simple root");
        out[j] = target;
    }
    return out;
}

bool WeylGroup::is_minuscule_weight(const Weight& dominant) const {
    if (!dominant.is_dominant() || dominant.is_zero()) return false;
    return std::all_of(positive_roots_.begin(), positive_roots_.end(),
                       [&](const Root& beta) { return pairing(beta, dominant) <= 1; });
}

Rational WeylGroup::weyl_dimension(const Weight& dominant) const {
    if (!dominant.is_dominant()) throw Error("Weyl dimension formula needs a dominant weight");
    const Weight shifted = dominant + rho();
    Rational product = 1;
    for (const Root& beta : positive_roots_) product *= Rational(pairing(beta, shifted), pairing(beta, rho()));
    return product;
}

std::size_t WeylGroup::orbit_size(const Weight& weight, std::size_t limit) const {
    std::vector<Weight> orbit{weight};
    std::unordered_set<Weight, WeightHash> seen{weight};
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (int i = 0; i < rank(); ++i) {
            Weight next = diagram_.reflect(i, orbit[k]);
            if (seen.insert(next).second) {
                if (seen.size() > limit) throw BoundExceeded("orbit exceeds limit");
                orbit.push_back(std::move(next));
            }
        }
    }
    return orbit.size();
}

void WeylGroup::for_each_reduced_word(int max_length,
                                      const std::function<void(const std::vector<int>&)>& visit) const {
    const int r = rank();
    // columns[d][j] = w(alpha_j) for the current prefix w of length d.
    std::vector<std::vector<Root>> columns(static_cast<std::size_t>(max_length) + 1, std::vector<Root>(r));
    for (int j = 0; j < r; ++j) {
        columns[0][j].assign(r, 0);
        columns[0][j][j] = 1;
    }
    std::vector<int> letters;
    std::function<void(int)> descend = [&](int depth) {
        visit(letters);
        if (depth == max_length) return;
        for (int i = 0; i < r; ++i) {
            const Root& wi = columns[depth][i];
            if (!is_positive(wi)) continue;
            for (int j = 0; j < r; ++j) {
                Root& out = columns[depth + 1][j];
                out = columns[depth][j];
                const int c = diagram_.cartan(i, j);
                if (c != 0)
                    for (int t = 0; t < r; ++t) out[t] -= c * wi[t];
            }
            letters.push_back(i);
            descend(depth + 1);
            letters.pop_back();
        }
    };
    descend(0);
}

std::vector<Word> WeylGroup::dominant_minuscule_elements(int max_length) const {
    std::vector<Word> layer{Word{}};
    std::vector<Word> out;
    std::unordered_set<Weight, WeightHash> seen{rho()};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<std::pair<Weight, Word>> next;
        for (const Word& v : layer) {
            const Weight k = key(v);
            for (int i = 0; i < rank(); ++i) {
                if (k[i] <= 0) continue;
                std::vector<int> letters{i};
                letters.insert(letters.end(), v.letters().begin(), v.letters().end());
                Word candidate(std::move(letters));
                if (!is_dominant_minuscule(candidate)) continue;
                Weight ck = diagram_.reflect(i, k);
                if (!seen.insert(ck).second) continue;
                next.emplace_back(std::move(ck), std::move(candidate));
            }
        }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        layer.clear();
        for (auto& [k, w] : next) {
            out.push_back(w);
            layer.push_back(std::move(w));
        }
        if (layer.empty()) break;
    }
    return out;
}

}  // namespace heapcrys
