#include "heapcrys/preproj.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "heapcrys/errors.hpp"

namespace heapcrys {

namespace {

int arrow_between(const Orientation& orientation, int tail, int head) {
    const auto& arrows = orientation.arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].tail == tail && arrows[a].head == head) return static_cast<int>(a);
    throw InternalError("no arrow " + vertex_label(tail) + " -> " + vertex_label(head));
}

// Flattened entries, used as a dedupe key for path images.
std::vector<long long> matrix_key(const Matrix& m) {
    std::vector<long long> key;
    key.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) key.push_back(m(r, c).to_int64());
    return key;
}

}  // namespace

HeapModule HeapModule::build(const WeylGroup& weyl, const Word& word) {
    if (const std::string why = module_refusal(weyl, word); !why.empty()) throw Error(why);
    const Heap heap = Heap::build(weyl, word);
    const TwoColouring colouring = TwoColouring::canonical(weyl.diagram());
    return build(weyl, word, colouring, four_colouring(heap, colouring));
}

HeapModule HeapModule::build(const WeylGroup& weyl, const Word& word, const TwoColouring& colouring,
                             const EdgeColouring& edge_colouring) {
    if (const std::string why = module_refusal(weyl, word); !why.empty()) throw Error(why);
    HeapModule m;
    m.heap_ = Heap::build(weyl, word);
    m.colouring_ = colouring;
    m.orientation_ = Orientation::from_colouring(weyl.diagram(), colouring);
    m.edge_colouring_ = edge_colouring;
    if (const std::string v = colouring_violation(m.heap_, colouring, edge_colouring); !v.empty())
        throw Error("invalid edge colouring: " + v);
    m.witness_ = weyl.witnesses(word).minimal;

    const auto& arrows = m.orientation_.arrows();
    for (const auto& a : arrows) m.arrows_.emplace_back(m.dim(a.head), m.dim(a.tail));
    for (std::size_t k = 0; k < m.heap_.edges().size(); ++k) {
        const auto& e = m.heap_.edges()[k];
        const int a = arrow_between(m.orientation_, m.heap_.runner(e.upper), m.heap_.runner(e.lower));
        m.arrows_[a](m.heap_.index(e.lower) - 1, m.heap_.index(e.upper) - 1) = Rational(colour_sign(edge_colouring[k]));
    }

    // Enumerate path images level by level; arrows strictly lower the level, so paths of
    // length >= max_level vanish.
    const int r = m.rank();
    m.max_path_length_ = m.heap_.max_level();
    m.paths_.assign(r, {});
    m.path_kernels_.assign(r, {});
    for (int i = 0; i < r; ++i) {
        std::vector<PathImage> frontier{PathImage{i, Matrix::identity(m.dim(i)), QuiverPath{i, {}}}};
        m.paths_[i].push_back(frontier);
        for (int length = 1; length <= m.max_path_length_; ++length) {
            std::map<std::pair<int, std::vector<long long>>, PathImage> next;
            for (const auto& p : frontier)
                for (int a : m.orientation_.arrows_from(p.end)) {
                    Matrix product = m.arrows_[a] * p.matrix;
                    if (product.is_zero()) continue;
                    const int end = arrows[a].head;
                    auto key = std::make_pair(end, matrix_key(product));
                    if (next.count(key)) continue;
                    QuiverPath path = p.path;
                    path.arrows.push_back(a);
                    next.emplace(std::move(key), PathImage{end, std::move(product), std::move(path)});
                }
            frontier.clear();
            for (auto& [key, image] : next) frontier.push_back(std::move(image));
            m.paths_[i].push_back(frontier);
        }
        for (int length = 0; length <= m.max_path_length_; ++length) {
            std::vector<Vector> rows;
            for (const auto& p : m.paths_[i][length])
                for (int row = 0; row < p.matrix.rows(); ++row) rows.push_back(p.matrix.row(row));
            if (rows.empty()) {
                m.path_kernels_[i].push_back(Subspace::whole(m.dim(i)));
            } else {
                m.path_kernels_[i].push_back(Subspace::span(m.dim(i), kernel(Matrix::from_rows(rows, m.dim(i)))));
            }
        }
    }
    m.choose_nilpotents();
    return m;
}

std::vector<int> HeapModule::dimension_vector() const {
    std::vector<int> v(rank());
    for (int i = 0; i < rank(); ++i) v[i] = dim(i);
    return v;
}

Matrix HeapModule::relation_residual(int vertex) const {
    Matrix total(dim(vertex), dim(vertex));
    const auto& arrows = orientation_.arrows();
    for (int a : orientation_.arrows_into(vertex)) {
        const int partner = Orientation::partner(a);
        total = total + Rational(arrows[a].epsilon()) * (arrows_[a] * arrows_[partner]);
    }
    return total;
}

bool HeapModule::satisfies_relation() const {
    for (int i = 0; i < rank(); ++i)
        if (!relation_residual(i).is_zero()) return false;
    return true;
}

Matrix HeapModule::shift(int vertex) const {
    Matrix s(dim(vertex), dim(vertex));
    for (int t = 1; t < dim(vertex); ++t) s(t - 1, t) = Rational(1);
    return s;
}

Matrix HeapModule::path_matrix(const QuiverPath& path) const {
    Matrix m = Matrix::identity(dim(path.start));
    int at = path.start;
    for (int a : path.arrows) {
        if (orientation_.arrows()[a].tail != at) throw Error("path is not composable");
        m = arrows_[a] * m;
        at = orientation_.arrows()[a].head;
    }
    return m;
}

const std::vector<HeapModule::PathImage>& HeapModule::paths_from(int vertex, int length) const {
    static const std::vector<PathImage> none;
    if (length < 0 || length > max_path_length_) return none;
    return paths_[vertex][length];
}

const Subspace& HeapModule::path_kernel(int vertex, int length) const {
    const int capped = std::clamp(length, 0, max_path_length_);
    return path_kernels_[vertex][capped];
}

std::optional<HeapModule::PathCombination> HeapModule::realise(int vertex, const Matrix& target) const {
    const int d = dim(vertex);
    if (target.is_zero()) return PathCombination{};
    std::vector<const PathImage*> closed;
    for (int length = 1; length <= max_path_length_; ++length)
        for (const auto& p : paths_[vertex][length])
            if (p.end == vertex) closed.push_back(&p);
    // Columns vec(P_1), ..., vec(P_m), -vec(target); a kernel vector with nonzero last entry
    // expresses the target through the closed paths.
    const int m = static_cast<int>(closed.size());
    Matrix system(d * d, m + 1);
    for (int c = 0; c < m; ++c)
        for (int r = 0; r < d; ++r)
            for (int col = 0; col < d; ++col) system(r * d + col, c) = closed[c]->matrix(r, col);
    for (int r = 0; r < d; ++r)
        for (int col = 0; col < d; ++col) system(r * d + col, m) = -target(r, col);
    for (const auto& v : kernel(system)) {
        if (v[m].is_zero()) continue;
        PathCombination out;
        for (int c = 0; c < m; ++c)
            if (!v[c].is_zero()) out.terms.emplace_back(v[c] / v[m], closed[c]->path);
        return out;
    }
    return std::nullopt;
}

void HeapModule::choose_nilpotents() {
    nilpotent_.clear();
    for (int i = 0; i < rank(); ++i) {
        const int d = dim(i);
        if (d <= 1 || realise(i, shift(i))) {
            nilpotent_.push_back(shift(i));
            continue;
        }
        // Closed-path actions that live on the superdiagonal, as vectors indexed by s.
        std::vector<Vector> closed;
        for (int length = 1; length <= max_path_length_; ++length)
            for (const auto& p : paths_[i][length])
                if (p.end == i) {
                    Vector v(d * d);
                    for (int r = 0; r < d; ++r)
                        for (int c = 0; c < d; ++c) v[r * d + c] = p.matrix(r, c);
                    closed.push_back(std::move(v));
                }
        std::vector<int> superdiagonal;
        for (int s = 1; s < d; ++s) superdiagonal.push_back((s - 1) * d + s);
        const Subspace on_diagonal =
            Subspace::span(d * d, closed).intersect(Subspace::coordinate(d * d, superdiagonal));
        // Prefer a +-1 signed shift: try every sign pattern on the echelon basis.
        const auto& basis = on_diagonal.basis();
        const int k = static_cast<int>(basis.size());
        std::optional<Matrix> best;
        for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << std::min(k, 16)); ++pattern) {
            Matrix candidate(d, d);
            bool unit = true;
            bool nonzero = true;
            for (int s = 1; s < d; ++s) {
                Rational entry;
                for (int b = 0; b < k; ++b)
                    entry += ((pattern >> b) & 1U ? Rational(-1) : Rational(1)) * basis[b][(s - 1) * d + s];
                candidate(s - 1, s) = entry;
                nonzero = nonzero && !entry.is_zero();
                unit = unit && (entry == Rational(1) || entry == Rational(-1));
            }
            if (!nonzero) continue;
            if (unit) {
                best = candidate;
                break;
            }
            if (!best) best = candidate;
        }
        if (!best)
            throw InternalError("no element of the algebra acts as a shift on the fibre over vertex " + vertex_label(i));
        nilpotent_.push_back(*best);
    }
}

std::string HeapModule::to_json() const {
    nlohmann::json j;
    j["diagram"] = diagram().name();
    j["word"] = heap_.word().str();
    j["dimension_vector"] = dimension_vector();
    std::vector<std::string> signs;
    for (int i = 0; i < rank(); ++i) signs.push_back(colouring_[i] == Sign::Plus ? "+" : "-");
    j["two_colouring"] = signs;
    std::string colours;
    for (Colour c : edge_colouring_) colours.push_back(colour_letter(c));
    j["edge_colours"] = colours;
    nlohmann::json arrows = nlohmann::json::array();
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        const auto& arrow = orientation_.arrows()[a];
        std::vector<std::vector<long long>> rows;
        for (int r = 0; r < arrows_[a].rows(); ++r) {
            rows.emplace_back();
            for (int c = 0; c < arrows_[a].cols(); ++c) rows.back().push_back(arrows_[a](r, c).to_int64());
        }
        arrows.push_back({{"tail", arrow.tail + 1},
                          {"head", arrow.head + 1},
                          {"starred", arrow.starred},
                          {"epsilon", arrow.epsilon()},
                          {"matrix", rows}});
    }
    j["arrows"] = arrows;
    return j.dump();
}

Matrix sum_of_arrows(const HeapModule& module, const std::vector<int>& arrows, int tail, int head) {
    Matrix total(module.dim(head), module.dim(tail));
    for (int a : arrows) {
        const auto& arrow = module.orientation().arrows()[a];
        if (arrow.tail != tail || arrow.head != head) throw Error("arrow does not join the requested vertices");
        total = total + module.arrow_matrix(a);
    }
    return total;
}

std::string module_refusal(const WeylGroup& weyl, const Word& word) {
    const std::string failure = weyl.dominant_minuscule_failure(word);
    if (failure.empty()) return {};
    std::string message = "word " + word.str() + " is not dominant minuscule: " + failure;
    if (!weyl.is_reduced(word) || !weyl.is_fully_commutative(word)) return message;
    const Heap heap = Heap::build(weyl, word);
    // Count two-step downward paths x_i^{s+1} -> y -> x_i^s; an odd count cannot cancel under any signs.
    for (int i = 0; i < weyl.rank(); ++i)
        for (int s = 1; s < heap.fibre_size(i); ++s) {
            const int top = heap.element_at(i, s + 1);
            const int bottom = heap.element_at(i, s);
            int paths = 0;
            for (int y : heap.lower_covers(top)) {
                const auto& below = heap.lower_covers(y);
                paths += static_cast<int>(std::count(below.begin(), below.end(), bottom));
            }
            if (paths % 2 != 0)
                message += "; the preprojective relation fails at vertex " + vertex_label(i) + " (" +
                           std::to_string(paths) + " paths join " + heap.label(top) + " to " + heap.label(bottom) +
                           ", so no choice of signs cancels them)";
        }
    return message;
}

SocleReport socle_and_hull_checks(const HeapModule& module, const WeylGroup& weyl) {
    SocleReport report;
    const Heap& heap = module.heap();
    const int r = module.rank();

    report.socle_is_minimal_beads = true;
    for (int i = 0; i < r; ++i) {
        std::vector<int> minimal;
        for (int s = 1; s <= heap.fibre_size(i); ++s)
            if (heap.strictly_below(heap.element_at(i, s)) == 0) minimal.push_back(s - 1);
        if (!(module.path_kernel(i, 1) == Subspace::coordinate(module.dim(i), minimal))) {
            report.socle_is_minimal_beads = false;
            report.detail += "socle at vertex " + vertex_label(i) + " differs from the minimal beads; ";
        }
        for (std::size_t k = 0; k < minimal.size(); ++k) report.socle.push_back(i);
    }
    report.socle_matches_descents = report.socle == weyl.right_descents(heap.word());
    if (!report.socle_matches_descents) report.detail += "socle differs from the right descent set; ";

    Weight total = Weight::zero(r);
    for (int i = 0; i < r; ++i) total += module.dim(i) * weyl.diagram().simple_root(i);
    report.dimension_vector_matches = total == module.witness() - weyl.act(heap.word(), module.witness());
    if (!report.dimension_vector_matches) report.detail += "dimension vector differs from lambda - w lambda; ";

    report.levels_span_socle_layers = true;
    report.shift_kernels_match = true;
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k <= heap.max_level(); ++k) {
            std::vector<int> low;
            for (int s = 1; s <= heap.fibre_size(i); ++s)
                if (heap.level(heap.element_at(i, s)) <= k) low.push_back(s - 1);
            if (!(module.path_kernel(i, k) == Subspace::coordinate(module.dim(i), low))) {
                report.levels_span_socle_layers = false;
                report.detail += "soc^" + std::to_string(k) + " at vertex " + vertex_label(i) +
                                 " is not spanned by beads of level <= k; ";
            }
        }
        Matrix power = Matrix::identity(module.dim(i));
        const Matrix a = module.shift(i);
        for (int s = 1; s <= heap.fibre_size(i); ++s) {
            power = a * power;
            const Subspace ker = Subspace::span(module.dim(i), kernel(power));
            std::vector<int> first(s);
            for (int t = 0; t < s; ++t) first[t] = t;
            const int k = heap.level(heap.element_at(i, s));
            if (!(ker == Subspace::coordinate(module.dim(i), first)) || !(module.path_kernel(i, k) == ker)) {
                report.shift_kernels_match = false;
                report.detail += "ker A_" + vertex_label(i) + "^" + std::to_string(s) + " mismatch; ";
            }
        }
    }
    return report;
}

bool is_coordinate_submodule(const HeapModule& module, const OrderIdeal& beads) {
    const Heap& heap = module.heap();
    const auto& arrows = module.orientation().arrows();
    for (int x : beads.members())
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            if (arrows[a].tail != heap.runner(x)) continue;
            const Vector image = module.arrow_matrix(static_cast<int>(a)).column(heap.index(x) - 1);
            for (int t = 0; t < static_cast<int>(image.size()); ++t)
                if (!image[t].is_zero() && !beads.contains(heap.element_at(arrows[a].head, t + 1))) return false;
        }
    return true;
}

}  // namespace heapcrys
