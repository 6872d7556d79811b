#include "heapcrys/grassmannian.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "heapcrys/errors.hpp"
#include "heapcrys/parallel.hpp"
#include "heapcrys/toggle_cactus.hpp"

namespace heapcrys {

namespace {

Matrix block_diagonal(const Matrix& block, int copies) {
    Matrix out(block.rows() * copies, block.cols() * copies);
    for (int c = 0; c < copies; ++c)
        for (int r = 0; r < block.rows(); ++r)
            for (int col = 0; col < block.cols(); ++col)
                out(c * block.rows() + r, c * block.cols() + col) = block(r, col);
    return out;
}

Matrix power(const Matrix& m, int s) {
    Matrix out = Matrix::identity(m.rows());
    for (int k = 0; k < s; ++k) out = m * out;
    return out;
}

std::string ideal_string(const Heap& heap, const OrderIdeal& ideal) {
    std::string out = "{";
    bool first = true;
    for (int x : ideal.members()) {
        if (!first) out += ",";
        out += heap.label(x);
        first = false;
    }
    return out + "}";
}

std::string triple_string(int vertex, int k, int s) {
    return "(i=" + vertex_label(vertex) + ", k=" + std::to_string(k) + ", s=" + std::to_string(s) + ")";
}

}  // namespace

// ---------------------------------------------------------------- Ambient

Ambient::Ambient(HeapModule module, int copies) : module_(std::move(module)), copies_(copies) {
    if (copies < 0) throw Error("multiplicity must be non-negative");
    const auto& arrows = module_.orientation().arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a)
        arrows_.push_back(block_diagonal(module_.arrow_matrix(static_cast<int>(a)), copies_));

    const int r = rank();
    const int top = heap().max_level() + 1;
    for (int i = 0; i < r; ++i) {
        nilpotents_.push_back(block_diagonal(module_.nilpotent(i), copies_));
        std::vector<Matrix> powers;
        for (int s = 0; s <= fibre(i); ++s) powers.push_back(power(nilpotents_[i], s));
        for (int s = 0; s <= fibre(i); ++s) {
            const Subspace kernel_space = Subspace::span(dim(i), kernel(powers[s]));
            if (kernel_space != Subspace::coordinate(dim(i), kernel_coordinates(i, s)))
                throw InternalError("kernel of A_" + vertex_label(i) + "^" + std::to_string(s) +
                                    " is not the coordinate flag");
        }
        nilpotent_powers_.push_back(std::move(powers));

        std::vector<Subspace> layers;
        layers.emplace_back(dim(i));
        for (int k = 1; k <= top; ++k) {
            const Subspace& one = module_.path_kernel(i, k);
            std::vector<Vector> generators;
            for (int c = 0; c < copies_; ++c)
                for (const auto& v : one.basis()) {
                    Vector g(dim(i));
                    for (int t = 0; t < fibre(i); ++t) g[c * fibre(i) + t] = v[t];
                    generators.push_back(std::move(g));
                }
            layers.push_back(Subspace::span(dim(i), generators));
        }
        socle_layers_.push_back(std::move(layers));
    }
}

int Ambient::total_dim() const {
    int total = 0;
    for (int i = 0; i < rank(); ++i) total += dim(i);
    return total;
}

int Ambient::offset(int vertex) const {
    int total = 0;
    for (int i = 0; i < vertex; ++i) total += dim(i);
    return total;
}

std::vector<int> Ambient::kernel_coordinates(int vertex, int s) const {
    std::vector<int> coords;
    const int depth = std::clamp(s, 0, fibre(vertex));
    for (int c = 0; c < copies_; ++c)
        for (int b = 1; b <= depth; ++b) coords.push_back(coordinate(vertex, c, b));
    return coords;
}

std::vector<int> Ambient::first_copies(int vertex, int k) const {
    std::vector<int> coords;
    const int last = std::clamp(k, 0, copies_);
    for (int c = 0; c < last; ++c)
        for (int b = 1; b <= fibre(vertex); ++b) coords.push_back(coordinate(vertex, c, b));
    return coords;
}

const Subspace& Ambient::socle_layer(int vertex, int k) const {
    const auto& layers = socle_layers_[vertex];
    return layers[std::clamp(k, 0, static_cast<int>(layers.size()) - 1)];
}

Matrix Ambient::projection(int vertex, int copy) const {
    Matrix p(fibre(vertex), dim(vertex));
    for (int b = 1; b <= fibre(vertex); ++b) p(b - 1, coordinate(vertex, copy, b)) = 1;
    return p;
}

// -------------------------------------------------------------- Submodule

Submodule::Submodule(std::shared_ptr<const Ambient> ambient, std::vector<Subspace> parts)
    : ambient_(std::move(ambient)), parts_(std::move(parts)) {
    if (!ambient_) throw Error("submodule needs an ambient module");
    if (static_cast<int>(parts_.size()) != ambient_->rank()) throw Error("one subspace per vertex is required");
    for (int i = 0; i < ambient_->rank(); ++i)
        if (parts_[i].ambient_dim() != ambient_->dim(i))
            throw Error("subspace at vertex " + vertex_label(i) + " has the wrong ambient dimension");
    const auto& arrows = ambient_->module().orientation().arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const Subspace image = parts_[arrows[a].tail].image(ambient_->arrow(static_cast<int>(a)));
        if (!parts_[arrows[a].head].contains(image))
            throw Error("subspace is not closed under the arrow " + vertex_label(arrows[a].tail) + " -> " +
                        vertex_label(arrows[a].head));
    }
}

Submodule Submodule::zero(std::shared_ptr<const Ambient> ambient) {
    std::vector<Subspace> parts;
    for (int i = 0; i < ambient->rank(); ++i) parts.emplace_back(ambient->dim(i));
    return Submodule(std::move(ambient), std::move(parts));
}

Submodule Submodule::whole(std::shared_ptr<const Ambient> ambient) {
    std::vector<Subspace> parts;
    for (int i = 0; i < ambient->rank(); ++i) parts.push_back(Subspace::whole(ambient->dim(i)));
    return Submodule(std::move(ambient), std::move(parts));
}

Submodule Submodule::generated_by(std::shared_ptr<const Ambient> ambient,
                                  const std::vector<std::pair<int, Vector>>& generators) {
    const int r = ambient->rank();
    std::vector<std::vector<Vector>> seeds(r);
    for (const auto& [vertex, v] : generators) {
        if (vertex < 0 || vertex >= r) throw Error("generator vertex out of range");
        if (static_cast<int>(v.size()) != ambient->dim(vertex)) throw Error("generator has the wrong length");
        seeds[vertex].push_back(v);
    }
    std::vector<Subspace> parts;
    for (int i = 0; i < r; ++i) parts.push_back(Subspace::span(ambient->dim(i), seeds[i]));
    const auto& arrows = ambient->module().orientation().arrows();
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            const Subspace image = parts[arrows[a].tail].image(ambient->arrow(static_cast<int>(a)));
            Subspace& head = parts[arrows[a].head];
            if (head.contains(image)) continue;
            head = head.sum(image);
            grew = true;
        }
    }
    return Submodule(std::move(ambient), std::move(parts));
}

Submodule Submodule::coordinate(std::shared_ptr<const Ambient> ambient, const std::vector<OrderIdeal>& ideals) {
    if (static_cast<int>(ideals.size()) != ambient->copies()) throw Error("one ideal per copy is required");
    const Heap& heap = ambient->heap();
    std::vector<std::vector<int>> coords(ambient->rank());
    for (int c = 0; c < ambient->copies(); ++c) {
        if (!heap.is_ideal(ideals[c])) throw Error("copy " + std::to_string(c + 1) + " is not given an order ideal");
        for (int x : ideals[c].members())
            coords[heap.runner(x)].push_back(ambient->coordinate(heap.runner(x), c, heap.index(x)));
    }
    std::vector<Subspace> parts;
    for (int i = 0; i < ambient->rank(); ++i) parts.push_back(Subspace::coordinate(ambient->dim(i), coords[i]));
    return Submodule(std::move(ambient), std::move(parts));
}

std::vector<int> Submodule::dimension_vector() const {
    std::vector<int> v;
    for (const auto& p : parts_) v.push_back(p.dim());
    return v;
}

int Submodule::dim() const {
    int total = 0;
    for (const auto& p : parts_) total += p.dim();
    return total;
}

Submodule Submodule::truncated(int k) const {
    std::vector<Subspace> parts;
    for (int i = 0; i < ambient_->rank(); ++i)
        parts.push_back(parts_[i].intersect(Subspace::coordinate(ambient_->dim(i), ambient_->first_copies(i, k))));
    return Submodule(ambient_, std::move(parts));
}

Subspace Submodule::subquotient(int vertex, int k) const {
    if (k < 1 || k > ambient_->copies()) throw Error("subquotient index out of range");
    const Subspace layer =
        parts_[vertex].intersect(Subspace::coordinate(ambient_->dim(vertex), ambient_->first_copies(vertex, k)));
    return layer.image(ambient_->projection(vertex, k - 1));
}

std::optional<OrderIdeal> Submodule::subquotient_ideal(int k) const {
    const Heap& heap = ambient_->heap();
    OrderIdeal ideal;
    for (int i = 0; i < ambient_->rank(); ++i) {
        const auto support = subquotient(i, k).coordinate_support();
        if (!support) return std::nullopt;
        for (int c : *support) ideal = ideal.with(heap.element_at(i, c + 1));
    }
    return ideal;
}

std::string Submodule::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    const int total = ambient_->total_dim();
    for (int i = 0; i < ambient_->rank(); ++i) {
        const int off = ambient_->offset(i);
        for (const auto& v : parts_[i].basis()) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < total; ++c) {
                const int local = c - off;
                row.push_back(local >= 0 && local < ambient_->dim(i) ? v[local].str() : std::string("0"));
            }
            rows.push_back(std::move(row));
        }
    }
    nlohmann::json out;
    out["type"] = ambient_->heap().diagram().name();
    out["word"] = ambient_->heap().word().str();
    out["n"] = ambient_->copies();
    out["rows"] = std::move(rows);
    return out.dump(2);
}

Submodule submodule_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed module JSON: ") + e.what());
    }
    for (const char* key : {"type", "word", "n", "rows"})
        if (!doc.contains(key)) throw Error(std::string("module JSON lacks \"") + key + "\"");
    const WeylGroup weyl(DynkinDiagram::from_spec(doc["type"].get<std::string>()));
    const Word word = Word::parse(doc["word"].get<std::string>());
    if (!weyl.is_dominant_minuscule(word)) throw Error(weyl.dominant_minuscule_failure(word));
    auto ambient = std::make_shared<const Ambient>(HeapModule::build(weyl, word), doc["n"].get<int>());

    const int total = ambient->total_dim();
    std::vector<Vector> rows;
    for (const auto& row : doc["rows"]) {
        if (static_cast<int>(row.size()) != total)
            throw Error("module row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(total));
        Vector v;
        for (const auto& entry : row)
            v.push_back(entry.is_string() ? Rational::parse(entry.get<std::string>()) : Rational(entry.get<long long>()));
        rows.push_back(std::move(v));
    }
    const Subspace span = Subspace::span(total, rows);
    std::vector<Subspace> parts;
    int graded_dim = 0;
    for (int i = 0; i < ambient->rank(); ++i) {
        std::vector<int> block(ambient->dim(i));
        std::iota(block.begin(), block.end(), ambient->offset(i));
        const Subspace piece = span.intersect(Subspace::coordinate(total, block));
        std::vector<Vector> local;
        for (const auto& v : piece.basis())
            local.emplace_back(v.begin() + ambient->offset(i), v.begin() + ambient->offset(i) + ambient->dim(i));
        parts.push_back(Subspace::span(ambient->dim(i), local));
        graded_dim += parts.back().dim();
    }
    if (graded_dim != span.dim()) throw Error("the rows do not span a graded subspace");
    return Submodule(std::move(ambient), std::move(parts));
}

// ------------------------------------------------------------ invariants

Rpp phi_of_module(const Submodule& m) {
    const Ambient& amb = m.ambient();
    const Heap& heap = amb.heap();
    std::vector<int> values(heap.size(), 0);
    for (int i = 0; i < amb.rank(); ++i) {
        int previous = 0;
        for (int s = 1; s <= amb.fibre(i); ++s) {
            const int current = m.part(i).dim_meet_coordinate(amb.kernel_coordinates(i, s));
            values[heap.element_at(i, s)] = current - previous;
            previous = current;
        }
    }
    return Rpp(std::move(values), amb.copies());
}

std::map<std::pair<int, int>, int> socle_dimension_matrix(const Submodule& m) {
    const Ambient& amb = m.ambient();
    std::map<std::pair<int, int>, int> sd;
    const int top = amb.heap().max_level() + 1;
    for (int i = 0; i < amb.rank(); ++i) {
        int previous = 0;
        for (int k = 1; k <= top; ++k) {
            const int current = m.part(i).intersect(amb.socle_layer(i, k)).dim();
            sd[{i, k}] = current - previous;
            previous = current;
        }
    }
    return sd;
}

std::string socle_mismatch(const Submodule& m, const Rpp& phi) {
    const Heap& heap = m.ambient().heap();
    std::map<std::pair<int, int>, int> expected;
    for (int x = 0; x < heap.size(); ++x) expected[{heap.runner(x), heap.level(x)}] = phi[x];
    for (const auto& [key, value] : socle_dimension_matrix(m)) {
        const auto it = expected.find(key);
        const int want = it == expected.end() ? 0 : it->second;
        if (value != want) {
            return "SD(" + vertex_label(key.first) + ", level " + std::to_string(key.second) + ") = " +
                   std::to_string(value) + ", expected " + std::to_string(want);
        }
    }
    return {};
}

std::string subquotient_kernel_mismatch(const Submodule& m) {
    const Ambient& amb = m.ambient();
    std::vector<std::vector<Subspace>> layers(amb.rank());
    for (int i = 0; i < amb.rank(); ++i)
        for (int k = 1; k <= amb.copies(); ++k) layers[i].push_back(m.subquotient(i, k));
    for (int i = 0; i < amb.rank(); ++i) {
        for (int s = 1; s <= amb.fibre(i); ++s) {
            const int left = m.part(i).dim_meet_coordinate(amb.kernel_coordinates(i, s));
            std::vector<int> bottom(s);
            std::iota(bottom.begin(), bottom.end(), 0);
            int right = 0;
            for (const auto& layer : layers[i]) right += layer.dim_meet_coordinate(bottom);
            if (left != right) {
                return "vertex " + vertex_label(i) + ", s=" + std::to_string(s) + ": dim(M_i ∩ ker A^s) = " +
                       std::to_string(left) + " but the subquotients give " + std::to_string(right);
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------- C1, C2

namespace {

// F_j = M_i^{<=j} for j = 0..n at one vertex, F_j = 0 below.
struct VertexFiltration {
    std::vector<Subspace> levels;
    const Subspace& at(int j) const { return levels[std::clamp(j, 0, static_cast<int>(levels.size()) - 1)]; }
};

VertexFiltration vertex_filtration(const Submodule& m, int vertex) {
    const Ambient& amb = m.ambient();
    VertexFiltration f;
    for (int j = 0; j <= amb.copies(); ++j)
        f.levels.push_back(
            m.part(vertex).intersect(Subspace::coordinate(amb.dim(vertex), amb.first_copies(vertex, j))));
    return f;
}

ConditionResult evaluate_conditions(const Submodule& m, const VertexFiltration& f, int vertex, int k, int s) {
    const Matrix& as = m.ambient().nilpotent_power(vertex, std::clamp(s, 0, m.ambient().fibre(vertex)));
    const Subspace image_k = f.at(k).image(as);
    const bool escapes_k = !f.at(k - 1).contains(image_k);
    ConditionResult r;
    if (k >= 2) {
        const bool escapes_previous = !f.at(k - 2).contains(f.at(k - 1).image(as));
        r.c1 = !escapes_previous || escapes_k;
    }
    r.c2 = image_k.dim() == 0 || escapes_k;
    return r;
}

}  // namespace

ConditionResult check_c1_c2(const Submodule& m, int vertex, int k, int s) {
    return evaluate_conditions(m, vertex_filtration(m, vertex), vertex, k, s);
}

ConditionSummary check_all_conditions(const Submodule& m) {
    const Ambient& amb = m.ambient();
    ConditionSummary summary;
    for (int i = 0; i < amb.rank(); ++i) {
        const VertexFiltration f = vertex_filtration(m, i);
        for (int k = 1; k <= amb.copies(); ++k) {
            for (int s = 0; s <= amb.fibre(i); ++s) {
                const ConditionResult r = evaluate_conditions(m, f, i, k, s);
                if (!r.c1 && summary.c1) {
                    summary.c1 = false;
                    summary.first_c1_failure = triple_string(i, k, s);
                }
                if (!r.c2 && summary.c2) {
                    summary.c2 = false;
                    summary.first_c2_failure = triple_string(i, k, s);
                }
            }
        }
    }
    return summary;
}

// ---------------------------------------------------------------- sampler

std::vector<std::vector<Matrix>> endomorphism_basis(const HeapModule& module) {
    const int r = module.rank();
    std::vector<int> offsets(r + 1, 0);
    for (int i = 0; i < r; ++i) offsets[i + 1] = offsets[i] + module.dim(i) * module.dim(i);
    const int unknowns = offsets[r];
    // Unknown (i, row, col) of H_i sits at offsets[i] + row * dim_i + col.
    std::vector<Vector> equations;
    const auto& arrows = module.orientation().arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const Matrix& ma = module.arrow_matrix(static_cast<int>(a));
        const int t = arrows[a].tail;
        const int h = arrows[a].head;
        const int dt = module.dim(t);
        const int dh = module.dim(h);
        // (M_a H_t - H_h M_a)(row, col) = 0 for row < dh, col < dt.
        for (int row = 0; row < dh; ++row) {
            for (int col = 0; col < dt; ++col) {
                Vector eq(unknowns);
                for (int q = 0; q < dt; ++q) eq[offsets[t] + q * dt + col] += ma(row, q);
                for (int q = 0; q < dh; ++q) eq[offsets[h] + row * dh + q] -= ma(q, col);
                equations.push_back(std::move(eq));
            }
        }
    }
    std::vector<std::vector<Matrix>> basis;
    for (const auto& v : kernel(Matrix::from_rows(equations, unknowns))) {
        std::vector<Matrix> tuple;
        for (int i = 0; i < r; ++i) {
            Matrix h(module.dim(i), module.dim(i));
            for (int row = 0; row < module.dim(i); ++row)
                for (int col = 0; col < module.dim(i); ++col) h(row, col) = v[offsets[i] + row * module.dim(i) + col];
            tuple.push_back(std::move(h));
        }
        basis.push_back(std::move(tuple));
    }
    return basis;
}

ZPhiSampler::ZPhiSampler(std::shared_ptr<const Ambient> ambient, SamplerConfig config)
    : ambient_(std::move(ambient)), config_(config), basis_(endomorphism_basis(ambient_->module())) {
    if (config_.coefficient_range < 0 || config_.retries < 1) throw Error("invalid sampler configuration");
}

Submodule ZPhiSampler::sample(const Rpp& phi, std::mt19937_64& rng) const {
    const Ambient& amb = *ambient_;
    const Heap& heap = amb.heap();
    const int n = amb.copies();
    if (phi.height() != n || !phi.is_valid(heap)) throw Error("sampler needs an RPP of height " + std::to_string(n));
    const std::vector<OrderIdeal> chain = phi.chain();
    std::uniform_int_distribution<int> coefficient(-config_.coefficient_range, config_.coefficient_range);

    for (int attempt = 0; attempt < config_.retries; ++attempt) {
        // h[j][k]: random endomorphism placed in row j of column k (j < k).
        std::vector<std::vector<std::vector<Matrix>>> h(n, std::vector<std::vector<Matrix>>(n));
        for (int k = 1; k < n; ++k) {
            for (int j = 0; j < k; ++j) {
                std::vector<Matrix> tuple;
                for (int i = 0; i < amb.rank(); ++i) tuple.emplace_back(amb.fibre(i), amb.fibre(i));
                for (const auto& b : basis_) {
                    const Rational c(coefficient(rng));
                    if (c.is_zero()) continue;
                    for (int i = 0; i < amb.rank(); ++i) tuple[i] = tuple[i] + c * b[i];
                }
                h[j][k] = std::move(tuple);
            }
        }
        std::vector<std::vector<Vector>> generators(amb.rank());
        for (int k = 0; k < n; ++k) {
            for (int x : chain[k].members()) {
                const int i = heap.runner(x);
                const int bead = heap.index(x) - 1;
                Vector g(amb.dim(i));
                g[amb.coordinate(i, k, bead + 1)] = 1;
                for (int j = 0; j < k; ++j)
                    for (int t = 0; t < amb.fibre(i); ++t) g[amb.coordinate(i, j, t + 1)] = h[j][k][i](t, bead);
                generators[i].push_back(std::move(g));
            }
        }
        std::vector<Subspace> parts;
        for (int i = 0; i < amb.rank(); ++i) parts.push_back(Subspace::span(amb.dim(i), generators[i]));
        Submodule m(ambient_, std::move(parts));
        bool exact = true;
        for (int k = 1; k <= n && exact; ++k) exact = m.subquotient_ideal(k) == chain[k - 1];
        if (exact) return m;
    }
    throw InternalError("sampler exhausted its retry budget for " + phi.str());
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t task) {
    std::uint64_t x = root ^ (task * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// ---------------------------------------------------------- main theorem

MainTheoremReport verify_main_theorem(const WeylGroup& weyl, const Word& word, int n, int seeds,
                                      std::uint64_t root_seed) {
    if (seeds < 1) throw Error("at least one seed is required");
    auto ambient = std::make_shared<const Ambient>(HeapModule::build(weyl, word), n);
    const ZPhiSampler sampler(ambient);
    const std::vector<Rpp> rpps = enumerate_rpps(ambient->heap(), n);

    struct Outcome {
        std::size_t failures = 0;
        std::string witness;
        std::vector<Rpp> observed;
    };
    std::vector<Outcome> outcomes(rpps.size());
    parallel_for(rpps.size(), [&](std::size_t r) {
        Outcome& out = outcomes[r];
        const Rpp& phi = rpps[r];
        for (int seed = 0; seed < seeds; ++seed) {
            std::mt19937_64 rng(derive_seed(root_seed, r * static_cast<std::uint64_t>(seeds) + seed));
            const Submodule m = sampler.sample(phi, rng);
            const Rpp got = phi_of_module(m);
            out.observed.push_back(got);
            std::string problem;
            if (got != phi) {
                problem = "Phi_M = " + got.str();
            } else if (auto e = subquotient_kernel_mismatch(m); !e.empty()) {
                problem = e;
            } else if (auto s = socle_mismatch(m, got); !s.empty()) {
                problem = s;
            }
            if (!problem.empty()) {
                if (out.failures++ == 0) {
                    out.witness = "w=" + word.str() + " n=" + std::to_string(n) + " Phi=" + phi.str() +
                                  " seed=" + std::to_string(seed) + ": " + problem;
                }
            }
        }
    });

    MainTheoremReport report;
    report.rpps = rpps.size();
    std::set<Rpp> images;
    for (std::size_t r = 0; r < rpps.size(); ++r) {
        report.samples += outcomes[r].observed.size();
        report.failures += outcomes[r].failures;
        if (report.witness.empty()) report.witness = outcomes[r].witness;
        for (const auto& got : outcomes[r].observed) images.insert(got);
    }
    // Distinct RPPs must give distinct outputs, and every output is one of the RPPs.
    if (report.failures == 0 && images.size() != rpps.size()) {
        ++report.failures;
        report.witness = "Phi -> Phi_M is not a bijection: " + std::to_string(images.size()) + " images for " +
                         std::to_string(rpps.size()) + " RPPs";
    }
    return report;
}

// ------------------------------------------------------------- Springer

namespace {

// Sum of the arrows j -> j-1 (0-based vertices), block-diagonal over the copies.
Matrix left_map(const Ambient& amb, int tail) {
    const auto& arrows = amb.module().orientation().arrows();
    Matrix total(amb.dim(tail - 1), amb.dim(tail));
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].tail == tail && arrows[a].head == tail - 1) total = total + amb.arrow(static_cast<int>(a));
    return total;
}

}  // namespace

SpringerFlag springer_flag(const Submodule& m, int p) {
    const Ambient& amb = m.ambient();
    const int rank = amb.rank();
    const int mm = rank + 1;
    if (amb.heap().diagram().name() != "A" + std::to_string(rank)) throw Error("the Springer flag is defined in type A");
    if (p < 1 || 2 * p > mm) throw Error("the Springer flag needs 1 <= p <= m/2");
    const int hub = p - 1;  // vertex p, 0-based
    const int d = amb.dim(hub);

    // L^r from 1-based vertex `from` down to vertex p.
    auto path_to_hub = [&](int from) {
        Matrix total = Matrix::identity(amb.dim(from - 1));
        for (int v = from - 1; v > hub; --v) total = left_map(amb, v) * total;
        return total;
    };
    // L^r from vertex p down to 1-based vertex `to`.
    auto path_from_hub = [&](int to) {
        Matrix total = Matrix::identity(d);
        for (int v = hub; v > to - 1; --v) total = left_map(amb, v) * total;
        return total;
    };

    SpringerFlag flag;
    flag.spaces.emplace_back(d);
    for (int i = 1; i < mm; ++i) {
        const int vertex = mm - i;  // 1-based
        if (i <= mm - p)
            flag.spaces.push_back(m.part(vertex - 1).image(path_to_hub(vertex)));
        else
            flag.spaces.push_back(Subspace::preimage(path_from_hub(vertex), m.part(vertex - 1)));
    }
    flag.spaces.push_back(Subspace::whole(d));

    const Matrix& a = amb.nilpotent(hub);
    flag.stable = true;
    for (int i = 1; i <= mm; ++i) {
        if (!flag.spaces[i].contains(flag.spaces[i - 1])) flag.stable = false;
        if (!flag.spaces[i - 1].contains(flag.spaces[i].image(a))) flag.stable = false;
    }
    return flag;
}

Tableau springer_tableau(const Submodule& m, const SpringerFlag& flag, int p) {
    const Ambient& amb = m.ambient();
    const int mm = amb.rank() + 1;
    const int hub = p - 1;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= mm; ++i) {
        std::vector<int> row(i, 0);
        int previous = 0;
        for (int k = 1; k <= std::min(i, p); ++k) {
            const int current = flag.spaces[i].dim_meet_coordinate(amb.kernel_coordinates(hub, k));
            row[k - 1] = current - previous;
            previous = current;
        }
        rows.push_back(std::move(row));
    }
    return tableau_of_gt(GtPattern(std::move(rows)));
}

SpringerReport springer_compare(int m, int p, int n, int seeds, std::uint64_t root_seed) {
    const RectangularCorrespondence corr(m, p);
    auto ambient = std::make_shared<const Ambient>(HeapModule::build(corr.weyl(), corr.word()), n);
    const RppCrystal rpp_crystal(corr.weyl(), corr.word(), n);

    std::vector<int> shape(p, n);
    const std::vector<Tableau> tableaux = enumerate_ssyt(shape, m);
    const CrystalGraph tab_graph = tableau_crystal_graph(tableaux);
    std::vector<int> theta(m - 1);
    for (int j = 0; j < m - 1; ++j) theta[j] = m - 2 - j;
    const std::vector<int> xi = schuetzenberger(tab_graph, theta);
    auto tableau_index = [&](const Tableau& t) {
        const auto it = std::lower_bound(tableaux.begin(), tableaux.end(), t);
        if (it == tableaux.end() || *it != t) throw InternalError("tableau outside the enumerated crystal");
        return static_cast<int>(it - tableaux.begin());
    };

    // Crystal isomorphism RPP -> tableaux, matched along f-edges from the highest elements.
    const CrystalGraph& rg = rpp_crystal.graph();
    if (rg.size() != tab_graph.size()) throw InternalError("RPP and tableau crystals differ in size");
    std::vector<int> iso(rg.size(), -1);
    int tab_high = -1;
    for (int v = 0; v < tab_graph.size(); ++v) {
        bool high = true;
        for (int i = 0; i < tab_graph.rank; ++i) high = high && tab_graph.e[i][v] < 0;
        if (high) tab_high = v;
    }
    const int rpp_high = rpp_crystal.index_of(Rpp::zero(rpp_crystal.heap(), n));
    iso[rpp_high] = tab_high;
    std::deque<int> queue{rpp_high};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int i = 0; i < rg.rank; ++i) {
            const int a = rg.f[i][v];
            const int b = tab_graph.f[i][iso[v]];
            if ((a < 0) != (b < 0)) throw InternalError("RPP and tableau crystals are not isomorphic");
            if (a < 0) continue;
            if (iso[a] == -1) {
                iso[a] = b;
                queue.push_back(a);
            } else if (iso[a] != b) {
                throw InternalError("inconsistent crystal isomorphism");
            }
        }
    }

    SpringerReport report;
    auto compare = [&](const Submodule& module, const std::string& label) {
        const SpringerFlag flag = springer_flag(module, p);
        if (!flag.stable) {
            report.flags_stable = false;
            if (report.witness.empty()) report.witness = label + ": flag is not A-stable";
            return;
        }
        const Rpp phi = phi_of_module(module);
        const Tableau psi = springer_tableau(module, flag, p);
        const int direct = tableau_index(corr.tableau_of_rpp(phi));
        const int crystal = iso[rpp_crystal.index_of(phi)];
        const int got = tableau_index(psi);
        ++report.comparisons;
        if (got == xi[direct]) ++report.twisted_matches;
        if (got == direct) ++report.direct_matches;
        if (got == xi[crystal]) ++report.crystal_matches;
        if (report.witness.empty() && got != xi[direct]) {
            report.witness = label + ": Psi_V = " + psi.str() + ", xi(tableau of Phi_M) = " + tableaux[xi[direct]].str() +
                             ", tableau of Phi_M = " + tableaux[direct].str();
        }
    };

    const Heap& heap = ambient->heap();
    if (n == 1) {
        for (const auto& ideal : heap.order_ideals())
            compare(Submodule::coordinate(ambient, {ideal}), "ideal " + ideal_string(heap, ideal));
    } else {
        const ZPhiSampler sampler(ambient);
        const std::vector<Rpp> rpps = enumerate_rpps(heap, n);
        for (std::size_t r = 0; r < rpps.size(); ++r) {
            for (int seed = 0; seed < seeds; ++seed) {
                std::mt19937_64 rng(derive_seed(root_seed, r * static_cast<std::uint64_t>(seeds) + seed));
                compare(sampler.sample(rpps[r], rng), "Phi=" + rpps[r].str() + " seed=" + std::to_string(seed));
            }
        }
    }
    return report;
}

}  // namespace heapcrys
