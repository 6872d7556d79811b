#include "heapcrys/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "heapcrys/crystal.hpp"
#include "heapcrys/errors.hpp"
#include "heapcrys/grassmannian.hpp"
#include "heapcrys/parallel.hpp"
#include "heapcrys/preproj.hpp"
#include "heapcrys/toggle_cactus.hpp"

namespace heapcrys {

namespace {

constexpr std::string_view three_copies_json =
    R"({"type":"A3","word":"2,3,1,2","n":3,"rows":[)"
    R"(["1","1","1","0","0","0","0","0","0","0","0","0"],)"
    R"(["0","0","0","1","0","0","0","0","0","0","0","0"],)"
    R"(["0","0","0","0","0","1","0","0","0","0","0","0"],)"
    R"(["0","0","0","0","0","0","0","1","0","0","0","0"],)"
    R"(["0","0","0","0","1","0","1","0","1","0","0","0"],)"
    R"(["0","0","0","0","0","0","0","0","0","1","1","1"],)"
    R"(["0","0","0","0","0","0","0","0","0","0","2","4"]]})";

constexpr std::string_view two_copies_json =
    R"({"type":"A3","word":"2,3,1,2","n":2,"rows":[)"
    R"(["1","0","0","0","0","0","0","0"],)"
    R"(["0","0","0","1","1","0","0","0"],)"
    R"(["0","0","1","0","0","0","0","0"],)"
    R"(["0","0","0","0","0","0","1","0"]]})";

bool full(const SuiteOptions& o) { return o.bound == SuiteBound::Full; }

// Collects the first failure and a running detail line.
struct Outcome {
    bool passed = true;
    std::string witness;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (passed) witness = why;
        passed = false;
    }
    void require(bool condition, const std::function<std::string()>& why) {
        if (!condition) fail(why());
    }
};

struct Case {
    const char* type;
    Weight lambda;
};

Word coset_word(const WeylGroup& weyl, const Weight& lambda) {
    return weyl.longest_coset_rep(WeylGroup::stabiliser(lambda));
}

std::vector<Word> nonempty_dominant_minuscule(const WeylGroup& weyl, int max_length) {
    std::vector<Word> words = weyl.dominant_minuscule_elements(max_length);
    words.erase(std::remove_if(words.begin(), words.end(), [](const Word& w) { return w.length() == 0; }),
                words.end());
    return words;
}

// ------------------------------------------------------------------ 1

void stembridge_agreement(const SuiteOptions& options, Outcome& out) {
    const int max_length = full(options) ? 10 : 7;
    std::size_t words = 0;
    std::size_t positive = 0;
    for (const char* type : {"A4", "D4", "D5"}) {
        const WeylGroup weyl(DynkinDiagram::from_spec(type));
        weyl.for_each_reduced_word(max_length, [&](const std::vector<int>& letters) {
            const Word w(letters);
            Weight minimal = Weight::zero(weyl.rank());
            for (int i : weyl.right_descents(w)) minimal[i] = 1;
            const bool by_weight = weyl.is_lambda_minuscule(w, minimal);
            const bool by_heap = weyl.is_dominant_minuscule(w);
            ++words;
            positive += by_heap ? 1 : 0;
            out.require(by_weight == by_heap, [&] {
                return std::string(type) + " word " + w.str() + ": weight chain says " + (by_weight ? "yes" : "no") +
                       ", heap criterion says " + (by_heap ? "yes" : "no");
            });
        });
    }
    const WeylGroup d4(DynkinDiagram::from_spec("D4"));
    const Word non_example = Word::parse("2,1,3,4,2");
    out.require(!d4.is_dominant_minuscule(non_example), [] { return std::string("D4 2,1,3,4,2 classified minuscule"); });
    out.detail << words << " reduced words up to length " << max_length << ", " << positive
               << " dominant minuscule; D4 2,1,3,4,2 rejected";
}

// ------------------------------------------------------------------ 2

void counting_oracle(const SuiteOptions& options, Outcome& out) {
    const int max_n = full(options) ? 3 : 2;
    const std::vector<Case> cases{
        {"A3", Weight({0, 1, 0})},
        {"A4", Weight({0, 1, 0, 0})},
        {"D4", Weight({1, 0, 0, 0})},
        {"D5", Weight({0, 0, 0, 0, 1})},
    };
    for (const auto& c : cases) {
        const WeylGroup weyl(DynkinDiagram::from_spec(c.type));
        const Word word = coset_word(weyl, c.lambda);
        const IdealCrystal atom = IdealCrystal::of_word(weyl, word);
        for (int n = 1; n <= max_n; ++n) {
            const std::size_t demazure = generate_demazure(TensorCrystal::power(atom, n), word).size();
            const std::size_t rpps = enumerate_rpps(atom.heap(), n).size();
            const long long dimension = weyl.weyl_dimension(n * c.lambda).to_int64();
            out.require(demazure == rpps && static_cast<long long>(rpps) == dimension, [&] {
                return std::string(c.type) + " " + c.lambda.str() + " n=" + std::to_string(n) +
                       ": Demazure " + std::to_string(demazure) + ", RPP " + std::to_string(rpps) +
                       ", Weyl dimension " + std::to_string(dimension);
            });
            out.detail << c.type << c.lambda.str() << " n=" << n << ": " << rpps << "; ";
        }
    }
}

// ------------------------------------------------------------------ 3, 4

std::vector<std::pair<std::string, Word>> gravsort_words(const SuiteOptions& options) {
    const int max_length = full(options) ? 10 : 7;
    std::vector<std::pair<std::string, Word>> out;
    for (const char* type : {"A4", "D5"}) {
        const WeylGroup weyl(DynkinDiagram::from_spec(type));
        for (auto& w : nonempty_dominant_minuscule(weyl, max_length)) out.emplace_back(type, std::move(w));
    }
    return out;
}

void gravsort(const SuiteOptions& options, Outcome& out) {
    const auto words = gravsort_words(options);
    std::vector<std::string> failures(words.size());
    std::vector<std::size_t> sizes(words.size());
    parallel_for(words.size(), [&](std::size_t k) {
        const WeylGroup weyl(DynkinDiagram::from_spec(words[k].first));
        const IdealCrystal atom = IdealCrystal::of_word(weyl, words[k].second);
        for (int n = 1; n <= 2; ++n) {
            const GravsortReport r = verify_gravsort(atom, words[k].second, n);
            sizes[k] += r.demazure_size;
            if (!r.ok() && failures[k].empty()) {
                failures[k] = words[k].first + " " + words[k].second.str() + " n=" + std::to_string(n) + ": " +
                              (r.witness.empty() ? r.axioms : r.witness);
            }
        }
    });
    for (const auto& f : failures)
        if (!f.empty()) out.fail(f);
    out.detail << words.size() << " words, n <= 2, "
               << std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) << " Demazure elements compared";
}

void preprojective_relation(const SuiteOptions& options, Outcome& out) {
    auto words = gravsort_words(options);
    words.emplace_back("D5", Word::parse("5,3,2,4,1,3,2,5,3,4"));
    std::size_t checked = 0;
    for (const auto& [type, word] : words) {
        const WeylGroup weyl(DynkinDiagram::from_spec(type));
        const HeapModule module = HeapModule::build(weyl, word);
        for (int i = 0; i < module.rank(); ++i) {
            ++checked;
            out.require(module.relation_residual(i).is_zero(), [&] {
                return type + " " + word.str() + ": nonzero residual at vertex " + vertex_label(i);
            });
        }
    }
    const WeylGroup d4(DynkinDiagram::from_spec("D4"));
    bool refused = false;
    try {
        (void)HeapModule::build(d4, Word::parse("2,1,3,4,2"));
    } catch (const Error&) {
        refused = true;
    }
    out.require(refused, [] { return std::string("D4 2,1,3,4,2 was accepted as a module"); });
    out.detail << words.size() << " modules (including D5 5,3,2,4,1,3,2,5,3,4), " << checked
               << " vertex residuals zero; D4 2,1,3,4,2 refused";
}

// ------------------------------------------------------------------ 5

void main_theorem(const SuiteOptions& options, Outcome& out) {
    const int max_length = full(options) ? 9 : 6;
    const int max_n = full(options) ? 3 : 2;
    const int seeds = full(options) ? 25 : 4;
    std::size_t cases = 0;
    std::size_t rpps = 0;
    std::size_t samples = 0;
    for (const char* type : {"A3", "A4", "D4"}) {
        const WeylGroup weyl(DynkinDiagram::from_spec(type));
        for (const auto& w : nonempty_dominant_minuscule(weyl, max_length)) {
            for (int n = 1; n <= max_n; ++n) {
                const MainTheoremReport r = verify_main_theorem(weyl, w, n, seeds, derive_seed(options.seed, cases));
                ++cases;
                rpps += r.rpps;
                samples += r.samples;
                out.require(r.ok(), [&] { return std::string(type) + " " + r.witness; });
            }
        }
    }
    out.detail << cases << " (word, n) cases, " << rpps << " RPPs, " << samples << " sampled modules";
}

// ------------------------------------------------------------------ 6

void filtration_fixtures(const SuiteOptions&, Outcome& out) {
    {
        const Submodule m = submodule_from_json(std::string(three_copies_json));
        const Ambient& amb = m.ambient();
        const Submodule first = m.truncated(1);
        const Subspace v11 = Subspace::coordinate(amb.dim(1), {amb.coordinate(1, 0, 1)});
        out.require(first.part(0).dim() == 0 && first.part(2).dim() == 0 && first.part(1) == v11,
                    [] { return std::string("M^{<=1} is not span(v_1^1)"); });
        std::vector<int> layers;
        for (int k = 1; k <= 3; ++k) layers.push_back(m.subquotient(1, k).dim_meet_coordinate({0}));
        const int total = m.part(1).dim_meet_coordinate(amb.kernel_coordinates(1, 1));
        out.require(layers == std::vector<int>{1, 1, 1} && total == 3, [&] {
            return "subquotient kernel dimensions " + std::to_string(layers[0]) + "+" + std::to_string(layers[1]) +
                   "+" + std::to_string(layers[2]) + " against " + std::to_string(total);
        });
        out.detail << "three copies: M^{<=1} = span(v_1^1), " << layers[0] << "+" << layers[1] << "+" << layers[2]
                   << " = " << total << "; ";
    }
    {
        const Submodule m = submodule_from_json(std::string(two_copies_json));
        const Ambient& amb = m.ambient();
        const int first = m.subquotient(1, 1).dim_meet_coordinate({0});
        const int second = m.subquotient(1, 2).dim_meet_coordinate({0});
        const int total = m.part(1).dim_meet_coordinate(amb.kernel_coordinates(1, 1));
        out.require(first == 1 && second == 1 && total == 1, [&] {
            return "two copies: " + std::to_string(first) + "+" + std::to_string(second) + " against " +
                   std::to_string(total);
        });
        out.detail << "two copies: " << first << "+" << second << " = " << first + second << " > " << total;
    }
}

// ------------------------------------------------------------------ 7

struct ConditionTally {
    std::size_t instances = 0;
    std::size_t with_c1 = 0;
    std::size_t without_c1 = 0;
    std::string violation;

    void add(const Submodule& m, const std::string& label) {
        const ConditionSummary s = check_all_conditions(m);
        ++instances;
        (s.c1 ? with_c1 : without_c1) += 1;
        if (!violation.empty()) return;
        if (s.c1 && !s.c2) violation = label + ": C1 holds but C2 fails at " + s.first_c2_failure;
        if (s.c2 && !s.c1) violation = label + ": C2 holds but C1 fails at " + s.first_c1_failure;
    }
};

void condition_implication(const SuiteOptions& options, Outcome& out) {
    struct Job {
        std::string type;
        Word word;
        int n;
    };
    std::vector<Job> jobs;
    const int ad_length = full(options) ? 9 : 5;
    for (const char* type : {"A3", "A4", "D4"}) {
        const WeylGroup weyl(DynkinDiagram::from_spec(type));
        for (const auto& w : nonempty_dominant_minuscule(weyl, ad_length))
            for (int n = 2; n <= 3; ++n) jobs.push_back({type, w, n});
    }
    std::size_t e6_words = 0;
    {
        const WeylGroup e6(DynkinDiagram::from_spec("E6"));
        for (const auto& w : nonempty_dominant_minuscule(e6, full(options) ? 12 : 8)) {
            jobs.push_back({"E6", w, 2});
            ++e6_words;
        }
    }
    const std::size_t per_job_samples = full(options) ? 24 : 3;
    const std::size_t per_job_random = full(options) ? 16 : 2;

    std::vector<ConditionTally> tallies(jobs.size());
    std::vector<std::size_t> e6_instances(jobs.size(), 0);
    parallel_for(jobs.size(), [&](std::size_t j) {
        const Job& job = jobs[j];
        const WeylGroup weyl(DynkinDiagram::from_spec(job.type));
        auto ambient = std::make_shared<const Ambient>(HeapModule::build(weyl, job.word), job.n);
        const ZPhiSampler sampler(ambient);
        std::mt19937_64 rng(derive_seed(options.seed, 7000 + j));
        const std::string prefix = job.type + " " + job.word.str() + " n=" + std::to_string(job.n);
        ConditionTally& tally = tallies[j];

        std::vector<Rpp> rpps = enumerate_rpps(ambient->heap(), job.n);
        std::shuffle(rpps.begin(), rpps.end(), rng);
        for (std::size_t k = 0; k < rpps.size() && k < per_job_samples; ++k)
            tally.add(sampler.sample(rpps[k], rng), prefix + " sampled Phi=" + rpps[k].str());

        // Arbitrary submodules: closures of one to three sparse random vectors.
        std::uniform_int_distribution<int> vertex(0, ambient->rank() - 1);
        std::uniform_int_distribution<int> entry(-2, 2);
        std::uniform_int_distribution<int> count(1, 3);
        std::bernoulli_distribution sparse(0.3);
        for (std::size_t k = 0; k < per_job_random; ++k) {
            std::vector<std::pair<int, Vector>> generators;
            const int g = count(rng);
            for (int t = 0; t < g; ++t) {
                int i = vertex(rng);
                while (ambient->dim(i) == 0) i = vertex(rng);
                Vector v(ambient->dim(i));
                for (auto& x : v)
                    if (sparse(rng)) x = entry(rng);
                v[std::uniform_int_distribution<int>(0, ambient->dim(i) - 1)(rng)] = 1;
                generators.emplace_back(i, std::move(v));
            }
            tally.add(Submodule::generated_by(ambient, generators), prefix + " random submodule " + std::to_string(k));
        }
        if (job.type == "E6") e6_instances[j] = tally.instances;
    });

    ConditionTally total;
    total.add(submodule_from_json(std::string(three_copies_json)), "three-copy fixture");
    total.add(submodule_from_json(std::string(two_copies_json)), "two-copy fixture");
    for (const auto& t : tallies) {
        total.instances += t.instances;
        total.with_c1 += t.with_c1;
        total.without_c1 += t.without_c1;
        if (total.violation.empty()) total.violation = t.violation;
    }
    const std::size_t e6 = std::accumulate(e6_instances.begin(), e6_instances.end(), std::size_t{0});
    const std::size_t minimum = full(options) ? 5000 : 200;
    out.require(total.violation.empty(), [&] { return total.violation; });
    out.require(total.instances >= minimum, [&] {
        return "only " + std::to_string(total.instances) + " instances, " + std::to_string(minimum) + " required";
    });
    out.require(e6 > 0, [] { return std::string("no E6 instances"); });
    out.detail << total.instances << " modules (" << e6 << " over " << e6_words << " E6 heaps), " << total.with_c1
               << " satisfy C1, " << total.without_c1 << " fail C1; the two-copy fixture fails both";
}

// ------------------------------------------------------------------ 8

void springer(const SuiteOptions& options, Outcome& out) {
    const int seeds = full(options) ? 50 : 5;
    for (int n = 1; n <= 2; ++n) {
        const SpringerReport r = springer_compare(4, 2, n, seeds, derive_seed(options.seed, 8000 + n));
        const std::size_t expected = n == 1 ? 6 : static_cast<std::size_t>(20 * seeds);
        out.require(r.comparisons == expected,
                    [&] { return "n=" + std::to_string(n) + ": " + std::to_string(r.comparisons) + " comparisons"; });
        out.require(r.flags_stable, [&] { return "n=" + std::to_string(n) + ": " + r.witness; });
        out.require(r.crystal_matches == r.comparisons && r.direct_matches == r.comparisons, [&] {
            return "n=" + std::to_string(n) + ": " + std::to_string(r.crystal_matches) + "/" +
                   std::to_string(r.comparisons) + " twisted matches, first difference " + r.witness;
        });
        out.detail << "n=" << n << ": " << r.crystal_matches << "/" << r.comparisons
                   << " equal to the twist of the crystal-isomorphic tableau (" << r.direct_matches
                   << " equal to the GT bijection image, " << r.twisted_matches
                   << " equal to the twist of the GT bijection image); ";
    }
}

// ------------------------------------------------------------------ 9

void toggles_and_cactus(const SuiteOptions& options, Outcome& out) {
    const int max_n = full(options) ? 2 : 1;
    const std::vector<Case> cases{
        {"A3", Weight({0, 1, 0})},
        {"A4", Weight({0, 1, 0, 0})},
        {"D4", Weight({1, 0, 0, 0})},
        {"D5", Weight({0, 0, 0, 0, 1})},
    };
    std::size_t checks = 0;
    for (const auto& c : cases) {
        const WeylGroup weyl(DynkinDiagram::from_spec(c.type));
        for (int n = 1; n <= max_n; ++n) {
            const RppCrystal crystal(weyl, c.lambda, n);
            const ToggleReport r = check_toggles(crystal);
            checks += r.checks;
            out.require(r.ok(), [&] { return std::string(c.type) + " n=" + std::to_string(n) + ": " + r.violation; });
        }
    }
    const WeylGroup d4(DynkinDiagram::from_spec("D4"));
    for (int n = 1; n <= 2; ++n) {
        const RppCrystal crystal(d4, Weight({1, 0, 0, 0}), n);
        const IdentityResult id = check_identity(crystal, "t4 t2 t4 t2 t4 = s2");
        out.require(id.equal, [&] { return "D4 n=" + std::to_string(n) + ": t4 t2 t4 t2 t4 != s2 at " + id.witness; });
    }
    const WeylGroup a3(DynkinDiagram::from_spec("A3"));
    const CactusReport cactus = check_cactus_relations(RppCrystal(a3, Weight({0, 1, 0}), 1));
    out.require(cactus.ok(), [&] { return "A3 cactus: " + cactus.violation; });
    out.detail << checks << " toggle checks; D4 t4 t2 t4 t2 t4 = s2 for n <= 2; " << cactus.relations
               << " cactus relations on B(omega_2) in A3";
}

// ------------------------------------------------------------------ 10

void sl3_counterexample(const SuiteOptions&, Outcome& out) {
    const WeylGroup weyl(DynkinDiagram::from_spec("A2"));
    const IdealCrystal b1 = IdealCrystal::of_word(weyl, Word::parse("2,1"));
    const IdealCrystal b2 = IdealCrystal::of_word(weyl, Word::parse("1,2"));
    const Word w = Word::parse("1,2");
    const TensorCrystal both({b1, b2});
    const std::size_t demazure = generate_demazure(both, w).size();
    std::set<std::pair<std::uint64_t, std::uint64_t>> component;
    for (const auto& b : lowering_closure(both, both.highest())) component.emplace(b[0].bits(), b[1].bits());
    std::size_t intersection = 0;
    for (const auto& x : generate_demazure(TensorCrystal({b1}), w))
        for (const auto& y : generate_demazure(TensorCrystal({b2}), w))
            intersection += component.count({x[0].bits(), y[0].bits()});
    out.require(demazure == 5 && intersection == 6, [&] {
        return "|B_w(l+m)| = " + std::to_string(demazure) + ", intersection " + std::to_string(intersection);
    });
    out.detail << "|B_w(omega_1+omega_2)| = " << demazure << ", |B(omega_1+omega_2) ∩ B_w(omega_1)⊗B_w(omega_2)| = "
               << intersection;
}

using Runner = void (*)(const SuiteOptions&, Outcome&);

struct Entry {
    CriterionInfo info;
    Runner run;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries{
        {{1, "minuscule criteria agree"}, stembridge_agreement},
        {{2, "crystal, RPP and Weyl dimension counts agree"}, counting_oracle},
        {{3, "Demazure crystal equals increasing chains"}, gravsort},
        {{4, "preprojective relation holds"}, preprojective_relation},
        {{5, "Jordan-type map recovers every RPP"}, main_theorem},
        {{6, "filtration fixtures"}, filtration_fixtures},
        {{7, "C1 implies C2"}, condition_implication},
        {{8, "Springer flag tableaux"}, springer},
        {{9, "toggles and cactus relations"}, toggles_and_cactus},
        {{10, "sl3 Demazure tensor counterexample"}, sl3_counterexample},
    };
    return entries;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
    static const std::vector<CriterionInfo> infos = [] {
        std::vector<CriterionInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

CriterionReport run_criterion(int id, const SuiteOptions& options) {
    const auto& entries = registry();
    const auto it = std::find_if(entries.begin(), entries.end(), [id](const Entry& e) { return e.info.id == id; });
    if (it == entries.end()) throw Error("unknown criterion " + std::to_string(id));
    CriterionReport report;
    report.id = id;
    report.title = std::string(it->info.title);
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        it->run(options, out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.passed = out.passed;
    report.witness = out.witness;
    report.detail = out.detail.str();
    while (!report.detail.empty() && (report.detail.back() == ' ' || report.detail.back() == ';'))
        report.detail.pop_back();
    return report;
}

std::vector<CriterionReport> run_suite(const SuiteOptions& options) {
    std::vector<CriterionReport> reports;
    for (const auto& info : criteria()) reports.push_back(run_criterion(info.id, options));
    return reports;
}

std::string suite_to_json(const std::vector<CriterionReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json entry{
            {"criterion_id", r.id},
            {"status", r.passed ? "PASS" : "FAIL"},
            {"runtime_ms", r.runtime_ms},
            {"title", r.title},
            {"detail", r.detail},
        };
        if (!r.witness.empty()) entry["witness"] = r.witness;
        out.push_back(std::move(entry));
    }
    return out.dump(2);
}

std::string_view module_fixture(std::string_view name) {
    if (name == "three_copies") return three_copies_json;
    if (name == "two_copies") return two_copies_json;
    throw Error("unknown module fixture '" + std::string(name) + "'");
}

}  // namespace heapcrys
