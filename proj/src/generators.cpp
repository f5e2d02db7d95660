#include "vcx/generators.hpp"

#include <algorithm>
#include <random>

#include "vcx/compression.hpp"
#include "vcx/rounded_average.hpp"

namespace vcx {

Family family_from_string(const std::string& name) {
    if (name == "full_cube") return Family::full_cube;
    if (name == "singletons") return Family::singletons;
    if (name == "thresholds") return Family::thresholds;
    if (name == "intervals") return Family::intervals;
    if (name == "unions_of_t_intervals" || name == "unions") return Family::unions_of_t_intervals;
    if (name == "halfplanes_on_grid" || name == "halfplanes") return Family::halfplanes_on_grid;
    if (name == "order_relation" || name == "order") return Family::order_relation;
    if (name == "random_filtered" || name == "random") return Family::random_filtered;
    throw input_error("unknown family: " + name);
}

const char* to_string(Family f) {
    switch (f) {
        case Family::full_cube: return "full_cube";
        case Family::singletons: return "singletons";
        case Family::thresholds: return "thresholds";
        case Family::intervals: return "intervals";
        case Family::unions_of_t_intervals: return "unions_of_t_intervals";
        case Family::halfplanes_on_grid: return "halfplanes_on_grid";
        case Family::order_relation: return "order_relation";
        case Family::random_filtered: return "random_filtered";
    }
    return "unknown";
}

std::string GeneratorSpec::describe() const {
    std::string s = std::string(to_string(family)) + " m=" + std::to_string(m);
    if (family == Family::unions_of_t_intervals) s += " t=" + std::to_string(t);
    if (family == Family::random_filtered) {
        s += " count=" + std::to_string(count);
        if (vc_cap != UINT32_MAX) s += " vc_cap=" + std::to_string(vc_cap);
        s += " seed=" + std::to_string(seed);
    }
    return s;
}

namespace {

void check_concept_cap(std::size_t n) {
    if (n > caps::concepts) throw cap_exceeded("family exceeds the 4096 concept cap");
}

Bits interval_bits(std::uint32_t m, std::uint32_t lo, std::uint32_t hi) {
    Bits w(m);
    for (std::uint32_t p = lo; p <= hi; ++p) w.set(p);
    return w;
}

SetSystem gen_thresholds(std::uint32_t m) {
    std::vector<Bits> cs;
    cs.push_back(Bits(m)); // empty prefix
    for (std::uint32_t j = 0; j < m; ++j) cs.push_back(interval_bits(m, 0, j));
    return SetSystem(m, std::move(cs));
}

SetSystem gen_intervals(std::uint32_t m) {
    std::vector<Bits> cs;
    cs.push_back(Bits(m));
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i; j < m; ++j) cs.push_back(interval_bits(m, i, j));
    check_concept_cap(cs.size());
    return SetSystem(m, std::move(cs));
}

SetSystem gen_singletons(std::uint32_t m) {
    std::vector<Bits> cs;
    cs.push_back(Bits(m));
    for (std::uint32_t i = 0; i < m; ++i) {
        Bits w(m);
        w.set(i);
        cs.push_back(std::move(w));
    }
    return SetSystem(m, std::move(cs));
}

/// All subsets whose indicator string has at most t maximal runs of ones;
/// a set with exactly r runs corresponds to 2r cut positions among the m+1
/// gaps, so the family is enumerated by boundary combinations.
SetSystem gen_unions(std::uint32_t m, std::uint32_t t) {
    if (t == 0) throw input_error("unions need t >= 1");
    std::vector<Bits> cs;
    cs.push_back(Bits(m));
    std::vector<Point> gaps(m + 1);
    for (std::uint32_t i = 0; i <= m; ++i) gaps[i] = i;
    for (std::uint32_t r = 1; r <= t; ++r) {
        for_each_combination(gaps, m + 1, 2 * r, [&](const std::vector<Point>& cut, const Bits&) {
            Bits w(m);
            for (std::uint32_t run = 0; run < r; ++run)
                for (Point p = cut[2 * run]; p < cut[2 * run + 1]; ++p) w.set(p);
            cs.push_back(std::move(w));
            return false;
        });
    }
    check_concept_cap(cs.size());
    return SetSystem(m, std::move(cs));
}

SetSystem gen_halfplanes(std::uint32_t g) {
    if (g < 2) throw input_error("grid side must be at least 2");
    const std::uint32_t m = g * g;
    if (m > caps::ground) throw cap_exceeded("grid exceeds the 24 point cap");
    auto coord = [g](Point p) { return std::pair<int, int>(static_cast<int>(p % g), static_cast<int>(p / g)); };
    std::vector<Bits> cs;
    cs.push_back(Bits(m));
    cs.push_back(~Bits(m));
    for (Point i = 0; i < m; ++i) {
        for (Point j = 0; j < m; ++j) {
            if (i == j) continue;
            const auto [xi, yi] = coord(i);
            const auto [xj, yj] = coord(j);
            const int nx = -(yj - yi), ny = xj - xi;
            std::vector<int> vals;
            vals.reserve(m);
            for (Point p = 0; p < m; ++p) {
                const auto [x, y] = coord(p);
                vals.push_back(nx * x + ny * y);
            }
            std::vector<int> cuts = vals;
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
            for (int cut : cuts) {
                Bits w(m);
                for (Point p = 0; p < m; ++p)
                    if (vals[p] <= cut) w.set(p);
                cs.push_back(std::move(w));
            }
        }
    }
    SetSystem sys(m, std::move(cs));
    check_concept_cap(sys.size());
    return sys;
}

BipartiteRelation gen_order(std::uint32_t m) {
    BipartiteRelation r(m, m);
    for (Point a = 0; a < m; ++a)
        for (Point y = a; y < m; ++y) r.set(a, y, true);
    return r;
}

SetSystem gen_random_filtered(const GeneratorSpec& spec) {
    if (spec.count == 0) throw input_error("random family needs count >= 1");
    check_concept_cap(spec.count);
    std::mt19937_64 rng(spec.seed);
    std::vector<Bits> accepted;
    const std::uint64_t max_attempts = 512ULL * spec.count + 1024;
    for (std::uint64_t attempt = 0; attempt < max_attempts && accepted.size() < spec.count; ++attempt) {
        const std::uint64_t raw = rng();
        Bits w(spec.m);
        for (std::uint32_t j = 0; j < spec.m; ++j)
            if ((raw >> j) & 1) w.set(j);
        if (std::find(accepted.begin(), accepted.end(), w) != accepted.end()) continue;
        accepted.push_back(w);
        if (spec.vc_cap != UINT32_MAX) {
            SetSystem trial(spec.m, accepted);
            if (vc_dimension(trial) > spec.vc_cap) accepted.pop_back();
        }
    }
    if (accepted.empty()) throw input_error("random filter rejected every candidate");
    return SetSystem(spec.m, std::move(accepted));
}

} // namespace

Generated generate(const GeneratorSpec& spec) {
    if (spec.m == 0) throw input_error("family needs at least one point");
    if (spec.family != Family::halfplanes_on_grid && spec.m > caps::ground)
        throw cap_exceeded("ground set exceeds the 24 point cap");
    switch (spec.family) {
        case Family::full_cube: {
            if (spec.m > 12) throw cap_exceeded("full cube exceeds the 4096 concept cap");
            return shattering_hard_instance(spec.m);
        }
        case Family::singletons: return gen_singletons(spec.m);
        case Family::thresholds: return gen_thresholds(spec.m);
        case Family::intervals: return gen_intervals(spec.m);
        case Family::unions_of_t_intervals: return gen_unions(spec.m, spec.t);
        case Family::halfplanes_on_grid: return gen_halfplanes(spec.m);
        case Family::order_relation: return gen_order(spec.m);
        case Family::random_filtered: return gen_random_filtered(spec);
    }
    throw input_error("unknown family");
}

SetSystem generate_system(const GeneratorSpec& spec) {
    Generated g = generate(spec);
    if (auto* s = std::get_if<SetSystem>(&g)) return std::move(*s);
    throw input_error("family produces a relation, not a set system");
}

std::optional<std::uint32_t> documented_vc(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::full_cube: return spec.m;
        case Family::singletons: return 1;
        case Family::thresholds: return 1;
        case Family::intervals: return spec.m >= 2 ? std::optional<std::uint32_t>(2) : std::nullopt;
        case Family::unions_of_t_intervals: return std::min(2 * spec.t, spec.m);
        default: return std::nullopt;
    }
}

std::uint32_t oracle_min_td(const SetSystem& c, const Labeling& concept_labeling) {
    if (c.ground_size() > caps::oracle_ground) throw cap_exceeded("oracle limited to 16 points");
    if (!c.contains(concept_labeling)) throw input_error("concept is not in the class");
    const std::uint32_t m = c.ground_size();
    std::vector<Point> all(m);
    for (std::uint32_t i = 0; i < m; ++i) all[i] = i;
    for (std::uint32_t s = 0; s <= m; ++s) {
        const bool found = for_each_combination(all, m, s, [&](const std::vector<Point>& pts, const Bits&) {
            for (const Bits& w : c.concepts()) {
                if (w == concept_labeling.bits()) continue;
                bool agrees = true;
                for (Point p : pts)
                    if (w.test(p) != concept_labeling.sign(p)) {
                        agrees = false;
                        break;
                    }
                if (agrees) return false; // another concept matches on pts
            }
            return true;
        });
        if (found) return s;
    }
    return m; // unreachable: the full set always teaches
}

nlohmann::json kc_table(std::uint32_t up_to) {
    nlohmann::json t = nlohmann::json::object();
    for (std::uint32_t d = 0; d <= up_to; ++d) t[std::to_string(d)] = kc_bound(d);
    return t;
}

namespace {

nlohmann::json caps_json() {
    return {{"ground", caps::ground},
            {"concepts", caps::concepts},
            {"hype_ground", caps::hype_ground},
            {"oracle_ground", caps::oracle_ground},
            {"transversal_ground", caps::transversal_ground}};
}

std::vector<GeneratorSpec> bounds_suite(std::uint64_t seed) {
    std::vector<GeneratorSpec> specs;
    for (std::uint32_t m : {4u, 6u, 8u, 10u}) specs.push_back({Family::thresholds, m});
    for (std::uint32_t m : {4u, 5u, 6u, 8u}) specs.push_back({Family::intervals, m});
    specs.push_back({Family::singletons, 5});
    specs.push_back({Family::full_cube, 3});
    for (std::uint32_t i = 0; i < 10; ++i) {
        GeneratorSpec s;
        s.family = Family::random_filtered;
        s.m = 4 + (i % 5);
        s.count = 6 + i;
        s.vc_cap = 2;
        s.seed = seed + i;
        specs.push_back(s);
    }
    return specs;
}

nlohmann::json bounds_report(std::uint64_t seed) {
    nlohmann::json results = nlohmann::json::array();
    for (const GeneratorSpec& spec : bounds_suite(seed)) {
        const SetSystem sys = generate_system(spec);
        const std::uint32_t vc = vc_dimension(sys);
        const std::uint64_t bound = kc_bound(vc);
        const TeachingCertificate cert = find_kc_compressible(sys);
        std::uint32_t min_td = cert.size();
        for (std::size_t i = 0; i < sys.size() && min_td > 0; ++i)
            min_td = std::min(min_td, oracle_min_td(sys, sys.concept_at(i)));
        results.push_back({{"family", spec.describe()},
                           {"m", sys.ground_size()},
                           {"concepts", sys.size()},
                           {"vc", vc},
                           {"min_td", min_td},
                           {"kc_bound", bound},
                           {"certificate_size", cert.size()},
                           {"pass", cert.size() <= bound && min_td <= bound}});
    }
    return results;
}

nlohmann::json decomposition_report() {
    nlohmann::json results = nlohmann::json::array();
    std::vector<GeneratorSpec> specs;
    for (std::uint32_t m : {3u, 4u, 5u, 6u}) specs.push_back({Family::thresholds, m});
    for (std::uint32_t m : {4u, 5u, 6u}) specs.push_back({Family::intervals, m});
    for (const GeneratorSpec& spec : specs) {
        const SetSystem sys = generate_system(spec);
        const std::uint32_t vc = vc_dimension(sys);
        const std::uint32_t k = static_cast<std::uint32_t>(kc_bound(vc));
        for (std::size_t i = 0; i < sys.size(); ++i) {
            const Labeling target = sys.concept_at(i);
            auto dec = decompose(sys, target, Rational::half(), 5, k);
            nlohmann::json row = {{"family", spec.describe()},
                                  {"target", target.to_string()},
                                  {"alpha", "1/2"},
                                  {"k", k}};
            if (dec) {
                row["status"] = "ok";
                row["n"] = dec->components.size();
            } else {
                row["status"] = "exhausted";
                row["n_max"] = 5;
            }
            results.push_back(std::move(row));
        }
    }
    return results;
}

nlohmann::json udtfs_suite_report() {
    nlohmann::json results = nlohmann::json::array();
    for (std::uint32_t m = 3; m <= 8; ++m) {
        const BipartiteRelation rel = std::get<BipartiteRelation>(generate({Family::order_relation, m}));
        std::vector<Point> a(m);
        for (std::uint32_t i = 0; i < m; ++i) a[i] = i;
        const UdtfsReport rep = udtfs_report(rel, a, Rational::half(), 5, 2);
        std::uint32_t max_k = 0;
        bool all_exact = rep.failures == 0;
        for (const UdtfsEntry& e : rep.entries) {
            max_k = std::max(max_k, e.k_used);
            if (e.params && !e.exact) all_exact = false;
        }
        results.push_back({{"m", m},
                           {"successes", rep.successes},
                           {"failures", rep.failures},
                           {"max_k_used", max_k},
                           {"exact", all_exact}});
    }
    return results;
}

nlohmann::json hype_suite_report(std::uint64_t seed) {
    nlohmann::json results = nlohmann::json::array();
    for (std::uint32_t i = 0; i < 20; ++i) {
        GeneratorSpec spec;
        spec.family = Family::random_filtered;
        spec.m = 3 + (i % 3);
        spec.count = 4 + (i % 9);
        spec.seed = seed + 1000 + i;
        const SetSystem sys = generate_system(spec);
        const std::uint32_t vc = vc_dimension(sys);
        for (std::uint32_t k = vc + 1; k <= sys.ground_size(); ++k) {
            const SetSystem fam = hype_family(sys, k);
            const std::uint32_t hvc = vc_dimension(fam);
            results.push_back({{"instance", i},
                               {"m", sys.ground_size()},
                               {"concepts", sys.size()},
                               {"vc", vc},
                               {"k", k},
                               {"hypes", fam.size()},
                               {"hype_vc", hvc},
                               {"pass", hvc <= vc}});
        }
    }
    return results;
}

} // namespace

nlohmann::json run_report(const std::string& suite, std::uint64_t seed) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["suite"] = suite;
    doc["metadata"] = {{"seed", seed}, {"caps", caps_json()}, {"kc_table", kc_table()}};
    if (suite == "bounds") {
        doc["results"] = bounds_report(seed);
    } else if (suite == "decomposition") {
        doc["results"] = decomposition_report();
    } else if (suite == "udtfs") {
        doc["results"] = udtfs_suite_report();
    } else if (suite == "hype") {
        doc["results"] = hype_suite_report(seed);
    } else {
        throw input_error("unknown suite: " + suite);
    }
    return doc;
}

} // namespace vcx
