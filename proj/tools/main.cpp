// vc-compress: command line front end for the set-system compression toolkit.
//
// Exit codes: 0 success, 2 input error, 3 cap exceeded, 4 exhausted search
// under --strict.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcx/compression.hpp"
#include "vcx/formula.hpp"
#include "vcx/generators.hpp"
#include "vcx/hypes.hpp"
#include "vcx/rounded_average.hpp"
#include "vcx/set_system.hpp"

using nlohmann::json;
using namespace vcx;

namespace {

struct Options {
    bool json_out = false;
    bool strict = false;
    std::uint64_t seed = 0;
    std::string out;
    bool exhausted = false;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty() || opt.out == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw input_error("cannot open " + opt.out + " for writing");
    f << text;
}

SetSystem load_system(const std::string& path) {
    if (path == "-") return read_ssys(std::cin);
    return read_ssys_file(path);
}

BipartiteRelation load_relation(const std::string& path) {
    if (path == "-") return read_brel(std::cin);
    return read_brel_file(path);
}

json points_json(const std::vector<Point>& pts) {
    json a = json::array();
    for (Point p : pts) a.push_back(p);
    return a;
}

json certificate_json(const TeachingCertificate& cert, std::uint64_t bound, std::uint32_t vc) {
    return {{"concept", cert.concept_labeling.to_string()},
            {"witness", points_json(cert.witness)},
            {"size", cert.size()},
            {"bound", bound},
            {"vc", vc}};
}

std::string human_certificate(const char* head, const TeachingCertificate& cert, std::uint64_t bound,
                              std::uint32_t vc) {
    std::ostringstream os;
    os << head << ": concept " << cert.concept_labeling.to_string() << "  witness {";
    for (std::size_t i = 0; i < cert.witness.size(); ++i) os << (i ? "," : "") << cert.witness[i];
    os << "}  size " << cert.size() << "  bound " << bound << "  vc " << vc << '\n';
    return os.str();
}

json decomposition_json(const std::optional<Decomposition>& dec, const Labeling& target, Rational alpha,
                        std::uint32_t n_max, std::uint32_t k) {
    json doc = {{"target", target.to_string()}, {"alpha", alpha.to_string()}, {"k", k}};
    if (dec) {
        doc["status"] = "ok";
        doc["n"] = dec->components.size();
        json comps = json::array(), wits = json::array();
        for (const TeachingCertificate& c : dec->components) {
            comps.push_back(c.concept_labeling.to_string());
            wits.push_back(points_json(c.witness));
        }
        doc["components"] = comps;
        doc["witnesses"] = wits;
    } else {
        doc["status"] = "exhausted";
        doc["n_max"] = n_max;
    }
    return doc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vc-compress: VC dimension, teaching sets, rounded averages and honest definitions "
                 "over finite set systems"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json_out, "machine readable output");
    app.add_flag("--strict", opt.strict, "exit 4 when a bounded search comes back exhausted");
    app.add_option("--seed", opt.seed, "seed for random families");
    app.add_option("--out", opt.out, "output file (default stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named family");
    std::string family = "thresholds";
    GeneratorSpec spec;
    gen->add_option("--family", family, "family name")->required();
    gen->add_option("-m,--m", spec.m, "points (grid side for halfplanes)");
    gen->add_option("-t,--t", spec.t, "intervals per union");
    gen->add_option("--count", spec.count, "concepts for random_filtered");
    gen->add_option("--vc-cap", spec.vc_cap, "vc filter for random_filtered");

    // single .ssys input commands
    std::string in_path = "-";
    std::string concept_arg, partial_arg, target_arg, gamma_arg, alpha_arg = "1/2";
    std::uint32_t arg_l = 0, arg_nmax = 5, arg_k = 0, arg_p = 0, arg_q = 0;

    auto* vc_cmd = app.add_subcommand("vc", "vc dimension of a .ssys class");
    vc_cmd->add_option("input", in_path, ".ssys file or -");

    auto* dual_cmd = app.add_subcommand("dual", "dual system of a .ssys class");
    dual_cmd->add_option("input", in_path, ".ssys file or -");

    auto* teach = app.add_subcommand("teach", "minimal teaching set of a concept");
    teach->add_option("input", in_path, ".ssys file or -");
    teach->add_option("--concept", concept_arg, "concept bit string")->required();

    auto* rtd = app.add_subcommand("rtd", "recursive teaching sequence");
    rtd->add_option("input", in_path, ".ssys file or -");

    auto* compress = app.add_subcommand("compress", "find a kc(vc)-compressible concept");
    compress->add_option("input", in_path, ".ssys file or -");

    auto* extend = app.add_subcommand("extend", "extend a partial labeling to a compressible concept");
    extend->add_option("input", in_path, ".ssys file or -");
    extend->add_option("--partial", partial_arg, "labeling over {0,1,*}")->required();
    extend->add_option("--l", arg_l, "teaching budget of the condition")->required();

    auto* dec_cmd = app.add_subcommand("decompose", "rounded-average decomposition of a target concept");
    dec_cmd->add_option("input", in_path, ".ssys file or -");
    dec_cmd->add_option("--target", target_arg, "target bit string")->required();
    dec_cmd->add_option("--alpha", alpha_arg, "threshold p/q in [1/2,1)");
    dec_cmd->add_option("--nmax", arg_nmax, "largest multiset size");
    dec_cmd->add_option("--k", arg_k, "teaching bound for components")->required();

    auto* pq_cmd = app.add_subcommand("pq", "(p,q) property and minimum transversal");
    pq_cmd->add_option("input", in_path, ".ssys file or -");
    pq_cmd->add_option("--p", arg_p, "p")->required();
    pq_cmd->add_option("--q", arg_q, "q")->required();

    auto* hype = app.add_subcommand("hype", "k-hype operations");
    std::string hype_verb;
    hype->add_option("verb", hype_verb, "check | family | decompose | cover")->required();
    hype->add_option("input", in_path, ".ssys file or -");
    hype->add_option("--gamma", gamma_arg, "candidate hype bit string");
    hype->add_option("--k", arg_k, "consistency parameter")->required();
    hype->add_option("--alpha", alpha_arg, "threshold p/q in [1/2,1)");
    hype->add_option("--nmax", arg_nmax, "largest multiset size");

    auto* udtfs = app.add_subcommand("udtfs", "uniform definitions for every column of a .brel relation");
    std::string a_arg;
    udtfs->add_option("input", in_path, ".brel file or -");
    udtfs->add_option("--A", a_arg, "comma separated row indices (default: all)");
    udtfs->add_option("--alpha", alpha_arg, "threshold p/q in [1/2,1)");
    udtfs->add_option("--nmax", arg_nmax, "largest multiset size");
    udtfs->add_option("--k", arg_k, "teaching bound / literals per guard")->required();

    auto* report = app.add_subcommand("report", "run a named suite and emit JSON");
    std::string suite;
    report->add_option("--suite", suite, "bounds | decomposition | udtfs | hype")->required();

    for (CLI::App* sc : app.get_subcommands({})) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            spec.family = family_from_string(family);
            spec.seed = opt.seed;
            Generated g = generate(spec);
            if (const SetSystem* s = std::get_if<SetSystem>(&g)) {
                emit(opt, to_ssys(*s, {spec.describe()}));
            } else {
                emit(opt, to_brel(std::get<BipartiteRelation>(g), {spec.describe()}));
            }
        } else if (vc_cmd->parsed()) {
            const SetSystem c = load_system(in_path);
            const std::uint32_t vc = vc_dimension(c);
            const std::uint32_t dual_vc = vc_dimension(dual_system(c));
            if (opt.json_out) {
                emit(opt, json{{"m", c.ground_size()},
                               {"concepts", c.size()},
                               {"vc", vc},
                               {"dual_vc", dual_vc},
                               {"kc_bound", kc_bound(vc)}}
                              .dump(2));
            } else {
                std::ostringstream os;
                os << "m " << c.ground_size() << "  concepts " << c.size() << "  vc " << vc << "  vc* "
                   << dual_vc << "  kc(vc) " << kc_bound(vc) << '\n';
                emit(opt, os.str());
            }
        } else if (dual_cmd->parsed()) {
            emit(opt, to_ssys(dual_system(load_system(in_path))));
        } else if (teach->parsed()) {
            const SetSystem c = load_system(in_path);
            const std::uint32_t vc = vc_dimension(c);
            auto [td, cert] = teaching_dimension(c, Labeling::from_string(concept_arg));
            (void)td;
            if (opt.json_out) {
                emit(opt, certificate_json(cert, kc_bound(vc), vc).dump(2));
            } else {
                emit(opt, human_certificate("teach", cert, kc_bound(vc), vc));
            }
        } else if (rtd->parsed()) {
            const SetSystem c = load_system(in_path);
            const std::uint32_t vc = vc_dimension(c);
            auto seq = rtd_sequence(c);
            std::uint32_t worst = 0;
            for (const auto& [l, td] : seq) worst = std::max(worst, td);
            if (opt.json_out) {
                json rows = json::array();
                for (const auto& [l, td] : seq) rows.push_back({{"concept", l.to_string()}, {"td", td}});
                emit(opt, json{{"vc", vc}, {"bound", kc_bound(vc)}, {"rtd", worst}, {"stages", rows}}.dump(2));
            } else {
                std::ostringstream os;
                for (const auto& [l, td] : seq) os << l.to_string() << "  td " << td << '\n';
                os << "rtd " << worst << "  bound kc(" << vc << ") = " << kc_bound(vc) << '\n';
                emit(opt, os.str());
            }
        } else if (compress->parsed()) {
            const SetSystem c = load_system(in_path);
            const std::uint32_t vc = vc_dimension(c);
            const TeachingCertificate cert = find_kc_compressible(c);
            if (opt.json_out) {
                emit(opt, certificate_json(cert, kc_bound(vc), vc).dump(2));
            } else {
                emit(opt, human_certificate("compress", cert, kc_bound(vc), vc));
            }
        } else if (extend->parsed()) {
            const SetSystem c = load_system(in_path);
            const std::uint32_t vc = vc_dimension(c);
            const TeachingCertificate cert =
                extend_compressible(c, PartialLabeling::from_string(partial_arg), arg_l);
            const std::uint64_t bound = arg_l + kc_bound(vc);
            if (opt.json_out) {
                emit(opt, certificate_json(cert, bound, vc).dump(2));
            } else {
                emit(opt, human_certificate("extend", cert, bound, vc));
            }
        } else if (dec_cmd->parsed()) {
            const SetSystem c = load_system(in_path);
            const Rational alpha = Rational::parse(alpha_arg);
            const Labeling target = Labeling::from_string(target_arg);
            auto dec = decompose(c, target, alpha, arg_nmax, arg_k);
            opt.exhausted = !dec.has_value();
            json doc = decomposition_json(dec, target, alpha, arg_nmax, arg_k);
            if (opt.json_out) {
                emit(opt, doc.dump(2));
            } else {
                std::ostringstream os;
                os << "status " << doc["status"].get<std::string>();
                if (dec) {
                    os << "  n " << dec->components.size() << "  components";
                    for (const auto& comp : dec->components) os << ' ' << comp.concept_labeling.to_string();
                }
                os << '\n';
                emit(opt, os.str());
            }
        } else if (pq_cmd->parsed()) {
            const SetSystem c = load_system(in_path);
            const TransversalReport rep = transversal_report(c, arg_p, arg_q);
            if (opt.json_out) {
                emit(opt, json{{"p", rep.p},
                               {"q", rep.q},
                               {"has_pq", rep.has_pq},
                               {"min_transversal", points_json(rep.min_transversal)},
                               {"transversal_size", rep.min_transversal.size()}}
                              .dump(2));
            } else {
                std::ostringstream os;
                os << "(p,q) " << (rep.has_pq ? "holds" : "fails") << "  min transversal size "
                   << rep.min_transversal.size() << '\n';
                emit(opt, os.str());
            }
        } else if (hype->parsed()) {
            const SetSystem c = load_system(in_path);
            if (hype_verb == "family") {
                emit(opt, to_ssys(hype_family(c, arg_k)));
            } else {
                if (gamma_arg.empty()) throw input_error("--gamma is required for this verb");
                const Labeling gamma = Labeling::from_string(gamma_arg);
                if (hype_verb == "check") {
                    const bool ok = is_k_hype(c, gamma, arg_k);
                    if (opt.json_out) {
                        emit(opt, json{{"gamma", gamma.to_string()}, {"k", arg_k}, {"is_hype", ok}}.dump(2));
                    } else {
                        emit(opt, std::string(ok ? "k-hype\n" : "not a k-hype\n"));
                    }
                } else if (hype_verb == "decompose") {
                    const Rational alpha = Rational::parse(alpha_arg);
                    const Hype h = make_hype(c, gamma, arg_k);
                    auto dec = hype_decompose(c, h, alpha, arg_nmax, arg_k);
                    opt.exhausted = !dec.has_value();
                    emit(opt, decomposition_json(dec, gamma, alpha, arg_nmax, arg_k).dump(2));
                } else if (hype_verb == "cover") {
                    auto cover = hype_cover(c, make_hype(c, gamma, arg_k), arg_k);
                    json rows = json::array();
                    for (const Labeling& l : cover) rows.push_back(l.to_string());
                    emit(opt, json{{"gamma", gamma.to_string()},
                                   {"k", arg_k},
                                   {"cover", rows},
                                   {"size", cover.size()}}
                                  .dump(2));
                } else {
                    throw input_error("unknown hype verb: " + hype_verb);
                }
            }
        } else if (udtfs->parsed()) {
            const BipartiteRelation rel = load_relation(in_path);
            std::vector<Point> a;
            if (a_arg.empty()) {
                for (Point i = 0; i < rel.x_size(); ++i) a.push_back(i);
            } else {
                std::istringstream as(a_arg);
                std::string tok;
                while (std::getline(as, tok, ',')) a.push_back(static_cast<Point>(std::stoul(tok)));
            }
            const Rational alpha = Rational::parse(alpha_arg);
            const UdtfsReport rep = udtfs_report(rel, a, alpha, arg_nmax, arg_k);
            opt.exhausted = rep.failures > 0;
            json rows = json::array();
            for (const UdtfsEntry& e : rep.entries) {
                json row = {{"b", e.b}};
                if (e.params) {
                    row["status"] = "ok";
                    row["n"] = e.n_used;
                    row["k_used"] = e.k_used;
                    row["exact"] = e.exact;
                } else {
                    row["status"] = "exhausted";
                }
                rows.push_back(std::move(row));
            }
            emit(opt,
                 json{{"successes", rep.successes}, {"failures", rep.failures}, {"columns", rows}}.dump(2));
        } else if (report->parsed()) {
            emit(opt, run_report(suite, opt.seed).dump(2));
        }
    } catch (const cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    if (opt.strict && opt.exhausted) return 4;
    return 0;
}
