#include <disckit/disckit.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>

using namespace disckit;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kPartial = 2;

void emit(const Json& j, const std::string& out) {
    if (out.empty() || out == "-") std::cout << j.dump(2) << '\n';
    else io::write_file(out, j);
}

Rational parse_eps(const std::string& text) {
    auto eps = parse_rational(text);
    if (eps <= 0 || eps >= 1) throw Error("--eps must lie strictly between 0 and 1");
    return eps;
}

void check_dk(std::uint32_t d, std::uint32_t k) {
    if (d < 2) throw Error("--d must be at least 2");
    if (k < 1) throw Error("--k must be at least 1");
}

Model parse_model(const std::string& name) {
    if (name == "simple") return Model::Simple;
    if (name == "sgraph") return Model::SGraph;
    throw Error("unknown model " + name + " (simple|sgraph)");
}

FreqVector freq_of_file(const std::string& path, std::uint32_t k) {
    auto j = io::read_file(path);
    if (j.is_object() && j.contains("freq")) return io::freq_from_json(j.at("freq"));
    return freq(io::graph_from_json(j), k);
}

struct PhiFile {
    std::set<Fingerprint> phi;
    SymbolTable symbols;
    std::uint32_t radius = 0;
};

PhiFile read_phi(const std::string& path) {
    auto records = io::disc_set_from_json(io::read_file(path));
    if (records.empty()) throw Error("disc set is empty");
    PhiFile f;
    f.symbols = records.front().graph.symbols();
    f.radius = records.front().radius;
    for (const auto& r : records) {
        if (*r.graph.symbols() != *f.symbols) throw Error("discs use different symbol sets");
        if (r.radius != f.radius) throw Error("discs have different radii");
        f.phi.insert(fingerprint(r.graph, Vertex{0}));
    }
    if (f.radius < 1) throw Error("discs need a radius of at least 1");
    return f;
}

Json rewiring_json(const RewiringReport& r) {
    return Json{{"identity", r.identity},
                {"phi", to_string(r.phi)},
                {"classes", r.classes},
                {"v1", r.v1},
                {"v2", r.v2},
                {"cut_before", r.cut_before},
                {"cut_after", r.cut_after},
                {"rewires", r.rewires},
                {"alpha", to_string(r.alpha)},
                {"v1_in_range", r.v1_in_range},
                {"alpha_within", r.alpha_within},
                {"cut_bound", to_string(r.cut_bound)},
                {"cut_bound_holds", r.cut_bound_holds}};
}

Json pipeline_json(const PipelineReport& r) {
    return Json{{"k", r.k},
                {"eps", to_string(r.eps)},
                {"l_mode", to_string(r.l_mode)},
                {"L", r.L.str()},
                {"observed_classes", r.observed_classes},
                {"size_bound", to_string(r.size_bound)},
                {"early_return", r.early_return},
                {"retried_naive", r.retried_naive},
                {"searched", r.searched},
                {"trials", r.trials},
                {"sizes",
                 {{"input", r.input_size},
                  {"cycle", r.cycle_size},
                  {"rewired", r.rewired_size},
                  {"leftover", r.leftover_size},
                  {"output", r.output_size}}},
                {"output_cycles", r.output_cycles},
                {"blowup", r.blowup.str()},
                {"rewiring", rewiring_json(r.rewiring)},
                {"leftover",
                 {{"dropped_paths", r.leftover.dropped_paths},
                  {"merged_paths", r.leftover.merged_paths},
                  {"path_vertices", r.leftover.path_vertices}}},
                {"distances",
                 {{"close", to_string(r.dist_close)},
                  {"rewire", to_string(r.dist_rewire)},
                  {"leftover", to_string(r.dist_leftover)},
                  {"blowup", to_string(r.dist_blowup)}}},
                {"distance", to_string(r.distance)},
                {"within_eps", r.within_eps},
                {"within_size_bound", r.within_size_bound}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"disc-kit: k-disc frequency vectors, the cluster transformation and S-path approximation.\n"
                 "Fractions are printed as \"num/den\" strings. Exit status: 0 ok, 1 error, 2 budget-partial.\n"
                 "DISC_KIT_BUDGET_MS caps every enumeration (milliseconds)."};
    app.require_subcommand(1);
    std::function<int()> action;

    std::uint32_t d = 2, k = 1, symbols = 1, nmax = 0;
    std::string in, out, eps_text;

    auto* c_freq = app.add_subcommand("freq", "k-disc frequency vector of a graph");
    c_freq->add_option("--k", k, "disc radius")->required();
    c_freq->add_option("--in", in, "graph JSON file")->required();
    c_freq->add_option("--out", out, "output file (default stdout)");
    c_freq->callback([&] {
        action = [&] {
            auto g = io::graph_from_json(io::read_file(in));
            emit(Json{{"k", k}, {"n", g.size()}, {"freq", io::vector_to_json(freq(g, k))}}, out);
            return kOk;
        };
    });

    std::string file_a, file_b;
    auto* c_dist = app.add_subcommand("dist", "exact L1 distance between two frequency vectors");
    c_dist->add_option("--k", k, "disc radius")->required();
    c_dist->add_option("a", file_a, "graph JSON or freq output file")->required();
    c_dist->add_option("b", file_b, "graph JSON or freq output file")->required();
    c_dist->add_option("--out", out, "output file (default stdout)");
    c_dist->callback([&] {
        action = [&] {
            emit(Json{{"k", k}, {"distance", to_string(l1_dist(freq_of_file(file_a, k), freq_of_file(file_b, k)))}}, out);
            return kOk;
        };
    });

    auto* c_encode = app.add_subcommand("encode", "cluster transformation of an S-graph into a simple graph");
    c_encode->add_option("--d", d, "degree bound of the input");
    c_encode->add_option("--k", k, "disc radius on the S-graph side");
    c_encode->add_option("--in", in, "S-graph JSON file")->required();
    c_encode->add_option("--out", out, "output file (default stdout)");
    c_encode->callback([&] {
        action = [&] {
            check_dk(d, k);
            auto g = io::graph_from_json(io::read_file(in));
            auto p = TransformParams::make(d, k, static_cast<std::uint32_t>(g.symbols()->size()));
            auto j = io::graph_to_json(encode(g, p).graph);
            j["t"] = p.t;
            j["q"] = p.q;
            j["cluster_size"] = p.cluster_size();
            emit(j, out);
            return kOk;
        };
    });

    auto* c_decode = app.add_subcommand("decode-disc", "reconstruct a k-disc from the q-disc of a cluster center");
    c_decode->add_option("--d", d, "degree bound of the S-graph side");
    c_decode->add_option("--k", k, "disc radius on the S-graph side");
    c_decode->add_option("--symbols", symbols, "size of the information set");
    c_decode->add_option("--in", in, "rooted q-disc JSON file")->required();
    c_decode->add_option("--out", out, "output file (default stdout)");
    c_decode->callback([&] {
        action = [&] {
            check_dk(d, k);
            auto p = TransformParams::make(d, k, symbols);
            auto rec = io::disc_from_json(io::read_file(in));
            auto back = reconstruct_disc(rec.graph, p);
            if (!back) throw Error("input is not the q-disc of a cluster center");
            emit(io::disc_to_json(*back, k), out);
            return kOk;
        };
    });

    auto* c_psi = app.add_subcommand("psi", "projection subgraph of a simple graph and its pre-image");
    c_psi->add_option("--d", d, "degree bound of the S-graph side");
    c_psi->add_option("--k", k, "disc radius on the S-graph side");
    c_psi->add_option("--symbols", symbols, "size of the information set");
    c_psi->add_option("--in", in, "simple graph JSON file")->required();
    c_psi->add_option("--out", out, "output file (default stdout)");
    c_psi->callback([&] {
        action = [&] {
            check_dk(d, k);
            auto p = TransformParams::make(d, k, symbols);
            auto r = psi(io::graph_from_json(io::read_file(in)), p);
            emit(Json{{"graph", io::graph_to_json(r.graph)},
                      {"kept", r.kept},
                      {"centers", r.centers},
                      {"preimage", io::graph_to_json(r.preimage)}},
                 out);
            return kOk;
        };
    });

    std::string l_mode = "observed", report;
    bool search = false;
    std::size_t max_trials = 200;
    auto* c_path = app.add_subcommand("approx-path", "bounded-size S-path with k-disc frequencies within eps");
    c_path->add_option("--k", k, "disc radius")->required();
    c_path->add_option("--eps", eps_text, "distance bound, e.g. 1/5")->required();
    c_path->add_option("--l-mode", l_mode, "class bound in the formulas: observed|naive");
    c_path->add_option("--in", in, "S-path JSON file")->required();
    c_path->add_option("--out", out, "output S-path file (default stdout)");
    c_path->add_option("--report", report, "write the pipeline report here");
    c_path->add_flag("--search", search, "try smaller phi and blowup than the certified ones");
    c_path->add_option("--max-trials", max_trials, "search mode: cap on pipeline runs");
    c_path->callback([&] {
        action = [&] {
            check_dk(2, k);
            PipelineOptions opts;
            if (l_mode == "observed") opts.l_mode = LMode::Observed;
            else if (l_mode == "naive") opts.l_mode = LMode::Naive;
            else throw Error("--l-mode must be observed or naive");
            opts.search = search;
            opts.max_trials = max_trials;
            auto r = approx_path(io::path_from_json(io::read_file(in)), k, parse_eps(eps_text), opts);
            emit(io::path_to_json(r.path), out);
            if (!report.empty()) io::write_file(report, pipeline_json(r.report));
            return r.report.within_eps ? kOk : kError;
        };
    });

    std::size_t n = 0;
    auto* c_und = app.add_subcommand("approx-undirected", "length of the short undirected path approximation");
    c_und->add_option("--n", n, "path length")->required();
    c_und->add_option("--k", k, "disc radius")->required();
    c_und->add_option("--eps", eps_text, "distance bound")->required();
    c_und->add_option("--out", out, "output file (default stdout)");
    c_und->callback([&] {
        action = [&] {
            check_dk(2, k);
            auto r = approx_undirected(n, k, parse_eps(eps_text));
            emit(Json{{"n", n}, {"k", k}, {"size", r.size}, {"distance", to_string(r.distance)}}, out);
            return kOk;
        };
    });

    auto* c_cover = app.add_subcommand("cover", "eps-cover of the frequency vectors of all small graphs");
    c_cover->add_option("--d", d, "degree bound");
    c_cover->add_option("--k", k, "disc radius");
    c_cover->add_option("--eps", eps_text, "cover radius")->required();
    c_cover->add_option("--nmax", nmax, "largest graph enumerated")->required();
    std::string cover_model = "simple";
    c_cover->add_option("--model", cover_model, "graph model: simple|sgraph (default simple)");
    c_cover->add_option("--symbols", symbols, "information set size for --model sgraph");
    c_cover->add_option("--out", out, "output file (default stdout)");
    c_cover->callback([&] {
        action = [&] {
            check_dk(d, k);
            auto m = parse_model(cover_model);
            std::vector<std::string> names;
            for (std::uint32_t i = 0; i < symbols; ++i) names.push_back("s" + std::to_string(i + 1));
            EnumerationSpec spec{m, d, nmax, m == Model::Simple ? simple_symbols() : make_symbols(names), {}, {}};
            auto cover = build_cover(spec, k, parse_eps(eps_text));
            auto chk = verify_cover(cover);
            Json reps = Json::array();
            for (auto i : cover.representatives) reps.push_back(io::graph_to_json(cover.universe[i]));
            bool complete = cover.universe_complete && cover.grid_complete;
            emit(Json{{"k", k},
                      {"eps", to_string(cover.eps)},
                      {"classes", cover.classes.size()},
                      {"universe", cover.universe.size()},
                      {"grid_points", cover.grid_points},
                      {"complete", complete},
                      {"covered", chk.covered},
                      {"worst", to_string(chk.worst)},
                      {"size_bound", to_string(cover.size_bound)},
                      {"within_size_bound", chk.within_size_bound},
                      {"representatives", std::move(reps)}},
                 out);
            return complete ? kOk : kPartial;
        };
    });

    std::string phi_path;
    auto* c_real = app.add_subcommand("realize", "smallest graph whose set of k-discs is exactly the given set");
    c_real->add_option("--phi", phi_path, "disc set JSON file (list of rooted discs)")->required();
    c_real->add_option("--nmax", nmax, "largest graph enumerated")->required();
    c_real->add_option("--d", d, "degree bound");
    std::string realize_model = "sgraph";
    c_real->add_option("--model", realize_model, "graph model: simple|sgraph (default sgraph)");
    c_real->add_option("--out", out, "output file (default stdout)");
    c_real->callback([&] {
        action = [&] {
            auto f = read_phi(phi_path);
            check_dk(d, f.radius);
            EnumerationSpec spec{parse_model(realize_model), d, nmax, f.symbols, {}, {}};
            auto r = realizability_search(f.phi, spec, f.radius);
            Json j{{"status", to_string(r.status)}, {"searched_up_to", r.searched_up_to}};
            if (r.witness) j["witness"] = io::graph_to_json(*r.witness);
            emit(j, out);
            return r.status == SearchStatus::BudgetExhausted ? kPartial : kOk;
        };
    });

    std::uint64_t max_iterations = AlgdcOptions{}.max_iterations;
    auto* c_alg = app.add_subcommand("algdc", "realizability through the cluster transformation and a simple-graph oracle");
    c_alg->add_option("--phi", phi_path, "disc set JSON file (list of rooted discs)")->required();
    c_alg->add_option("--nmax", nmax, "largest S-graph in the oracle's universe")->required();
    c_alg->add_option("--d", d, "degree bound");
    c_alg->add_option("--max-iterations", max_iterations, "cap on subset-loop iterations");
    c_alg->add_option("--out", out, "output file (default stdout)");
    c_alg->callback([&] {
        action = [&] {
            auto f = read_phi(phi_path);
            check_dk(d, f.radius);
            auto p = TransformParams::make(d, f.radius, static_cast<std::uint32_t>(f.symbols->size()));
            ImageUniverseOracle oracle(p, nmax);
            auto r = algdc(f.phi, oracle, AlgdcOptions{max_iterations});
            Json j{{"status", to_string(r.status)},
                   {"iterations", r.iterations},
                   {"loop_complete", r.loop_complete},
                   {"oracle_complete", oracle.complete()},
                   {"center_pools", r.center_pools},
                   {"other_pool", r.other_pool}};
            if (r.sgraph) {
                j["sgraph"] = io::graph_to_json(*r.sgraph);
                j["simple_vertices"] = r.simple->size();
            }
            emit(j, out);
            bool partial = r.status != AlgdcStatus::Found && (!r.loop_complete || !oracle.complete());
            return partial ? kPartial : kOk;
        };
    });

    std::vector<std::string> lemma_names{"all"};
    std::uint64_t seed = 42;
    std::size_t count = 1000;
    unsigned threads = 0;
    std::string report_format = "text";
    auto* c_verify = app.add_subcommand("verify", "check lemma inequalities on generated instances");
    c_verify->add_option("--lemma", lemma_names, "lemma name(s) or all");
    c_verify->add_option("--seed", seed, "instance stream seed");
    c_verify->add_option("--count", count, "instances per lemma");
    c_verify->add_option("--threads", threads, "worker threads (0 = hardware)");
    c_verify->add_option("--report", report_format, "json|text");
    c_verify->add_option("--out", out, "output file (default stdout)");
    c_verify->callback([&] {
        action = [&] {
            std::vector<lemmas::Lemma> chosen;
            for (const auto& name : lemma_names) {
                if (name == "all") chosen.insert(chosen.end(), lemmas::kAllLemmas.begin(), lemmas::kAllLemmas.end());
                else chosen.push_back(lemmas::parse_lemma(name));
            }
            if (report_format != "json" && report_format != "text") throw Error("--report must be json or text");
            std::size_t failures = 0;
            Json all = Json::array();
            std::string text;
            for (auto l : chosen) {
                auto s = lemmas::run_lemma(l, seed, count, threads);
                failures += s.fail;
                text += std::string(lemmas::to_string(l)) + ": pass " + std::to_string(s.pass) + ", fail " +
                        std::to_string(s.fail) + ", skip " + std::to_string(s.skip) + "\n";
                if (report_format == "json") {
                    Json checks = Json::array();
                    for (const auto& c : s.checks) checks.push_back(lemmas::to_json(c));
                    all.push_back(Json{{"lemma", lemmas::to_string(l)},
                                       {"family", lemmas::to_string(lemmas::family_of(l))},
                                       {"pass", s.pass},
                                       {"fail", s.fail},
                                       {"skip", s.skip},
                                       {"checks", std::move(checks)}});
                }
            }
            if (report_format == "json") {
                emit(Json{{"seed", seed}, {"count", count}, {"failures", failures}, {"lemmas", std::move(all)}}, out);
            } else if (out.empty() || out == "-") {
                std::cout << text;
            } else {
                std::ofstream(out) << text;
            }
            return failures == 0 ? kOk : kError;
        };
    });

    CLI11_PARSE(app, argc, argv);
    try {
        return action();
    } catch (const std::exception& ex) {
        std::cerr << "disc-kit: " << ex.what() << '\n';
        return kError;
    }
}
