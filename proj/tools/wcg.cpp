#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "wcg/bench.hpp"
#include "wcg/certificates.hpp"
#include "wcg/corpus.hpp"
#include "wcg/edge_ring.hpp"
#include "wcg/io.hpp"
#include "wcg/simplicial.hpp"
#include "wcg/wellcovered.hpp"

namespace {

using wcg::json::json;

enum Exit { kDecided = 0, kInputError = 1, kResourceError = 2, kDisagreement = 3 };

std::atomic<bool> interrupted{false};

extern "C" void on_sigint(int) { interrupted.store(true); }

struct RunConfig {
    std::string source;
    bool inline_text = false;
    std::string format = "edgelist";
    std::string output = "human";
    bool json_flag = false;
    std::size_t max_n = 32;
    std::size_t max_faces = std::size_t{1} << 15;
    bool force = false;
    std::size_t workers = 1;

    bool json_output() const { return json_flag || output == "json"; }
    wcg::Guard guard() const { return {max_n, force}; }
    wcg::Guard cover_guard() const { return {wcg::kCoverSearchGuard.max_n, force}; }
};

std::size_t env_size(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(raw, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != std::string_view(raw).size() || value == 0)
        throw wcg::InputError(std::string(name) + " must be a positive integer, got '" + raw + "'");
    return static_cast<std::size_t>(value);
}

std::string read_source(const std::string& source, bool inline_text) {
    if (inline_text) {
        std::string text;
        for (std::size_t i = 0; i < source.size(); ++i) {
            if (source[i] == '\\' && i + 1 < source.size() && source[i + 1] == 'n') {
                text += '\n';
                ++i;
            } else {
                text += source[i] == ';' ? '\n' : source[i];
            }
        }
        return text;
    }
    std::ostringstream buffer;
    if (source == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(source, std::ios::binary);
    if (!in) throw wcg::InputError("cannot read " + source);
    buffer << in.rdbuf();
    return buffer.str();
}

std::string first_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (!line.empty()) return line;
    }
    throw wcg::ParseError(1, "no graph6 line found");
}

wcg::Graph load_graph(const RunConfig& cfg) {
    const std::string text = read_source(cfg.source, cfg.inline_text);
    if (cfg.format == "edgelist") return wcg::parse_edgelist(text);
    if (cfg.format == "graph6") return wcg::parse_graph6(first_line(text));
    throw wcg::InputError("format '" + cfg.format + "' does not describe a graph; use edgelist or graph6");
}

std::vector<wcg::Graph> load_graph6_stream(const std::string& path) {
    const std::string text = read_source(path, false);
    std::istringstream in(text);
    std::vector<wcg::Graph> graphs;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        try {
            graphs.push_back(wcg::parse_graph6(line));
        } catch (const wcg::ParseError& e) {
            throw wcg::ParseError(number, e.what());
        }
    }
    return graphs;
}

std::string members(const wcg::VertexSet& s) { return s.to_string(); }

std::string cover_text(const wcg::BasicCliqueCover& cover) {
    std::string out;
    for (const auto& q : cover.cliques) out += (out.empty() ? "" : " ") + members(q);
    return out.empty() ? "(empty)" : out;
}

class Command {
public:
    Command(std::string name, const RunConfig& cfg) : name_(std::move(name)), cfg_(cfg) {}

    json& doc() { return doc_; }
    std::ostringstream& text() { return text_; }

    int finish(int code) {
        if (cfg_.json_output()) {
            json out = wcg::json::envelope(name_);
            out.update(doc_);
            const auto elapsed = std::chrono::steady_clock::now() - start_;
            out["timing"] = {{"elapsed_us", std::chrono::duration<double, std::micro>(elapsed).count()}};
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << text_.str();
        }
        return code;
    }

private:
    std::string name_;
    const RunConfig& cfg_;
    json doc_ = json::object();
    std::ostringstream text_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_graph_output(const RunConfig& cfg) {
    if (cfg.output == "csv") throw wcg::InputError("csv output is only available for bench");
}

int run_oracle(const RunConfig& cfg) {
    require_graph_output(cfg);
    const auto g = load_graph(cfg);
    const auto v = wcg::is_well_covered_oracle(g, cfg.guard());
    Command cmd("oracle", cfg);
    cmd.doc() = wcg::json::oracle_json(v);
    cmd.doc()["graph"] = wcg::json::graph_json(g);
    cmd.text() << "well-covered: " << (v.well_covered ? "yes" : "no") << "\n"
               << "maximal independent sets: " << v.count << "\n";
    if (v.common_size) cmd.text() << "common size: " << *v.common_size << "\n";
    if (v.smaller_witness)
        cmd.text() << "smaller: " << members(*v.smaller_witness) << "\nlarger: " << members(*v.larger_witness) << "\n";
    return cmd.finish(kDecided);
}

int run_check(const RunConfig& cfg, const std::string& cover_path) {
    require_graph_output(cfg);
    const auto g = load_graph(cfg);
    Command cmd("check", cfg);
    cmd.doc()["graph"] = wcg::json::graph_json(g);

    std::optional<wcg::BasicCliqueCover> cover;
    if (!cover_path.empty())
        cover = wcg::basify(g, wcg::parse_cover(read_source(cover_path, false), g));
    else
        cover = wcg::find_basic_clique_cover(g, cfg.cover_guard());

    const bool oracle_allowed = cfg.force || g.order() <= cfg.max_n;
    if (!cover) {
        const auto oracle = wcg::is_well_covered_oracle(g, cfg.guard());
        cmd.doc()["in_class_G"] = false;
        cmd.doc()["cover"] = nullptr;
        cmd.doc()["well_covered"] = oracle.well_covered;
        cmd.doc()["alpha"] = wcg::alpha(g);
        cmd.doc()["per_clique"] = json::array();
        cmd.doc()["witnesses"] = oracle.smaller_witness
                                     ? json{{"maximum", wcg::json::vertex_list(*oracle.larger_witness)},
                                            {"smaller", wcg::json::vertex_list(*oracle.smaller_witness)}}
                                     : json(nullptr);
        cmd.doc()["zero_divisor"] = nullptr;
        cmd.doc()["oracle"] = wcg::json::oracle_json(oracle);
        cmd.doc()["agreement"] = true;
        cmd.text() << "not in class G (no cover by alpha = " << wcg::alpha(g) << " cliques); oracle verdict\n"
                   << "well-covered: " << (oracle.well_covered ? "yes" : "no") << "\n";
        return cmd.finish(kDecided);
    }

    const auto verdict = wcg::check_well_covered(g, *cover);
    const auto zd = wcg::wellcovered_via_zero_divisors(g, *cover);
    std::optional<wcg::OracleVerdict> oracle;
    if (oracle_allowed) oracle = wcg::is_well_covered_oracle(g, cfg.guard());

    const bool agreement =
        zd.well_covered == verdict.well_covered && (!oracle || oracle->well_covered == verdict.well_covered);
    cmd.doc().update(wcg::json::verdict_json(verdict));
    cmd.doc()["in_class_G"] = true;
    cmd.doc()["cover"] = wcg::json::cover_json(*cover);
    cmd.doc()["zero_divisor"] = wcg::json::zero_divisor_json(zd);
    cmd.doc()["oracle"] = oracle ? wcg::json::oracle_json(*oracle) : json(nullptr);
    cmd.doc()["agreement"] = agreement;

    cmd.text() << "cover: " << cover_text(*cover) << "\n"
               << "alpha: " << verdict.alpha << "\n"
               << "well-covered: " << (verdict.well_covered ? "yes" : "no") << "\n";
    for (const auto& c : verdict.per_clique) {
        cmd.text() << "  clique " << members(c.clique) << ": ";
        if (c.refutation)
            cmd.text() << "dominated by independent " << members(*c.refutation) << "\n";
        else
            cmd.text() << "no independent dominator (" << c.search_nodes << " search nodes)\n";
    }
    if (verdict.witness_pair)
        cmd.text() << "maximal independent sets of different sizes: " << members(verdict.witness_pair->maximum)
                   << " and " << members(verdict.witness_pair->smaller) << "\n";
    cmd.text() << "zero-divisor route: " << (zd.well_covered ? "well-covered" : "not well-covered") << "\n"
               << "oracle: " << (oracle ? (oracle->well_covered ? "well-covered" : "not well-covered") : "skipped")
               << "\n";
    if (!agreement) std::cerr << "error: cross-check disagreement between verdict routes\n";
    return cmd.finish(agreement ? kDecided : kDisagreement);
}

int run_cover(const RunConfig& cfg) {
    require_graph_output(cfg);
    const auto g = load_graph(cfg);
    const auto membership = wcg::is_in_class_G(g, cfg.cover_guard());
    Command cmd("cover", cfg);
    cmd.doc()["graph"] = wcg::json::graph_json(g);
    cmd.doc()["alpha"] = wcg::alpha(g);
    cmd.doc()["in_class_G"] = membership.member;
    cmd.doc()["cover"] = membership.witness ? wcg::json::cover_json(*membership.witness) : json(nullptr);
    cmd.text() << "alpha: " << wcg::alpha(g) << "\n";
    if (membership.witness)
        cmd.text() << "basic clique cover: " << cover_text(*membership.witness) << "\n";
    else
        cmd.text() << "not in class G: no partition into " << wcg::alpha(g) << " cliques\n";
    return cmd.finish(kDecided);
}

int run_subdivide(const RunConfig& cfg, bool check) {
    require_graph_output(cfg);
    if (cfg.format != "facets")
        throw wcg::InputError("subdivide reads facet files; format '" + cfg.format + "' is not supported");
    const auto complex = wcg::parse_facets(read_source(cfg.source, cfg.inline_text));
    const auto nc = wcg::noncomparability_graph(complex, cfg.max_faces);
    Command cmd("subdivide", cfg);
    cmd.doc() = wcg::json::subdivision_json(nc);
    cmd.doc()["repaired_elements"] = complex.repaired_elements();
    for (int e : complex.repaired_elements())
        std::cerr << "warning: element " << e << " appears in no facet; added as a singleton facet\n";

    cmd.text() << "faces: " << nc.map.faces.size() << "\ncover levels:";
    for (const auto& q : nc.cover.cliques) cmd.text() << " " << q.size();
    cmd.text() << "\n";
    if (nc.graph.order() <= wcg::kMaxGraph6Order) cmd.text() << "graph6: " << wcg::encode_graph6(nc.graph) << "\n";
    cmd.text() << wcg::format_edgelist(nc.graph);

    int code = kDecided;
    if (check) {
        const bool pure = wcg::is_pure(complex);
        const auto verdict = wcg::check_well_covered(nc.graph, nc.cover);
        const auto zd = wcg::wellcovered_via_zero_divisors(nc.graph, nc.cover);
        std::optional<bool> oracle;
        if (cfg.force || nc.graph.order() <= cfg.max_n)
            oracle = wcg::is_well_covered_oracle(nc.graph, cfg.guard()).well_covered;
        const bool agreement =
            verdict.well_covered == pure && zd.well_covered == pure && (!oracle || *oracle == pure);
        cmd.doc()["check"] = {{"pure", pure},
                              {"checker_well_covered", verdict.well_covered},
                              {"zero_divisor_well_covered", zd.well_covered},
                              {"oracle_well_covered", oracle ? json(*oracle) : json(nullptr)},
                              {"agreement", agreement}};
        cmd.text() << "pure: " << (pure ? "yes" : "no") << "\nnon-comparability graph well-covered: "
                   << (verdict.well_covered ? "yes" : "no") << "\nagreement: " << (agreement ? "yes" : "no") << "\n";
        if (!agreement) {
            std::cerr << "error: purity and well-coveredness disagree\n";
            code = kDisagreement;
        }
    }
    return cmd.finish(code);
}

int run_zerodiv(const RunConfig& cfg, const std::string& form_text) {
    require_graph_output(cfg);
    const auto g = load_graph(cfg);
    const auto ring = wcg::edge_ring(g);
    const auto form = wcg::parse_linear_form(form_text, g.order());
    const auto witness = wcg::linear_zero_divisor(ring, form);
    const bool verified = !witness || wcg::annihilates(ring, *witness, form);
    Command cmd("zerodiv", cfg);
    cmd.doc()["graph"] = wcg::json::graph_json(g);
    cmd.doc()["form"] = form.to_string();
    cmd.doc()["support"] = wcg::json::vertex_list(form.support());
    cmd.doc()["zero_divisor"] = witness.has_value();
    cmd.doc()["witness"] = witness ? json(witness->to_string()) : json(nullptr);
    cmd.doc()["witness_support"] = witness ? wcg::json::vertex_list(witness->support) : json(nullptr);
    cmd.text() << "form: " << form.to_string() << "\n";
    if (witness)
        cmd.text() << "zero-divisor: yes, annihilated by " << witness->to_string() << "\n";
    else
        cmd.text() << "zero-divisor: no\n";
    if (!verified) std::cerr << "error: witness fails re-validation\n";
    return cmd.finish(verified ? kDecided : kDisagreement);
}

int run_primes(const RunConfig& cfg) {
    require_graph_output(cfg);
    const auto g = load_graph(cfg);
    const auto primes = wcg::minimal_primes(wcg::edge_ring(g), cfg.guard());
    Command cmd("primes", cfg);
    json list = json::array();
    for (const auto& p : primes) list.push_back(wcg::json::vertex_list(p));
    cmd.doc()["graph"] = wcg::json::graph_json(g);
    cmd.doc()["minimal_primes"] = list;
    cmd.doc()["count"] = primes.size();
    cmd.text() << primes.size() << " minimal primes (minimal vertex covers)\n";
    for (const auto& p : primes) {
        cmd.text() << "  (";
        bool first = true;
        p.for_each([&](wcg::Vertex v) {
            cmd.text() << (first ? "" : ", ") << "x" << v;
            first = false;
        });
        cmd.text() << ")\n";
    }
    return cmd.finish(kDecided);
}

int run_ravindra(const RunConfig& cfg) {
    require_graph_output(cfg);
    const auto g = load_graph(cfg);
    const auto r = wcg::check_ravindra(g);
    std::optional<bool> oracle;
    if (cfg.force || g.order() <= cfg.max_n) oracle = wcg::is_well_covered_oracle(g, cfg.guard()).well_covered;
    const bool agreement = !oracle || *oracle == r.well_covered;
    Command cmd("ravindra", cfg);
    cmd.doc() = wcg::json::ravindra_json(r);
    cmd.doc()["graph"] = wcg::json::graph_json(g);
    cmd.doc()["oracle_well_covered"] = oracle ? json(*oracle) : json(nullptr);
    cmd.doc()["agreement"] = agreement;
    cmd.text() << "well-covered: " << (r.well_covered ? "yes" : "no") << "\n" << r.reason << "\nmatching:";
    for (auto [x, y] : r.matching) cmd.text() << " " << x << "-" << y;
    cmd.text() << "\n";
    if (!agreement) std::cerr << "error: matching criterion disagrees with the oracle\n";
    return cmd.finish(agreement ? kDecided : kDisagreement);
}

int run_spartite(const RunConfig& cfg, const std::string& parts_path) {
    require_graph_output(cfg);
    const auto g = load_graph(cfg);
    const auto parts = wcg::parse_vertex_sets(read_source(parts_path, false), g.order());
    const auto r = wcg::verify_spartite_consequences(g, parts, cfg.guard());
    Command cmd("spartite", cfg);
    cmd.doc() = wcg::json::spartite_json(r);
    cmd.doc()["graph"] = wcg::json::graph_json(g);
    static const char* names[] = {"consistent", "premise not met", "contradiction"};
    cmd.text() << "status: " << names[static_cast<int>(r.status)] << "\n";
    if (!r.reason.empty()) cmd.text() << r.reason << "\n";
    cmd.text() << "part sizes:";
    for (auto s : r.part_sizes) cmd.text() << " " << s;
    cmd.text() << "\n";
    for (const auto& m : r.matchings)
        cmd.text() << "  parts " << m.first << "," << m.second << ": " << (m.perfect ? "perfect" : "imperfect")
                   << " matching of size " << m.matching.size() << "\n";
    return cmd.finish(r.status == wcg::SpartiteStatus::contradiction ? kDisagreement : kDecided);
}

int run_hunt(const RunConfig& cfg, std::optional<std::size_t> max_n, const std::string& stream) {
    require_graph_output(cfg);
    wcg::HuntOptions options;
    options.workers = cfg.workers;
    options.cancel = &interrupted;
    std::signal(SIGINT, on_sigint);

    wcg::HuntReport report;
    if (!stream.empty()) {
        const auto graphs = load_graph6_stream(stream);
        report = wcg::conjecture_hunt(graphs, options);
    } else {
        if (!max_n) throw wcg::InputError("hunt needs --max-n or --stream");
        if (cfg.force) options.max_enumeration_n = std::max(*max_n, options.max_enumeration_n);
        report = wcg::conjecture_hunt(*max_n, options);
    }

    Command cmd("hunt", cfg);
    cmd.doc() = wcg::json::hunt_json(report);
    cmd.text() << "graphs scanned: " << report.scanned << (report.complete ? "" : " (interrupted)") << "\n"
               << "premise graphs: " << report.premise_satisfying << " (" << report.premise_in_class_G
               << " in class G)\n"
               << "counterexamples: " << report.counterexamples.size() << "\n";
    for (const auto& c : report.counterexamples)
        cmd.text() << "  " << (c.graph.order() <= wcg::kMaxGraph6Order ? wcg::encode_graph6(c.graph) : "?")
                   << " s=" << c.s << " common size " << c.common_size << "\n";
    cmd.text() << "shortcut audit: " << report.cliques_audited << " cliques, " << report.shortcut_agreements
               << " agreements, " << report.shortcut_disagreements.size() << " disagreements, "
               << report.shortcut_violations.size() << " violations\n";
    if (!report.complete) std::cerr << "interrupted: partial report\n";
    if (!report.shortcut_violations.empty()) return cmd.finish(kDisagreement);
    return cmd.finish(report.complete ? kDecided : kResourceError);
}

int run_bench(const RunConfig& cfg, const wcg::BenchOptions& options) {
    const auto rows = wcg::run_bench(options);
    const bool agreement = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.agreement; });
    if (cfg.json_output()) {
        Command cmd("bench", cfg);
        cmd.doc()["rows"] = wcg::json::bench_json(rows);
        cmd.finish(kDecided);
    } else {
        std::cout << wcg::bench_csv(rows);
    }
    if (!agreement) std::cerr << "error: at least one bench row disagrees\n";
    return agreement ? kDecided : kDisagreement;
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_flag("--json", cfg.json_flag, "Emit a JSON certificate");
    sub->add_option("--output", cfg.output, "Output mode")->check(CLI::IsMember({"human", "json", "csv"}));
    sub->add_flag("--force", cfg.force, "Ignore size guards");
}

void add_graph_options(CLI::App* sub, RunConfig& cfg, const char* what = "Input file, '-' for stdin") {
    sub->add_option("input", cfg.source, what)->required();
    sub->add_flag("--inline", cfg.inline_text, "Treat input as the text itself ('\\n' or ';' separate lines)");
    sub->add_option("--format", cfg.format, "Input format")
        ->check(CLI::IsMember({"edgelist", "graph6", "facets", "cover"}));
    sub->add_option("--max-n", cfg.max_n, "Vertex guard for exhaustive routines")->check(CLI::PositiveNumber);
    sub->add_option("--max-faces", cfg.max_faces, "Face-count guard")->check(CLI::PositiveNumber);
    add_output_options(sub, cfg);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    try {
        cfg.max_n = env_size("WCG_MAX_N", cfg.max_n);
        cfg.max_faces = env_size("WCG_MAX_FACES", cfg.max_faces);
    } catch (const wcg::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }

    CLI::App app{"Well-covered graph recognition through basic clique covers"};
    app.require_subcommand(1);

    auto* oracle = app.add_subcommand("oracle", "Brute-force well-coveredness over all maximal independent sets");
    add_graph_options(oracle, cfg);

    std::string cover_path;
    auto* check = app.add_subcommand("check", "Domination criterion, zero-divisor route and oracle cross-check");
    add_graph_options(check, cfg);
    check->add_option("--cover", cover_path, "Cover file with alpha cliques, one per line")->check(CLI::ExistingFile);

    auto* cover = app.add_subcommand("cover", "Find a basic clique cover or report non-membership in class G");
    add_graph_options(cover, cfg);

    bool subdivide_check = false;
    auto* subdivide = app.add_subcommand("subdivide", "Non-comparability graph of a simplicial complex");
    add_graph_options(subdivide, cfg, "Facet file, '-' for stdin");
    subdivide->add_flag("--check", subdivide_check, "Cross-check purity against well-coveredness");

    std::string form;
    auto* zerodiv = app.add_subcommand("zerodiv", "Decide whether a linear form is a zero-divisor of the edge ring");
    add_graph_options(zerodiv, cfg);
    zerodiv->add_option("--form", form, "Linear form such as x0+x1 or 2*x1-1/3*x4")->required();

    auto* primes = app.add_subcommand("primes", "Minimal primes of the edge ideal");
    add_graph_options(primes, cfg);

    auto* ravindra = app.add_subcommand("ravindra", "Perfect-matching criterion for bipartite graphs");
    add_graph_options(ravindra, cfg);

    std::string parts_path;
    auto* spartite = app.add_subcommand("spartite", "Check the consequences for s-partite well-covered graphs");
    add_graph_options(spartite, cfg);
    spartite->add_option("--parts", parts_path, "Parts file, one independent set per line")
        ->required()
        ->check(CLI::ExistingFile);

    std::optional<std::size_t> hunt_max_n;
    std::string stream;
    auto* hunt = app.add_subcommand("hunt", "Search small graphs for s-partite well-covered graphs outside class G");
    hunt->add_option("--max-n", hunt_max_n, "Enumerate all graphs up to this order")->check(CLI::PositiveNumber);
    hunt->add_option("--stream", stream, "graph6 file to scan instead of enumerating")->check(CLI::ExistingFile);
    hunt->add_option("--workers", cfg.workers, "Worker threads")
        ->default_val(std::max(1u, std::thread::hardware_concurrency()))
        ->check(CLI::PositiveNumber);
    add_output_options(hunt, cfg);

    wcg::BenchOptions bench_options;
    auto* bench = app.add_subcommand("bench", "Time the three routes on random non-comparability graphs");
    bench->add_option("--max-n", bench_options.max_ground, "Largest ground-set size")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench->add_option("--max-faces", bench_options.max_faces, "Largest number of faces per complex")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench->add_option("--count", bench_options.count, "Number of complexes")->capture_default_str();
    bench->add_option("--seed", bench_options.seed, "Random seed")->capture_default_str();
    bench->add_option("--runs", bench_options.runs, "Timing runs per measurement (median)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_output_options(bench, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kDecided : kInputError;
    }
    if (subdivide->parsed() && subdivide->count("--format") == 0) cfg.format = "facets";

    try {
        if (oracle->parsed()) return run_oracle(cfg);
        if (check->parsed()) return run_check(cfg, cover_path);
        if (cover->parsed()) return run_cover(cfg);
        if (subdivide->parsed()) return run_subdivide(cfg, subdivide_check);
        if (zerodiv->parsed()) return run_zerodiv(cfg, form);
        if (primes->parsed()) return run_primes(cfg);
        if (ravindra->parsed()) return run_ravindra(cfg);
        if (spartite->parsed()) return run_spartite(cfg, parts_path);
        if (hunt->parsed()) return run_hunt(cfg, hunt_max_n, stream);
        if (bench->parsed()) return run_bench(cfg, bench_options);
    } catch (const wcg::ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kResourceError;
    } catch (const wcg::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const wcg::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
