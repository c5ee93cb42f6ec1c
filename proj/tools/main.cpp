#include "k4count/bounds.hpp"
#include "k4count/connectivity.hpp"
#include "k4count/cycles.hpp"
#include "k4count/ears.hpp"
#include "k4count/generators.hpp"
#include "k4count/graph.hpp"
#include "k4count/k4.hpp"
#include "k4count/numbers.hpp"
#include "k4count/reductions.hpp"
#include "k4count/report_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

using k4count::BigInt;
using k4count::Graph;
using nlohmann::json;

Graph load_graph(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw k4count::parse_error(0, "cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return k4count::parse_graph(text);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int thread_budget() {
    const char* env = std::getenv("K4_THREADS");
    if (!env || !*env) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw std::invalid_argument("K4_THREADS must be a positive integer");
    return static_cast<int>(v);
}

struct GenOptions {
    std::string family = "wheel";
    int n = 6;
    int p = 2, q = 3;
    int cells = 1;
    int ears = 3;
    std::uint64_t seed = 1;
    std::string out = "-";
};

int run_gen(const GenOptions& o) {
    Graph g;
    if (o.family == "wheel")
        g = k4count::wheel(o.n);
    else if (o.family == "complete")
        g = k4count::complete(o.n);
    else if (o.family == "bipartite")
        g = k4count::complete_bipartite(o.p, o.q);
    else if (o.family == "cycle")
        g = k4count::cycle_graph(o.n);
    else if (o.family == "prism")
        g = k4count::prism();
    else if (o.family == "gadget")
        g = k4count::gadget_chain(o.cells).graph;
    else if (o.family == "random2")
        g = k4count::random_2connected(o.n, o.ears, o.seed);
    else if (o.family == "random3")
        g = k4count::random_3connected(o.n, o.seed);
    else
        throw std::invalid_argument("unknown family: " + o.family);
    write_text(o.out, g.to_edge_list());
    return 0;
}

int run_ears(const std::string& input) {
    Graph g = load_graph(input);
    auto d = k4count::open_ear_decomposition(g);
    std::string reason;
    bool ok = k4count::verify_ears(g, d, &reason);
    json j{{"n", g.vertex_count()},
           {"m", g.edge_count()},
           {"ear_count", d.ear_count()},
           {"expected_ear_count", k4count::whitney_ear_count(g.vertex_count(), g.edge_count())},
           {"ears", d.ears},
           {"verified", ok}};
    if (!ok) j["reason"] = reason;
    emit(j);
    return ok ? 0 : 1;
}

int run_cycles(const std::string& input, std::uint64_t cap, bool list) {
    Graph g = load_graph(input);
    json j{{"n", g.vertex_count()}, {"m", g.edge_count()}};
    if (list) {
        auto r = k4count::enumerate_cycles(g, cap);
        j["count"] = std::to_string(r.cycles.size());
        j["truncated"] = r.truncated;
        j["cycles"] = r.cycles;
    } else {
        auto r = k4count::count_cycles(g, cap);
        j["count"] = std::to_string(r.count);
        j["truncated"] = r.truncated;
    }
    emit(j);
    return 0;
}

int run_paths(const std::string& input, int s, int t, std::uint64_t cap, bool list) {
    Graph g = load_graph(input);
    json j{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"s", s}, {"t", t}};
    if (list) {
        std::vector<std::vector<int>> paths;
        bool truncated = false;
        k4count::for_each_st_path(g, s, t, [&](const std::vector<int>& p) {
            if (paths.size() == cap) {
                truncated = true;
                return false;
            }
            paths.push_back(p);
            return true;
        });
        j["count"] = std::to_string(paths.size());
        j["truncated"] = truncated;
        j["paths"] = paths;
    } else {
        auto r = k4count::count_st_paths(g, s, t, cap);
        j["count"] = std::to_string(r.count);
        j["truncated"] = r.truncated;
    }
    emit(j);
    return 0;
}

int run_count_k4(const std::string& input, std::uint64_t cap, bool list) {
    Graph g = load_graph(input);
    json j{{"n", g.vertex_count()}, {"m", g.edge_count()}};
    if (list) {
        auto r = k4count::enumerate_k4(g, cap);
        j["count"] = std::to_string(r.subdivisions.size());
        j["truncated"] = r.truncated;
        json subs = json::array();
        for (const auto& cert : r.subdivisions) subs.push_back(k4count::certificate_json(cert));
        j["subdivisions"] = subs;
    } else {
        auto r = k4count::count_k4(g, cap);
        j["count"] = k4count::to_decimal(r.count);
        j["truncated"] = r.truncated;
    }
    emit(j);
    return 0;
}

int run_verify(const std::string& input, std::uint64_t cap) {
    Graph g = load_graph(input);
    auto report = k4count::bound_report(g, cap);
    emit(k4count::bound_report_json(report));
    return report.all_applicable_pass() ? 0 : 1;
}

struct CampaignOptions {
    std::string family = "random3";
    int count = 10;
    int n_min = 5, n_max = 7;
    int ears = 4;
    std::uint64_t seed = 1;
    std::uint64_t cap = k4count::kDefaultCap;
};

int run_campaign(const CampaignOptions& o) {
    if (o.count < 1) throw std::invalid_argument("count must be positive");
    if (o.n_min > o.n_max) throw std::invalid_argument("n-min must not exceed n-max");
    if (o.family != "random3" && o.family != "random2")
        throw std::invalid_argument("unknown family: " + o.family);

    int span = o.n_max - o.n_min + 1;
    std::vector<std::string> lines(o.count);
    std::vector<bool> pass(o.count, false);
    std::vector<std::optional<BigInt>> margins(o.count);

    auto work = [&](int i) {
        int n = o.n_min + i % span;
        std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
        Graph g = o.family == "random3" ? k4count::random_3connected(n, seed)
                                        : k4count::random_2connected(n, o.ears, seed);
        auto report = k4count::bound_report(g, o.cap);
        json j{{"index", i},
               {"seed", std::to_string(seed)},
               {"graph", k4count::graph_json(g)},
               {"report", k4count::bound_report_json(report)}};
        lines[i] = j.dump();
        pass[i] = report.all_applicable_pass();
        if (report.conjecture_margin) margins[i] = *report.conjecture_margin;
    };

    int workers = std::min(thread_budget(), o.count);
    if (workers <= 1) {
        for (int i = 0; i < o.count; ++i) work(i);
    } else {
        std::mutex m;
        int next = 0;
        auto runner = [&]() {
            while (true) {
                int i;
                {
                    std::lock_guard<std::mutex> lock(m);
                    if (next == o.count) return;
                    i = next++;
                }
                work(i);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(runner);
        for (auto& th : pool) th.join();
    }

    for (const auto& line : lines) std::cout << line << "\n";
    bool all_pass = true;
    for (bool p : pass) all_pass = all_pass && p;
    std::optional<BigInt> min_margin;
    for (const auto& mg : margins)
        if (mg && (!min_margin || *mg < *min_margin)) min_margin = *mg;
    json agg{{"aggregate", true},
             {"instances", o.count},
             {"all_pass", all_pass},
             {"min_conjecture_margin",
              min_margin ? json(k4count::to_decimal(*min_margin)) : json(nullptr)}};
    emit(agg);
    return all_pass ? 0 : 1;
}

struct ReduceOptions {
    std::string kind = "fixed";
    std::string input = "-";
    int s = 0, t = 1;
    int cells = 1;
    int apexes = 1;
    std::string edge_list_out;
};

int run_reduce(const ReduceOptions& o) {
    Graph g = load_graph(o.input);
    json j;
    Graph out_graph;
    if (o.kind == "fixed") {
        auto inst = k4count::build_fixed_instance(g, o.s, o.t);
        out_graph = inst.graph;
        j = json{{"kind", "fixed"},
                 {"graph", k4count::graph_json(inst.graph)},
                 {"markers", inst.markers()},
                 {"s", inst.s},
                 {"t", inst.t}};
    } else if (o.kind == "weighted") {
        auto fixed = k4count::build_fixed_instance(g, o.s, o.t);
        auto inst = k4count::build_weighted_instance(fixed, o.cells);
        out_graph = inst.graph;
        j = json{{"kind", "weighted"},
                 {"graph", k4count::graph_json(inst.graph)},
                 {"markers", inst.markers},
                 {"s", inst.s},
                 {"t", inst.t},
                 {"cells", inst.cells},
                 {"base_vertices", inst.base_vertices}};
    } else if (o.kind == "apex") {
        auto inst = k4count::build_apex_instance(g, o.apexes);
        out_graph = inst.graph;
        j = json{{"kind", "apex"},
                 {"graph", k4count::graph_json(inst.graph)},
                 {"base_vertices", inst.base_vertices},
                 {"apex_count", inst.apex_count}};
    } else {
        throw std::invalid_argument("unknown kind: " + o.kind);
    }
    emit(j);
    if (!o.edge_list_out.empty()) write_text(o.edge_list_out, out_graph.to_edge_list());
    return 0;
}

struct RecoverOptions {
    std::string kind = "weighted";
    std::string total = "0";
    int cells = 1;
    int t_max = -1;
    std::vector<std::string> evals;
};

int run_recover(const RecoverOptions& o) {
    if (o.kind == "weighted") {
        BigInt total = k4count::parse_bigint(o.total);
        BigInt n = k4count::recover_fixed_count(total, o.cells);
        emit(json{{"kind", "weighted"},
                  {"cells", o.cells},
                  {"total", k4count::to_decimal(total)},
                  {"fixed_count", k4count::to_decimal(n)}});
        return 0;
    }
    if (o.kind != "apex") throw std::invalid_argument("unknown kind: " + o.kind);
    if (o.t_max < 0) throw std::invalid_argument("apex recovery needs --t-max");
    std::vector<std::pair<long long, BigInt>> evals;
    for (const auto& one : o.evals) {
        auto eq = one.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--eval expects s=count, got " + one);
        evals.emplace_back(std::stoll(one.substr(0, eq)),
                           k4count::parse_bigint(one.substr(eq + 1)));
    }
    auto coeff = k4count::vandermonde_recover(evals, o.t_max);
    json arr = json::array();
    for (const auto& c : coeff) arr.push_back(k4count::to_decimal(c));
    emit(json{{"kind", "apex"},
              {"t_max", o.t_max},
              {"coefficients", arr},
              {"n_0", k4count::to_decimal(coeff[0])}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counting K4 subdivisions: generators, certificates, bounds, reductions"};
    app.require_subcommand(1);
    int exit_code = 0;

    GenOptions gen;
    auto* sub_gen = app.add_subcommand("gen", "generate a graph in edge-list form");
    sub_gen->add_option("--family", gen.family,
                        "wheel|complete|bipartite|cycle|prism|gadget|random2|random3");
    sub_gen->add_option("--n", gen.n, "vertex count");
    sub_gen->add_option("--p", gen.p, "bipartite: left side size");
    sub_gen->add_option("--q", gen.q, "bipartite: right side size");
    sub_gen->add_option("--cells", gen.cells, "gadget: diamond cell count");
    sub_gen->add_option("--ears", gen.ears, "random2: ear count");
    sub_gen->add_option("--seed", gen.seed, "random seed");
    sub_gen->add_option("--out", gen.out, "output path ('-' = stdout)");
    sub_gen->callback([&] { exit_code = run_gen(gen); });

    std::string ears_input = "-";
    auto* sub_ears = app.add_subcommand("ears", "open ear decomposition of a 2-connected graph");
    sub_ears->add_option("--input", ears_input, "edge-list path ('-' = stdin)");
    sub_ears->callback([&] { exit_code = run_ears(ears_input); });

    std::string cyc_input = "-";
    std::uint64_t cyc_cap = k4count::kDefaultCap;
    bool cyc_list = false;
    auto* sub_cyc = app.add_subcommand("cycles", "count or list all cycles");
    sub_cyc->add_option("--input", cyc_input, "edge-list path ('-' = stdin)");
    sub_cyc->add_option("--cap", cyc_cap, "stop after this many");
    sub_cyc->add_flag("--list", cyc_list, "include the cycles themselves");
    sub_cyc->callback([&] { exit_code = run_cycles(cyc_input, cyc_cap, cyc_list); });

    std::string path_input = "-";
    int path_s = 0, path_t = 0;
    std::uint64_t path_cap = k4count::kDefaultCap;
    bool path_list = false;
    auto* sub_paths = app.add_subcommand("paths", "count or list simple s-t paths");
    sub_paths->add_option("--input", path_input, "edge-list path ('-' = stdin)");
    sub_paths->add_option("--s", path_s, "source vertex")->required();
    sub_paths->add_option("--t", path_t, "target vertex")->required();
    sub_paths->add_option("--cap", path_cap, "stop after this many");
    sub_paths->add_flag("--list", path_list, "include the paths themselves");
    sub_paths->callback(
        [&] { exit_code = run_paths(path_input, path_s, path_t, path_cap, path_list); });

    std::string k4_input = "-";
    std::uint64_t k4_cap = k4count::kDefaultCap;
    bool k4_list = false;
    auto* sub_k4 = app.add_subcommand("count-k4", "count or list K4 subdivisions");
    sub_k4->add_option("--input", k4_input, "edge-list path ('-' = stdin)");
    sub_k4->add_option("--cap", k4_cap, "stop after this many");
    sub_k4->add_flag("--list", k4_list, "include certificates");
    sub_k4->callback([&] { exit_code = run_count_k4(k4_input, k4_cap, k4_list); });

    std::string ver_input = "-";
    std::uint64_t ver_cap = k4count::kDefaultCap;
    auto* sub_ver = app.add_subcommand("verify", "evaluate every applicable bound on a graph");
    sub_ver->add_option("--input", ver_input, "edge-list path ('-' = stdin)");
    sub_ver->add_option("--cap", ver_cap, "enumeration cap");
    sub_ver->callback([&] { exit_code = run_verify(ver_input, ver_cap); });

    CampaignOptions camp;
    auto* sub_camp = app.add_subcommand(
        "campaign", "bound reports over generated instances (one JSON line each)");
    sub_camp->add_option("--family", camp.family, "random3|random2");
    sub_camp->add_option("--count", camp.count, "number of instances");
    sub_camp->add_option("--n-min", camp.n_min, "smallest vertex count");
    sub_camp->add_option("--n-max", camp.n_max, "largest vertex count");
    sub_camp->add_option("--ears", camp.ears, "random2: ear count");
    sub_camp->add_option("--seed", camp.seed, "base seed; instance i uses seed + i");
    sub_camp->add_option("--cap", camp.cap, "enumeration cap");
    sub_camp->callback([&] { exit_code = run_campaign(camp); });

    ReduceOptions red;
    auto* sub_red = app.add_subcommand("reduce", "build a counting-reduction host graph");
    sub_red->add_option("--kind", red.kind, "fixed|weighted|apex");
    sub_red->add_option("--input", red.input, "edge-list path ('-' = stdin)");
    sub_red->add_option("--s", red.s, "source terminal (fixed/weighted)");
    sub_red->add_option("--t", red.t, "target terminal (fixed/weighted)");
    sub_red->add_option("--cells", red.cells, "weighted: diamond cells per chain");
    sub_red->add_option("--apexes", red.apexes, "apex: number of apexes");
    sub_red->add_option("--edge-list-out", red.edge_list_out, "also write the host graph here");
    sub_red->callback([&] { exit_code = run_reduce(red); });

    RecoverOptions rec;
    auto* sub_rec = app.add_subcommand("recover", "invert a reduction identity");
    sub_rec->add_option("--kind", rec.kind, "weighted|apex");
    sub_rec->add_option("--total", rec.total, "weighted: subdivision count of the host");
    sub_rec->add_option("--cells", rec.cells, "weighted: cells used by the host");
    sub_rec->add_option("--t-max", rec.t_max, "apex: degree of the count polynomial");
    sub_rec->add_option("--eval", rec.evals, "apex: s=count pair (repeatable)");
    sub_rec->callback([&] { exit_code = run_recover(rec); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const k4count::not_two_connected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const k4count::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
