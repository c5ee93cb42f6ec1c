#include "k4count/report_json.hpp"

namespace k4count {

using nlohmann::json;

namespace {

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (auto [u, v] : edges) out.push_back(json::array({u, v}));
    return out;
}

json opt_flag(const std::optional<bool>& f) {
    if (!f) return nullptr;
    return *f;
}

json opt_big(const std::optional<BigInt>& v) {
    if (!v) return nullptr;
    return to_decimal(*v);
}

json opt_rat(const std::optional<Rational>& v) {
    if (!v) return nullptr;
    return to_decimal(*v);
}

}  // namespace

json graph_json(const Graph& g) {
    return json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges_json(g.edges())}};
}

json certificate_json(const SubdivisionCertificate& cert) {
    json paths = json::array();
    for (const auto& p : cert.branch_paths) paths.push_back(p);
    return json{{"real_vertices", cert.real_vertices},
                {"branch_paths", paths},
                {"edges", edges_json(cert.edge_set)}};
}

json bound_report_json(const BoundReport& r) {
    json j{{"n", r.n},
           {"m", r.m},
           {"min_degree", r.min_degree},
           {"two_connected", r.two_connected},
           {"three_connected", r.three_connected}};

    j["ear_count"] = r.ear_count ? json(*r.ear_count) : json(nullptr);
    j["cycle_count"] =
        r.cycle_count ? json(std::to_string(*r.cycle_count)) : json(nullptr);
    j["cycles_truncated"] = r.cycles_truncated;
    j["k4_count"] = opt_big(r.k4_count);
    j["k4_truncated"] = r.k4_truncated;
    if (!r.cycles_without_vertex.empty()) {
        json per = json::array();
        for (auto c : r.cycles_without_vertex) per.push_back(std::to_string(c));
        j["cycles_without_vertex"] = per;
        j["cycles_without_vertex_truncated"] = r.cycles_without_vertex_truncated;
    }

    j["ears_expected"] = r.ears_expected ? json(*r.ears_expected) : json(nullptr);
    json bounds;
    bounds["cycle_lb_ears"] = opt_big(r.cycle_lb_ears);
    bounds["cycle_lb_nm"] = opt_big(r.cycle_lb_nm);
    bounds["cycle_lb_min_degree"] = opt_rat(r.cycle_lb_min_degree);
    bounds["k4_lb_cubic"] = opt_big(r.k4_lb_cubic);
    bounds["k4_lb_quarter_cycles"] = opt_rat(r.k4_lb_quarter_cycles);
    bounds["k4_lb_quarter_weighted"] = opt_rat(r.k4_lb_quarter_weighted);
    bounds["k4_lb_star"] = opt_rat(r.k4_lb_star);
    bounds["k4_lb_dense"] = opt_rat(r.k4_lb_dense);
    bounds["wheel_value"] = opt_big(r.wheel_value);
    j["bounds"] = bounds;
    j["conjecture_margin"] = opt_big(r.conjecture_margin);

    json ok;
    ok["ear_count"] = opt_flag(r.ok_ear_count);
    ok["cycle_lb_ears"] = opt_flag(r.ok_cycle_lb_ears);
    ok["cycle_lb_nm"] = opt_flag(r.ok_cycle_lb_nm);
    ok["cycle_lb_min_degree"] = opt_flag(r.ok_cycle_lb_min_degree);
    ok["k4_lb_cubic"] = opt_flag(r.ok_k4_lb_cubic);
    ok["k4_lb_quarter_cycles"] = opt_flag(r.ok_k4_lb_quarter_cycles);
    ok["k4_lb_quarter_weighted"] = opt_flag(r.ok_k4_lb_quarter_weighted);
    ok["k4_lb_star"] = opt_flag(r.ok_k4_lb_star);
    ok["k4_lb_dense"] = opt_flag(r.ok_k4_lb_dense);
    j["ok"] = ok;
    j["all_applicable_pass"] = r.all_applicable_pass();
    return j;
}

json apex_census_json(const ApexCensus& census) {
    json rows = json::array();
    for (const auto& row : census.rows) {
        json by = json::array();
        for (const auto& b : row.by_t) by.push_back(to_decimal(b));
        rows.push_back(json{{"s", row.s}, {"total", to_decimal(row.total)}, {"by_t", by}});
    }
    json nt = json::array();
    for (const auto& v : census.n_t) nt.push_back(to_decimal(v));
    return json{{"rows", rows}, {"n_t", nt}, {"t_max_observed", census.t_max_observed}};
}

}  // namespace k4count
