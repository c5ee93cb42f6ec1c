#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <k4count/bounds.hpp>
#include <k4count/connectivity.hpp>
#include <k4count/cycles.hpp>
#include <k4count/ears.hpp>
#include <k4count/generators.hpp>
#include <k4count/graph.hpp>
#include <k4count/k4.hpp>
#include <k4count/numbers.hpp>
#include <k4count/reductions.hpp>
#include <k4count/report_json.hpp>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace k4count;

namespace {

py::object big_to_py(const BigInt& x) {
    return py::module_::import("builtins").attr("int")(to_decimal(x));
}

py::object rat_to_py(const Rational& x) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(big_to_py(numerator(x)), big_to_py(denominator(x)));
}

BigInt py_to_big(const py::object& o) {
    return BigInt(py::cast<std::string>(py::str(o)));
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict count_to_py(const BigInt& count, bool truncated) {
    py::dict d;
    d["count"] = big_to_py(count);
    d["truncated"] = truncated;
    return d;
}

py::dict cert_to_py(const SubdivisionCertificate& cert) {
    return py::cast<py::dict>(json_to_py(certificate_json(cert)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact enumeration, counting, and verification of K4 subdivisions";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<not_two_connected>(m, "NotTwoConnected", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); }, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("degrees", &Graph::degrees)
        .def("min_degree", &Graph::min_degree)
        .def("delete_vertex", &Graph::delete_vertex, py::arg("v"))
        .def("with_edges", &Graph::with_edges, py::arg("extra"))
        .def("to_edge_list", &Graph::to_edge_list)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("is_connected", &is_connected, py::arg("g"));

    m.def("wheel", &wheel, py::arg("n"));
    m.def("complete", &complete, py::arg("n"));
    m.def("complete_bipartite", &complete_bipartite, py::arg("p"), py::arg("q"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("prism", &prism);
    m.def("gadget_chain", [](int cells) {
        GadgetChain c = gadget_chain(cells);
        py::dict d;
        d["cells"] = c.cells;
        d["graph"] = c.graph;
        d["endpoints"] = c.endpoints;
        d["junctions"] = c.junctions;
        return d;
    }, py::arg("cells"));
    m.def("random_2connected", &random_2connected, py::arg("n"), py::arg("ears"),
          py::arg("seed"));
    m.def("random_3connected", &random_3connected, py::arg("n"), py::arg("seed"));

    m.def("is_k_connected", &is_k_connected, py::arg("g"), py::arg("k"));
    m.def("disjoint_st_paths", [](const Graph& g, int s, int t, int k) {
        StPaths r = disjoint_st_paths(g, s, t, k);
        py::dict d;
        d["ok"] = r.ok;
        d["paths"] = r.paths;
        d["separator"] = r.separator;
        return d;
    }, py::arg("g"), py::arg("s"), py::arg("t"), py::arg("k"));
    m.def("fan_paths", &fan_paths, py::arg("g"), py::arg("v"), py::arg("c_set"), py::arg("k"));

    m.def("open_ear_decomposition",
          [](const Graph& g) { return open_ear_decomposition(g).ears; }, py::arg("g"));
    m.def("verify_ears", [](const Graph& g, const std::vector<std::vector<int>>& ears) {
        EarDecomposition d;
        d.ears = ears;
        std::string reason;
        bool ok = verify_ears(g, d, &reason);
        return py::make_tuple(ok, reason);
    }, py::arg("g"), py::arg("ears"));

    m.def("count_cycles", [](const Graph& g, std::uint64_t cap) {
        auto r = count_cycles(g, cap);
        return count_to_py(BigInt(r.count), r.truncated);
    }, py::arg("g"), py::arg("cap") = kDefaultCap);
    m.def("enumerate_cycles", [](const Graph& g, std::uint64_t cap) {
        auto r = enumerate_cycles(g, cap);
        py::dict d;
        d["cycles"] = r.cycles;
        d["truncated"] = r.truncated;
        return d;
    }, py::arg("g"), py::arg("cap") = kDefaultCap);
    m.def("count_st_paths", [](const Graph& g, int s, int t, std::uint64_t cap) {
        auto r = count_st_paths(g, s, t, cap);
        return count_to_py(BigInt(r.count), r.truncated);
    }, py::arg("g"), py::arg("s"), py::arg("t"), py::arg("cap") = kDefaultCap);

    m.def("count_k4", [](const Graph& g, std::uint64_t cap) {
        auto r = count_k4(g, cap);
        return count_to_py(r.count, r.truncated);
    }, py::arg("g"), py::arg("cap") = kDefaultCap);
    m.def("enumerate_k4", [](const Graph& g, std::uint64_t cap) {
        auto r = enumerate_k4(g, cap);
        py::list certs;
        for (const auto& cert : r.subdivisions) certs.append(cert_to_py(cert));
        py::dict d;
        d["subdivisions"] = certs;
        d["truncated"] = r.truncated;
        return d;
    }, py::arg("g"), py::arg("cap") = kDefaultCap);
    m.def("is_k4_subdivision", [](const Graph& g, const std::vector<Edge>& edges) -> py::object {
        auto cert = is_k4_subdivision(g, edges);
        if (!cert) return py::none();
        return cert_to_py(*cert);
    }, py::arg("g"), py::arg("edges"));
    m.def("k4_from_cycle", [](const Graph& g, int v, const std::vector<int>& cycle) {
        return cert_to_py(k4_from_cycle(g, v, cycle));
    }, py::arg("g"), py::arg("v"), py::arg("cycle"));
    m.def("k4_from_cycle_pinned",
          [](const Graph& g, int v, int x, int y, const std::vector<int>& cycle) {
              PinnedSubdivision r = k4_from_cycle_pinned(g, v, x, y, cycle);
              py::dict d;
              d["certificate"] = cert_to_py(r.certificate);
              d["z"] = r.z;
              return d;
          },
          py::arg("g"), py::arg("v"), py::arg("x"), py::arg("y"), py::arg("cycle"));

    m.def("whitney_ear_count", &whitney_ear_count, py::arg("n"), py::arg("m"));
    m.def("cycle_bound_from_ears",
          [](long long l) { return big_to_py(cycle_bound_from_ears(l)); }, py::arg("ears"));
    m.def("cycle_bound_from_nm",
          [](long long n, long long m) { return big_to_py(cycle_bound_from_nm(n, m)); },
          py::arg("n"), py::arg("m"));
    m.def("cycle_bound_min_degree",
          [](long long n, long long d) { return rat_to_py(cycle_bound_min_degree(n, d)); },
          py::arg("n"), py::arg("min_degree"));
    m.def("phi_lower_cubic", [](long long n) { return big_to_py(phi_lower_cubic(n)); },
          py::arg("n"));
    m.def("phi_upper_wheel", [](long long n) { return big_to_py(phi_upper_wheel(n)); },
          py::arg("n"));
    m.def("phi_lower_dense",
          [](long long n, long long m) { return rat_to_py(phi_lower_dense(n, m)); },
          py::arg("n"), py::arg("m"));
    m.def("star_bound", [](long long n, const std::vector<int>& degrees) {
        return rat_to_py(star_bound(n, degrees));
    }, py::arg("n"), py::arg("degrees"));
    m.def("cycle_sum_bound", [](long long n, const std::vector<int>& degrees) {
        CycleSumBound b = cycle_sum_bound(n, degrees);
        py::dict d;
        d["sum"] = big_to_py(b.sum);
        d["cubic_chain"] = rat_to_py(b.cubic_chain);
        return d;
    }, py::arg("n"), py::arg("degrees"));
    m.def("bound_report", [](const Graph& g, std::uint64_t cap) {
        return json_to_py(bound_report_json(bound_report(g, cap)));
    }, py::arg("g"), py::arg("cap") = kDefaultCap);

    py::class_<FixedInstance>(m, "FixedInstance")
        .def_readonly("graph", &FixedInstance::graph)
        .def_readonly("a", &FixedInstance::a)
        .def_readonly("b", &FixedInstance::b)
        .def_readonly("c", &FixedInstance::c)
        .def_readonly("d", &FixedInstance::d)
        .def_readonly("s", &FixedInstance::s)
        .def_readonly("t", &FixedInstance::t)
        .def("markers", &FixedInstance::markers);
    m.def("build_fixed_instance", &build_fixed_instance, py::arg("g"), py::arg("s"),
          py::arg("t"));
    m.def("count_fixed_subdivisions", [](const FixedInstance& inst, std::uint64_t cap) {
        auto r = count_fixed_subdivisions(inst, cap);
        return count_to_py(r.count, r.truncated);
    }, py::arg("instance"), py::arg("cap") = kDefaultCap);

    py::class_<WeightedInstance>(m, "WeightedInstance")
        .def_readonly("graph", &WeightedInstance::graph)
        .def_readonly("cells", &WeightedInstance::cells)
        .def_readonly("base_vertices", &WeightedInstance::base_vertices)
        .def_readonly("markers", &WeightedInstance::markers)
        .def_readonly("s", &WeightedInstance::s)
        .def_readonly("t", &WeightedInstance::t)
        .def("is_gadget_internal", &WeightedInstance::is_gadget_internal, py::arg("v"));
    m.def("build_weighted_instance", &build_weighted_instance, py::arg("instance"),
          py::arg("cells"));
    m.def("marker_census", [](const FixedInstance& inst, std::uint64_t cap) {
        py::dict d;
        for (const auto& [key, value] : marker_census(inst, cap))
            d[py::make_tuple(key.first, key.second)] = big_to_py(value);
        return d;
    }, py::arg("instance"), py::arg("cap") = kDefaultCap);
    m.def("weighted_total_from_census", [](const py::dict& census, int cells) {
        MarkerCensus c;
        for (const auto& item : census) {
            auto key = py::cast<std::pair<int, int>>(item.first);
            c[key] = py_to_big(py::reinterpret_borrow<py::object>(item.second));
        }
        return big_to_py(weighted_total_from_census(c, cells));
    }, py::arg("census"), py::arg("cells"));
    m.def("recover_fixed_count", [](const py::object& total, int cells) {
        return big_to_py(recover_fixed_count(py_to_big(total), cells));
    }, py::arg("weighted_total"), py::arg("cells"));

    py::class_<ApexInstance>(m, "ApexInstance")
        .def_readonly("graph", &ApexInstance::graph)
        .def_readonly("base_vertices", &ApexInstance::base_vertices)
        .def_readonly("apex_count", &ApexInstance::apex_count)
        .def("is_apex", &ApexInstance::is_apex, py::arg("v"));
    m.def("build_apex_instance", &build_apex_instance, py::arg("base"), py::arg("s"));
    m.def("p_falling", [](long long s, int t) { return big_to_py(p_falling(s, t)); },
          py::arg("s"), py::arg("t"));
    m.def("max_apexes_bound", &max_apexes_bound, py::arg("base_vertices"));
    m.def("apex_census",
          [](const Graph& base, const std::vector<int>& s_values, std::uint64_t cap,
             int required_t_max) {
              return json_to_py(apex_census_json(apex_census(base, s_values, cap,
                                                             required_t_max)));
          },
          py::arg("base"), py::arg("s_values"), py::arg("cap") = kDefaultCap,
          py::arg("required_t_max") = -1);
    m.def("vandermonde_recover", [](const py::list& evals, int t_max) {
        std::vector<std::pair<long long, BigInt>> rows;
        for (const auto& item : evals) {
            auto pair = py::cast<py::sequence>(item);
            rows.push_back({py::cast<long long>(pair[0]),
                            py_to_big(py::reinterpret_borrow<py::object>(pair[1]))});
        }
        py::list out;
        for (const auto& coeff : vandermonde_recover(rows, t_max)) out.append(big_to_py(coeff));
        return out;
    }, py::arg("evals"), py::arg("t_max"));

    m.attr("DEFAULT_CAP") = py::int_(kDefaultCap);
}
