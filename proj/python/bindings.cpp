#include "minktree/io.hpp"
#include "minktree/lowdeg.hpp"
#include "minktree/mst.hpp"
#include "minktree/packing.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace minktree;

namespace {

// ints and strings land on the exact path, floats stay floating -- the same
// convention as the JSON reader.
Scalar scalarFromPy(const py::handle& h) {
    if (py::isinstance<py::bool_>(h)) throw py::type_error("coordinate cannot be a bool");
    if (py::isinstance<py::int_>(h)) return Scalar(h.cast<long long>());
    if (py::isinstance<py::float_>(h)) return Scalar(h.cast<double>());
    if (py::isinstance<py::str>(h)) return Scalar(rationalFromString(h.cast<std::string>()));
    throw py::type_error("coordinate must be int, float, or numeric string");
}

Vec vecFromPy(const py::handle& seq) {
    Vec v;
    for (const auto& item : seq) v.push_back(scalarFromPy(item));
    return v;
}

std::vector<Vec> vecsFromPy(const py::handle& rows) {
    std::vector<Vec> out;
    for (const auto& row : rows) out.push_back(vecFromPy(row));
    return out;
}

PointSet pointSetFromPy(const py::handle& rows) {
    auto pts = vecsFromPy(rows);
    if (pts.empty()) throw std::invalid_argument("empty point list");
    PointSet s;
    s.dim = static_cast<int>(pts[0].size());
    s.points = std::move(pts);
    s.validate();
    return s;
}

py::list vecsToPy(const std::vector<Vec>& vecs) {
    py::list rows;
    for (const auto& v : vecs) {
        py::list row;
        for (const auto& c : v) row.append(c.value());
        rows.append(row);
    }
    return rows;
}

std::string jsonDump(const OrderedJson& j) { return j.dump(2) + "\n"; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "minimal spanning trees, degree bounds, and packing certificates in normed spaces";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<InvalidInstanceError>(m, "InvalidInstanceError");
    py::register_exception<UnsupportedError>(m, "UnsupportedError");

    py::class_<Norm>(m, "Norm")
        .def_static("parse", &Norm::parse, py::arg("spec"), py::arg("dim") = 0)
        .def_static("l1", &Norm::l1, py::arg("dim"))
        .def_static("l2", &Norm::l2, py::arg("dim"))
        .def_static("linf", &Norm::linf, py::arg("dim"))
        .def_static("lp", &Norm::lp, py::arg("p"), py::arg("dim"))
        .def_static(
            "polyhedral",
            [](const py::handle& vertices) { return Norm::polyhedral(vecsFromPy(vertices)); },
            py::arg("vertices"))
        .def_property_readonly("dim", &Norm::dim)
        .def_property_readonly("spec", &Norm::specString)
        .def_property_readonly("exact_capable", &Norm::exactCapable)
        .def(
            "eval", [](const Norm& n, const py::handle& v) { return n.eval(vecFromPy(v)).value(); },
            py::arg("v"))
        .def(
            "normalize",
            [](const Norm& n, const py::handle& v) {
                return vecToDouble(n.normalize(vecFromPy(v)));
            },
            py::arg("v"))
        .def("__repr__", [](const Norm& n) {
            return "Norm('" + n.specString() + "', dim=" + std::to_string(n.dim()) + ")";
        });

    py::class_<PointSet>(m, "PointSet")
        .def(py::init([](const py::handle& points, std::vector<std::string> labels) {
                 PointSet s = pointSetFromPy(points);
                 s.labels = std::move(labels);
                 s.validate();
                 return s;
             }),
             py::arg("points"), py::arg("labels") = std::vector<std::string>{})
        .def_static("from_json", &pointSetFromJsonText, py::arg("text"))
        .def_static("from_csv", &pointSetFromCsvText, py::arg("text"))
        .def("to_json", &pointSetToJsonText)
        .def_property_readonly("dim", [](const PointSet& s) { return s.dim; })
        .def_property_readonly("labels", [](const PointSet& s) { return s.labels; })
        .def_property_readonly("points", [](const PointSet& s) { return vecsToPy(s.points); })
        .def("__len__", &PointSet::size)
        .def("__repr__", [](const PointSet& s) {
            std::ostringstream o;
            o << "PointSet(n=" << s.size() << ", dim=" << s.dim << ")";
            return o.str();
        });

    py::class_<Tree>(m, "Tree")
        .def_property_readonly("n", [](const Tree& t) { return t.n; })
        .def_property_readonly("edges", [](const Tree& t) { return t.edges; })
        .def_property_readonly("total_length", [](const Tree& t) { return t.total_length.value(); })
        .def_property_readonly("total_length_str",
                               [](const Tree& t) { return scalarToString(t.total_length); })
        .def_property_readonly("exact", [](const Tree& t) { return t.total_length.exact(); })
        .def_property_readonly("degrees", [](const Tree& t) { return t.degree_sequence; })
        .def("max_degree", &Tree::maxDegree)
        .def("to_json", [](const Tree& t) { return jsonDump(treeToJson(t)); })
        .def("__repr__", [](const Tree& t) {
            std::ostringstream o;
            o << "Tree(n=" << t.n << ", length=" << scalarToString(t.total_length)
              << ", max_degree=" << t.maxDegree() << ")";
            return o.str();
        });

    py::class_<DegreeReport>(m, "DegreeReport")
        .def_readonly("delta_plus", &DegreeReport::delta_plus)
        .def_readonly("delta_minus", &DegreeReport::delta_minus)
        .def_readonly("mst_count", &DegreeReport::mst_count)
        .def_readonly("enumeration_complete", &DegreeReport::enumeration_complete)
        .def("__repr__", [](const DegreeReport& r) {
            std::ostringstream o;
            o << "DegreeReport(mst_count=" << r.mst_count << ", delta_minus=" << r.delta_minus
              << ", delta_plus=" << r.delta_plus << ", complete=" << r.enumeration_complete << ")";
            return o.str();
        });

    py::class_<PerturbationTrace>(m, "PerturbationTrace")
        .def_property_readonly("rounds",
                               [](const PerturbationTrace& t) {
                                   py::list rounds;
                                   for (const auto& r : t.rounds) {
                                       py::dict d;
                                       d["epsilon"] = r.epsilon;
                                       d["resamples"] = r.resamples;
                                       d["topology_id"] = r.topology_id;
                                       d["perturbed_mst_weight"] = r.perturbed_mst_weight;
                                       rounds.append(d);
                                   }
                                   return rounds;
                               })
        .def_property_readonly("selected_round",
                               [](const PerturbationTrace& t) { return t.selected_round; })
        .def_property_readonly("final_is_mst",
                               [](const PerturbationTrace& t) { return t.final_is_mst_of_S; })
        .def("to_json", [](const PerturbationTrace& t) { return jsonDump(traceToJson(t)); });

    py::class_<PackingCertificate>(m, "PackingCertificate")
        .def_property_readonly("norm", [](const PackingCertificate& c) { return c.norm; })
        .def_property_readonly("k", &PackingCertificate::k)
        .def_property_readonly("vectors",
                               [](const PackingCertificate& c) { return vecsToPy(c.vectors); })
        .def_property_readonly("min_pairwise",
                               [](const PackingCertificate& c) { return c.min_pairwise.value(); })
        .def_property_readonly(
            "min_pairwise_str",
            [](const PackingCertificate& c) { return scalarToString(c.min_pairwise); })
        .def_property_readonly("strict", [](const PackingCertificate& c) { return c.strict; })
        .def("to_json", [](const PackingCertificate& c) { return jsonDump(certificateToJson(c)); })
        .def_static("from_json", &certificateFromJsonText, py::arg("text"))
        .def("__repr__", [](const PackingCertificate& c) {
            std::ostringstream o;
            o << "PackingCertificate(norm='" << c.norm.specString() << "', k=" << c.k()
              << ", min_pairwise=" << scalarToString(c.min_pairwise) << ")";
            return o.str();
        });

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("found", &SearchResult::found)
        .def_readonly("best_objective", &SearchResult::best_objective)
        .def_readonly("certificate", &SearchResult::cert)
        .def("__repr__", [](const SearchResult& r) {
            std::ostringstream o;
            o << "SearchResult(found=" << r.found << ", best_objective=" << r.best_objective
              << ")";
            return o.str();
        });

    m.def(
        "angle_size",
        [](const Norm& norm, const py::handle& a, const py::handle& b, const py::handle& c) {
            return angleSize(norm, vecFromPy(a), vecFromPy(b), vecFromPy(c)).value();
        },
        py::arg("norm"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "min_pairwise_distance",
        [](const PointSet& s, const Norm& n) { return minPairwiseDistance(s, n).value(); },
        py::arg("points"), py::arg("norm"));

    py::enum_<TieBreak>(m, "TieBreak")
        .value("lexicographic", TieBreak::lexicographic)
        .value("reverse_lexicographic", TieBreak::reverse_lexicographic);
    m.def("mst", &kruskalMst, py::arg("points"), py::arg("norm"),
          py::arg("tie_break") = TieBreak::lexicographic, py::arg("tol") = kDefaultTol);
    m.def(
        "enumerate_msts",
        [](const PointSet& s, const Norm& n, long long cap, double tol) {
            auto r = enumerateMsts(s, n, cap, tol);
            return py::make_tuple(r.trees, r.complete);
        },
        py::arg("points"), py::arg("norm"), py::arg("cap") = kDefaultEnumerationCap,
        py::arg("tol") = kDefaultTol);
    m.def("degree_report", &degreeReport, py::arg("points"), py::arg("norm"),
          py::arg("cap") = kDefaultEnumerationCap, py::arg("tol") = kDefaultTol);
    m.def(
        "check_incident_angles",
        [](const Tree& t, const PointSet& s, const Norm& n, double tol) {
            auto r = checkIncidentAngles(t, s, n, tol);
            py::list viol;
            for (const auto& v : r.violations)
                viol.append(py::make_tuple(v.a, v.b, v.c, v.size));
            return py::make_tuple(r.min_size, viol);
        },
        py::arg("tree"), py::arg("points"), py::arg("norm"), py::arg("tol") = kDefaultTol);
    m.def(
        "brute_force_mst_weight",
        [](const PointSet& s, const Norm& n) { return bruteForceMstWeight(s, n).value(); },
        py::arg("points"), py::arg("norm"));

    m.def("sample_perturbation", &samplePerturbation, py::arg("points"), py::arg("epsilon"),
          py::arg("norm"), py::arg("seed") = 0);
    m.def("is_generic", &isGeneric, py::arg("points"), py::arg("norm"), py::arg("tau") = 1e-6);
    m.def(
        "low_degree_mst",
        [](const PointSet& s, const Norm& n, uint64_t seed, double epsilon0, double shrink,
           int maxRounds, double gap, int resampleLimit) {
            PerturbationParams p;
            p.seed = seed;
            p.epsilon0 = epsilon0;
            p.shrink = shrink;
            p.max_rounds = maxRounds;
            p.genericity_gap = gap;
            p.resample_limit = resampleLimit;
            auto r = lowDegreeMst(s, n, p);
            return py::make_tuple(r.tree, r.trace);
        },
        py::arg("points"), py::arg("norm"), py::arg("seed") = 0, py::arg("epsilon0") = 0.0,
        py::arg("shrink") = 0.5, py::arg("max_rounds") = 20, py::arg("genericity_gap") = 1e-6,
        py::arg("resample_limit") = 100);
    m.def("star_hard_instance", &starHardInstance, py::arg("norm"), py::arg("certificate"));

    m.def("verify_certificate", &verifyCertificate, py::arg("certificate"),
          py::arg("tol") = kDefaultTol, py::arg("strict_margin") = 1e-6);
    m.def("known_packing", &knownPacking, py::arg("name"), py::arg("dim") = 0);
    m.def(
        "search_lower_bound",
        [](const Norm& n, int k, bool strict, double tol, double strictMargin, long long budget,
           int restarts, uint64_t seed) {
            SearchParams p;
            p.k = k;
            p.strict = strict;
            p.tol = tol;
            p.strict_margin = strictMargin;
            p.budget = budget;
            p.restarts = restarts;
            p.seed = seed;
            return searchLowerBound(n, p);
        },
        py::arg("norm"), py::arg("k"), py::arg("strict") = false, py::arg("tol") = 1e-6,
        py::arg("strict_margin") = 1e-6, py::arg("budget") = 100000, py::arg("restarts") = 32,
        py::arg("seed") = 0);
    m.def("known_values_table", [] { return jsonDump(knownValuesToJson()); });
    m.def(
        "lookup_known_value",
        [](const std::string& body, const std::string& quantity,
           int dim) -> py::object {
            auto v = lookupKnownValue(body, quantity, dim);
            if (!v) return py::none();
            return py::make_tuple(v->first, v->second);
        },
        py::arg("body"), py::arg("quantity"), py::arg("dim") = 0);
    m.def("known_strict_hadwiger",
          [](const Norm& n) -> py::object {
              auto v = knownStrictHadwiger(n);
              return v ? py::cast(*v) : py::none();
          });
    m.def("known_hadwiger", [](const Norm& n) -> py::object {
        auto v = knownHadwiger(n);
        return v ? py::cast(*v) : py::none();
    });

    m.def(
        "render_svg",
        [](const PointSet& s, const Tree* tree, const Norm* ballNorm, int ballCenter) {
            return renderSvg(s, tree, ballNorm, ballCenter);
        },
        py::arg("points"), py::arg("tree") = nullptr, py::arg("ball_norm") = nullptr,
        py::arg("ball_center") = -1);
}
