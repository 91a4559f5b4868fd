#include "minktree/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace minktree {

namespace {

constexpr long long kMaxJsonInt = 1ll << 53;

nlohmann::json parseJsonText(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
}

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

OrderedJson scalarToJson(const Scalar& s) {
    if (s.exact()) {
        const Rational& q = s.rat();
        if (boost::multiprecision::denominator(q) == 1) {
            auto num = boost::multiprecision::numerator(q);
            if (num >= -kMaxJsonInt && num <= kMaxJsonInt)
                return OrderedJson(num.convert_to<long long>());
        }
        return OrderedJson(rationalToString(q));
    }
    return OrderedJson(s.value());
}

Scalar scalarFromJson(const nlohmann::json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    if (j.is_number_unsigned()) return Scalar(static_cast<long long>(j.get<uint64_t>()));
    if (j.is_number_float()) return Scalar(j.get<double>());
    if (j.is_string()) return Scalar(rationalFromString(j.get<std::string>()));
    throw ParseError("expected a number or numeric string");
}

PointSet pointSetFromJsonText(const std::string& text) {
    nlohmann::json j = parseJsonText(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw ParseError("point set JSON needs \"dim\" and \"points\"");
    PointSet s;
    try {
        s.dim = j.at("dim").get<int>();
        for (const auto& row : j.at("points")) {
            Vec p;
            for (const auto& cell : row) p.push_back(scalarFromJson(cell));
            s.points.push_back(std::move(p));
        }
        if (j.contains("labels"))
            for (const auto& l : j.at("labels")) s.labels.push_back(l.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("point set JSON: ") + e.what());
    }
    if (s.dim < 1) throw InvalidInstanceError("dimension must be positive");
    s.validate();
    return s;
}

PointSet pointSetFromCsvText(const std::string& text) {
    PointSet s;
    std::istringstream in(text);
    std::string line;
    bool hasLabels = false;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) cells.push_back(trimmed(cell));
        if (cells.empty()) continue;

        std::string label;
        Vec p;
        for (size_t i = 0; i < cells.size(); ++i) {
            try {
                p.push_back(Scalar(rationalFromString(cells[i])));
            } catch (const ParseError&) {
                if (i + 1 == cells.size() && !cells[i].empty()) {
                    label = cells[i];
                    break;
                }
                throw ParseError("CSV cell is not a number: " + cells[i]);
            }
        }
        if (s.points.empty()) {
            s.dim = static_cast<int>(p.size());
            hasLabels = !label.empty();
        }
        if (static_cast<int>(p.size()) != s.dim || hasLabels != !label.empty())
            throw ParseError("CSV rows have inconsistent shapes");
        s.points.push_back(std::move(p));
        if (hasLabels) s.labels.push_back(label);
    }
    if (s.points.empty()) throw ParseError("CSV contains no points");
    s.validate();
    return s;
}

PointSet loadPointSet(const std::string& path) {
    const std::string text = readFile(path);
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
        return pointSetFromCsvText(text);
    return pointSetFromJsonText(text);
}

std::string pointSetToJsonText(const PointSet& s) {
    OrderedJson j;
    j["dim"] = s.dim;
    j["points"] = OrderedJson::array();
    for (const auto& p : s.points) {
        OrderedJson row = OrderedJson::array();
        for (const auto& c : p) row.push_back(scalarToJson(c));
        j["points"].push_back(std::move(row));
    }
    if (!s.labels.empty()) j["labels"] = s.labels;
    return j.dump(2) + "\n";
}

OrderedJson treeToJson(const Tree& t) {
    OrderedJson j;
    j["edges"] = OrderedJson::array();
    for (const auto& [a, b] : t.edges) j["edges"].push_back(OrderedJson::array({a, b}));
    j["total_length"] = scalarToString(t.total_length);
    j["exact"] = t.total_length.exact();
    j["degrees"] = t.degree_sequence;
    return j;
}

std::vector<std::pair<int, int>> treeEdgesFromJson(const nlohmann::json& j) {
    if (!j.contains("edges")) throw ParseError("tree JSON needs \"edges\"");
    std::vector<std::pair<int, int>> edges;
    try {
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("tree JSON: ") + e.what());
    }
    return edges;
}

OrderedJson degreeReportToJson(const DegreeReport& r) {
    OrderedJson j;
    j["mst_count"] = r.mst_count;
    j["delta_minus"] = r.delta_minus;
    j["delta_plus"] = r.delta_plus;
    j["enumeration_complete"] = r.enumeration_complete;
    return j;
}

OrderedJson enumerationToJson(const EnumerationResult& r) {
    OrderedJson j;
    j["mst_count"] = r.trees.size();
    j["complete"] = r.complete;
    j["trees"] = OrderedJson::array();
    for (const auto& t : r.trees) j["trees"].push_back(treeToJson(t));
    return j;
}

OrderedJson traceToJson(const PerturbationTrace& trace) {
    OrderedJson j;
    j["params"] = {{"epsilon0", trace.params.epsilon0},
                   {"shrink", trace.params.shrink},
                   {"max_rounds", trace.params.max_rounds},
                   {"genericity_gap", trace.params.genericity_gap},
                   {"resample_limit", trace.params.resample_limit},
                   {"seed", trace.params.seed}};
    j["rounds"] = OrderedJson::array();
    for (const auto& r : trace.rounds)
        j["rounds"].push_back({{"epsilon", r.epsilon},
                               {"resamples", r.resamples},
                               {"topology_id", r.topology_id},
                               {"perturbed_mst_weight", r.perturbed_mst_weight}});
    j["topologies"] = OrderedJson::array();
    for (const auto& topo : trace.topologies) {
        OrderedJson edges = OrderedJson::array();
        for (const auto& [a, b] : topo) edges.push_back(OrderedJson::array({a, b}));
        j["topologies"].push_back(std::move(edges));
    }
    j["selected_round"] = trace.selected_round;
    j["final_tree"] = treeToJson(trace.final_tree);
    j["final_is_mst_of_S"] = trace.final_is_mst_of_S;
    return j;
}

OrderedJson certificateToJson(const PackingCertificate& cert) {
    OrderedJson j;
    j["norm"] = cert.norm.specString();
    j["k"] = cert.vectors.size();
    j["vectors"] = OrderedJson::array();
    for (const auto& v : cert.vectors) {
        OrderedJson row = OrderedJson::array();
        for (const auto& c : v) row.push_back(scalarToJson(c));
        j["vectors"].push_back(std::move(row));
    }
    j["min_pairwise"] = scalarToString(cert.min_pairwise);
    j["exact"] = cert.min_pairwise.exact();
    j["strict"] = cert.strict;
    j["seed"] = cert.seed;
    return j;
}

PackingCertificate certificateFromJsonText(const std::string& text) {
    nlohmann::json j = parseJsonText(text);
    if (!j.is_object() || !j.contains("norm") || !j.contains("vectors"))
        throw ParseError("certificate JSON needs \"norm\" and \"vectors\"");
    PackingCertificate cert;
    try {
        for (const auto& row : j.at("vectors")) {
            Vec v;
            for (const auto& cell : row) v.push_back(scalarFromJson(cell));
            cert.vectors.push_back(std::move(v));
        }
        if (cert.vectors.empty()) throw ParseError("certificate has no vectors");
        cert.norm = Norm::parse(j.at("norm").get<std::string>(),
                                static_cast<int>(cert.vectors[0].size()));
        if (j.contains("strict")) cert.strict = j.at("strict").get<bool>();
        if (j.contains("seed")) cert.seed = j.at("seed").get<uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what());
    }
    cert.min_pairwise = certificateMinPairwise(cert.norm, cert.vectors);
    return cert;
}

OrderedJson searchResultToJson(const SearchResult& r) {
    OrderedJson j;
    j["found"] = r.found;
    j["best_objective"] = r.best_objective;
    j["certificate"] = certificateToJson(r.cert);
    return j;
}

OrderedJson knownValuesToJson() {
    OrderedJson rows = OrderedJson::array();
    for (const auto& kv : knownValuesTable()) {
        OrderedJson j;
        j["body"] = kv.body;
        j["quantity"] = kv.quantity;
        if (kv.parametric) {
            j["value"] = kv.quantity == "H" ? "3^d-1" : "2^d";
        } else if (kv.lo == kv.hi) {
            j["value"] = kv.lo;
        } else {
            j["value"] = OrderedJson::array({kv.lo, kv.hi});
        }
        j["note"] = kv.note;
        rows.push_back(std::move(j));
    }
    return rows;
}

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

}  // namespace

std::string renderSvg(const PointSet& s, const Tree* tree, const Norm* ballNorm, int ballCenter) {
    if (s.dim != 2) throw UnsupportedError("SVG rendering requires dimension 2");
    if (s.points.empty()) throw InvalidInstanceError("nothing to render");
    if (ballNorm && ballCenter >= static_cast<int>(s.size()))
        throw InvalidInstanceError("ball center index out of range");

    std::vector<std::array<double, 2>> pts;
    for (const auto& p : s.points) pts.push_back({p[0].value(), p[1].value()});

    double minx = pts[0][0], maxx = pts[0][0], miny = pts[0][1], maxy = pts[0][1];
    auto extend = [&](double x, double y) {
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    };
    for (const auto& p : pts) extend(p[0], p[1]);

    std::vector<std::array<double, 2>> ball;
    if (ballNorm && ballCenter >= 0) {
        for (const auto& u : ballNorm->unitCircle2d()) {
            double x = pts[ballCenter][0] + u[0], y = pts[ballCenter][1] + u[1];
            ball.push_back({x, y});
            extend(x, y);
        }
    }

    const double canvas = 640.0, pad = 40.0;
    const double extent = std::max({maxx - minx, maxy - miny, 1e-9});
    const double scale = (canvas - 2 * pad) / extent;
    auto sx = [&](double x) { return pad + (x - minx) * scale; };
    auto sy = [&](double y) { return canvas - pad - (y - miny) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    if (!ball.empty()) {
        svg << "  <path id=\"unit-ball\" fill=\"none\" stroke=\"#999999\" "
               "stroke-dasharray=\"6 4\" d=\"";
        for (size_t i = 0; i < ball.size(); ++i)
            svg << (i == 0 ? "M " : "L ") << fmt(sx(ball[i][0])) << " " << fmt(sy(ball[i][1]))
                << " ";
        svg << "\"/>\n";
    }
    if (tree) {
        for (const auto& [a, b] : tree->edges)
            svg << "  <line x1=\"" << fmt(sx(pts[a][0])) << "\" y1=\"" << fmt(sy(pts[a][1]))
                << "\" x2=\"" << fmt(sx(pts[b][0])) << "\" y2=\"" << fmt(sy(pts[b][1]))
                << "\" stroke=\"#1f6fb2\" stroke-width=\"2\"/>\n";
    }
    for (size_t i = 0; i < pts.size(); ++i) {
        svg << "  <circle cx=\"" << fmt(sx(pts[i][0])) << "\" cy=\"" << fmt(sy(pts[i][1]))
            << "\" r=\"4\" fill=\"#c23b22\"/>\n";
        if (!s.labels.empty())
            svg << "  <text x=\"" << fmt(sx(pts[i][0]) + 6) << "\" y=\"" << fmt(sy(pts[i][1]) - 6)
                << "\" font-size=\"12\" font-family=\"sans-serif\">" << s.labels[i] << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

}  // namespace minktree
