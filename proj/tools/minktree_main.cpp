#include "minktree/io.hpp"
#include "minktree/lowdeg.hpp"
#include "minktree/mst.hpp"
#include "minktree/packing.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace minktree;

void emit(const std::string& outPath, const std::string& text) {
    if (outPath.empty())
        std::cout << text;
    else
        writeFile(outPath, text);
}

std::string dumped(const OrderedJson& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal spanning trees, degree bounds, and packing certificates in normed spaces"};
    app.require_subcommand(1);

    std::string normSpec = "l2", inPath, outPath, treePath, certPath, name;
    uint64_t seed = 0;
    long long cap = kDefaultEnumerationCap;
    double tol = kDefaultTol;
    double strictMargin = 1e-6;
    double searchTol = 1e-6;
    long long budget = 100000;
    int restarts = 32;
    int dim = 2;
    int k = 2;
    int ballCenter = -1;
    bool strict = false;
    PerturbationParams perturb;

    auto addCommon = [&](CLI::App* cmd, bool needsNorm) {
        if (needsNorm) cmd->add_option("--norm", normSpec, "norm spec: l1|l2|linf|lp:<p>|poly:[[..],..]");
        cmd->add_option("--in", inPath, "input point-set file (.json or .csv)")->required();
        cmd->add_option("--out", outPath, "output path (stdout when omitted)");
        cmd->add_option("--tol", tol, "floating comparison tolerance");
    };

    auto* cmdMst = app.add_subcommand("mst", "minimal spanning tree of a point set");
    addCommon(cmdMst, true);

    auto* cmdEnum = app.add_subcommand("enumerate", "all minimal spanning trees");
    addCommon(cmdEnum, true);
    cmdEnum->add_option("--cap", cap, "maximum number of trees to materialize");

    auto* cmdDeg = app.add_subcommand("degrees", "degree extremes over all MSTs");
    addCommon(cmdDeg, true);
    cmdDeg->add_option("--cap", cap, "maximum number of trees to materialize");

    auto* cmdLow = app.add_subcommand("lowdeg", "degree-bounded MST via perturbation");
    addCommon(cmdLow, true);
    cmdLow->add_option("--seed", seed, "random seed");
    cmdLow->add_option("--eps0", perturb.epsilon0, "initial perturbation radius (0 = auto)");
    cmdLow->add_option("--shrink", perturb.shrink, "epsilon shrink factor per round");
    cmdLow->add_option("--rounds", perturb.max_rounds, "number of perturbation rounds");
    cmdLow->add_option("--gap", perturb.genericity_gap, "genericity gap around angle size 1");
    cmdLow->add_option("--resample-limit", perturb.resample_limit, "max rejected samples per round");

    auto* cmdPack = app.add_subcommand("pack", "packing certificates for Hadwiger-type bounds");
    cmdPack->require_subcommand(1);
    auto* packSearch = cmdPack->add_subcommand("search", "stochastic lower-bound search");
    packSearch->add_option("--norm", normSpec, "norm spec")->required();
    packSearch->add_option("--dim", dim, "ambient dimension");
    packSearch->add_option("--k", k, "number of unit vectors")->required();
    packSearch->add_flag("--strict", strict, "require pairwise distance > 1");
    packSearch->add_option("--strict-margin", strictMargin, "margin for strict certificates");
    packSearch->add_option("--budget", budget, "annealing iterations per restart");
    packSearch->add_option("--restarts", restarts, "number of restarts");
    packSearch->add_option("--seed", seed, "random seed");
    packSearch->add_option("--tol", searchTol, "success slack for non-strict mode");
    packSearch->add_option("--out", outPath, "output path");

    auto* packVerify = cmdPack->add_subcommand("verify", "re-check a certificate file");
    packVerify->add_option("--in", certPath, "certificate JSON")->required();
    packVerify->add_option("--tol", tol, "floating tolerance");
    packVerify->add_option("--strict-margin", strictMargin, "margin for strict certificates");
    packVerify->add_option("--out", outPath, "output path");

    auto* packKnown = cmdPack->add_subcommand("known", "a reference construction by name");
    packKnown->add_option("--name", name, "construction name")->required();
    packKnown->add_option("--dim", dim, "dimension for parametric families");
    packKnown->add_option("--out", outPath, "output path");

    auto* packTable = cmdPack->add_subcommand("table", "established Hadwiger-type values");
    packTable->add_option("--out", outPath, "output path");

    auto* cmdRender = app.add_subcommand("render", "SVG of a planar instance");
    cmdRender->add_option("--in", inPath, "input point-set file")->required();
    cmdRender->add_option("--norm", normSpec, "norm for the MST and ball outline");
    cmdRender->add_option("--tree", treePath, "tree JSON to draw (default: compute the MST)");
    cmdRender->add_option("--ball", ballCenter, "vertex index for a unit-ball outline");
    cmdRender->add_option("--out", outPath, "output path");
    cmdRender->add_option("--tol", tol, "floating comparison tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmdMst) {
            PointSet s = loadPointSet(inPath);
            Norm norm = Norm::parse(normSpec, s.dim);
            emit(outPath, dumped(treeToJson(kruskalMst(s, norm, TieBreak::lexicographic, tol))));
        } else if (*cmdEnum) {
            PointSet s = loadPointSet(inPath);
            Norm norm = Norm::parse(normSpec, s.dim);
            emit(outPath, dumped(enumerationToJson(enumerateMsts(s, norm, cap, tol))));
        } else if (*cmdDeg) {
            PointSet s = loadPointSet(inPath);
            Norm norm = Norm::parse(normSpec, s.dim);
            emit(outPath, dumped(degreeReportToJson(degreeReport(s, norm, cap, tol))));
        } else if (*cmdLow) {
            PointSet s = loadPointSet(inPath);
            Norm norm = Norm::parse(normSpec, s.dim);
            perturb.seed = seed;
            LowDegreeResult r = lowDegreeMst(s, norm, perturb);
            OrderedJson j;
            j["tree"] = treeToJson(r.tree);
            j["trace"] = traceToJson(r.trace);
            emit(outPath, dumped(j));
        } else if (*packSearch) {
            Norm norm = Norm::parse(normSpec, dim);
            SearchParams params;
            params.k = k;
            params.strict = strict;
            params.tol = searchTol;
            params.strict_margin = strictMargin;
            params.budget = budget;
            params.restarts = restarts;
            params.seed = seed;
            emit(outPath, dumped(searchResultToJson(searchLowerBound(norm, params))));
        } else if (*packVerify) {
            PackingCertificate cert = certificateFromJsonText(readFile(certPath));
            bool ok = verifyCertificate(cert, tol, strictMargin);
            OrderedJson j;
            j["valid"] = ok;
            j["k"] = cert.vectors.size();
            j["min_pairwise"] = scalarToString(cert.min_pairwise);
            j["strict"] = cert.strict;
            emit(outPath, dumped(j));
            if (!ok) return 4;
        } else if (*packKnown) {
            emit(outPath, dumped(certificateToJson(knownPacking(name, dim))));
        } else if (*packTable) {
            emit(outPath, dumped(knownValuesToJson()));
        } else if (*cmdRender) {
            PointSet s = loadPointSet(inPath);
            const bool haveNorm = cmdRender->count("--norm") > 0;
            std::optional<Norm> norm;
            if (haveNorm) norm = Norm::parse(normSpec, s.dim);
            std::optional<Tree> tree;
            if (!treePath.empty()) {
                auto edges = treeEdgesFromJson(nlohmann::json::parse(readFile(treePath)));
                tree = makeTree(s, norm ? *norm : Norm::l2(s.dim), std::move(edges));
            } else if (norm) {
                tree = kruskalMst(s, *norm, TieBreak::lexicographic, tol);
            }
            if (ballCenter >= 0 && !norm)
                throw ParseError("--ball needs --norm for the outline shape");
            emit(outPath, renderSvg(s, tree ? &*tree : nullptr, norm ? &*norm : nullptr,
                                    ballCenter));
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInstanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
