#include "minktree/lowdeg.hpp"

#include "minktree/rng.hpp"

#include <algorithm>
#include <cmath>

namespace minktree {

PointSet samplePerturbation(const PointSet& s, double epsilon, const Norm& norm, uint64_t seed) {
    s.validate();
    if (s.size() >= 2) {
        Scalar minDist = minPairwiseDistance(s, norm);
        if (!(epsilon < minDist.value()))
            throw InvalidInstanceError("perturbation radius must stay below the minimum pairwise distance");
    }
    if (epsilon < 0) throw std::invalid_argument("negative perturbation radius");

    Rng rng(seed);
    const int d = s.dim;
    const double box = epsilon * norm.coordinateBound();
    PointSet out;
    out.dim = d;
    out.labels = s.labels;
    std::vector<double> offset(d);
    for (const auto& p : s.points) {
        if (epsilon > 0) {
            do {
                for (int c = 0; c < d; ++c) offset[c] = rng.uniform(-box, box);
            } while (norm.evalD(offset) > epsilon);
        } else {
            std::fill(offset.begin(), offset.end(), 0.0);
        }
        Vec moved(d);
        for (int c = 0; c < d; ++c) moved[c] = Scalar(p[c].value() + offset[c]);
        out.points.push_back(std::move(moved));
    }
    return out;
}

bool isGeneric(const PointSet& s, const Norm& norm, double tau) {
    const size_t n = s.size();
    if (n < 3) return true;
    std::vector<std::vector<double>> pts(n);
    for (size_t i = 0; i < n; ++i) pts[i] = vecToDouble(s.points[i]);
    for (size_t b = 0; b < n; ++b) {
        for (size_t a = 0; a < n; ++a) {
            if (a == b) continue;
            for (size_t c = a + 1; c < n; ++c) {
                if (c == b) continue;
                double size = angleSizeD(norm, pts[a], pts[b], pts[c]);
                if (std::fabs(size - 1.0) <= tau) return false;
            }
        }
    }
    return true;
}

LowDegreeResult lowDegreeMst(const PointSet& s, const Norm& norm, PerturbationParams params) {
    s.validate();
    const int n = static_cast<int>(s.size());
    LowDegreeResult result;
    result.trace.params = params;

    if (n <= 1) {
        result.tree.n = n;
        result.tree.total_length = Scalar(0);
        result.tree.degree_sequence.assign(n, 0);
        result.trace.final_tree = result.tree;
        result.trace.final_is_mst_of_S = true;
        return result;
    }
    if (n == 2) {
        result.tree = makeTree(s, norm, {{0, 1}});
        result.trace.final_tree = result.tree;
        result.trace.final_is_mst_of_S = true;
        return result;
    }

    if (!(params.shrink > 0 && params.shrink < 1))
        throw std::invalid_argument("shrink factor must lie in (0, 1)");
    const double minDist = minPairwiseDistance(s, norm).value();
    double epsilon = params.epsilon0 > 0 ? params.epsilon0 : minDist / 4.0;
    if (!(epsilon < minDist))
        throw InvalidInstanceError("epsilon0 must stay below the minimum pairwise distance");
    result.trace.params.epsilon0 = epsilon;

    const Tree mstOfS = kruskalMst(s, norm);
    const Scalar mstWeight = mstOfS.total_length;

    Rng seeder(params.seed);
    std::vector<std::vector<std::pair<int, int>>>& topologies = result.trace.topologies;
    int selectedRound = -1;

    for (int round = 0; round < params.max_rounds; ++round) {
        // Angles of size exactly 1 in S stay within O(epsilon / minDist) of 1
        // after perturbing, so a fixed gap would reject every sample once
        // epsilon shrinks below it. Scale the gap down with epsilon; any
        // positive separation well above double roundoff keeps the strict
        // angle bound sound.
        const double gap = std::min(params.genericity_gap, 0.02 * epsilon / minDist);
        PointSet perturbed;
        int resamples = 0;
        bool generic = false;
        while (resamples <= params.resample_limit) {
            perturbed = samplePerturbation(s, epsilon, norm, seeder.next());
            if (isGeneric(perturbed, norm, gap)) {
                generic = true;
                break;
            }
            ++resamples;
        }
        if (!generic)
            throw InvalidInstanceError(
                "resample limit exhausted without a generic perturbation (genericity gap too large?)");

        Tree perturbedMst = kruskalMst(perturbed, norm);
        auto it = std::find(topologies.begin(), topologies.end(), perturbedMst.edges);
        int topologyId;
        if (it == topologies.end()) {
            topologyId = static_cast<int>(topologies.size());
            topologies.push_back(perturbedMst.edges);
        } else {
            topologyId = static_cast<int>(it - topologies.begin());
        }
        result.trace.rounds.push_back(
            {epsilon, resamples, topologyId, perturbedMst.total_length.value()});
        epsilon *= params.shrink;
    }

    // Accept the smallest-epsilon topology whose edge set already attains
    // the MST weight on the original points.
    for (int r = static_cast<int>(result.trace.rounds.size()) - 1; r >= 0; --r) {
        const auto& edges = topologies[result.trace.rounds[r].topology_id];
        Tree onS = makeTree(s, norm, edges);
        if (Scalar::approxEqual(onS.total_length, mstWeight)) {
            result.tree = std::move(onS);
            selectedRound = r;
            break;
        }
    }
    if (selectedRound < 0) {
        // No recorded topology is optimal on S (epsilon schedule exhausted
        // too early). Fall back to picking a minimum-degree MST directly.
        if (n > 9)
            throw InvalidInstanceError(
                "no perturbed topology stabilized to an MST of the input (more rounds needed)");
        auto enumerated = enumerateMsts(s, norm);
        const Tree* best = nullptr;
        for (const auto& t : enumerated.trees)
            if (!best || t.maxDegree() < best->maxDegree()) best = &t;
        result.tree = *best;
    }
    result.trace.selected_round = selectedRound;
    result.trace.final_tree = result.tree;
    result.trace.final_is_mst_of_S = Scalar::approxEqual(result.tree.total_length, mstWeight);
    return result;
}

PointSet starHardInstance(const Norm& norm, const PackingCertificate& cert) {
    PackingCertificate check;
    check.norm = norm;
    check.vectors = cert.vectors;
    check.min_pairwise = certificateMinPairwise(norm, cert.vectors);
    check.strict = true;
    if (!verifyCertificate(check))
        throw InvalidInstanceError("star instance needs a strict certificate under this norm");
    PointSet s;
    s.dim = norm.dim();
    s.points.push_back(Vec(s.dim, Scalar(0)));
    for (const auto& v : cert.vectors) s.points.push_back(v);
    s.validate();
    return s;
}

}  // namespace minktree
