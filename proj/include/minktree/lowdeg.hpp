#pragma once

#include "minktree/mst.hpp"
#include "minktree/packing.hpp"

#include <cstdint>

namespace minktree {

struct PerturbationParams {
    double epsilon0 = 0;        // 0 = auto: min pairwise distance / 4
    double shrink = 0.5;        // geometric factor per round, in (0, 1)
    int max_rounds = 20;
    double genericity_gap = 1e-6;  // minimum |angle size - 1| to accept a sample
    int resample_limit = 100;
    uint64_t seed = 0;
};

struct RoundRecord {
    double epsilon = 0;
    int resamples = 0;     // rejected samples before a generic one appeared
    int topology_id = 0;   // id of the perturbed MST edge set (first-seen order)
    double perturbed_mst_weight = 0;
};

struct PerturbationTrace {
    PerturbationParams params;
    std::vector<RoundRecord> rounds;  // epsilons strictly decreasing
    std::vector<std::vector<std::pair<int, int>>> topologies;  // id -> edge set
    int selected_round = -1;  // -1 when the fallback produced the tree
    Tree final_tree;
    bool final_is_mst_of_S = false;
};

struct LowDegreeResult {
    Tree tree;
    PerturbationTrace trace;
};

/// Moves every point independently to a uniform sample of the epsilon-ball
/// around it under the norm (rejection sampling in the bounding box), so all
/// pairwise distances change by at most 2*epsilon. Requires epsilon smaller
/// than the minimum pairwise distance.
PointSet samplePerturbation(const PointSet& s, double epsilon, const Norm& norm, uint64_t seed);

/// True iff no angle over ordered triples of distinct points has size within
/// tau of 1. Sizes of exactly 2 (opposite collinear rays, flat unit-ball
/// faces) are fine and must never cause rejection.
bool isGeneric(const PointSet& s, const Norm& norm, double tau);

/// Degree-bounded MST construction: per round, resample an
/// epsilon-perturbation until generic, take its MST, and record the
/// topology; epsilons shrink geometrically. A topology is accepted when its
/// edge set, re-weighted on the original points, attains the true MST
/// weight; the accepted topology observed at the smallest epsilon wins. On a
/// generic sample every incident angle size exceeds 1 strictly, so the
/// directions from any vertex to its neighbors are unit vectors pairwise
/// more than 1 apart -- the tree degree is bounded by the strict Hadwiger
/// number of the unit ball.
LowDegreeResult lowDegreeMst(const PointSet& s, const Norm& norm,
                             PerturbationParams params = {});

/// The certificate's unit vectors plus the origin: an instance whose unique
/// MST is the star at the origin with degree k, witnessing that minimum
/// achievable MST degree reaches k. The certificate must be strict.
PointSet starHardInstance(const Norm& norm, const PackingCertificate& cert);

}  // namespace minktree
