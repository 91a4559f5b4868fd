#pragma once

#include "minktree/norm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace minktree {

/// k unit vectors with a verified minimum pairwise distance: an explicit
/// lower-bound witness for the Hadwiger number H(B) (pairwise distance
/// >= 1) or the strict Hadwiger number H_s(B) (pairwise distance > 1).
struct PackingCertificate {
    Norm norm = Norm::l2(2);
    std::vector<Vec> vectors;
    Scalar min_pairwise;
    bool strict = false;
    uint64_t seed = 0;

    size_t k() const { return vectors.size(); }
};

/// Recomputes unit norms and pairwise distances from scratch; independent of
/// how the certificate was produced. Exact path: unit norm == 1 and pairwise
/// >= 1 (H) or > 1 (strict) exactly. Floating path: unit within tol,
/// pairwise >= 1 - tol (H) or >= 1 + strict_margin (strict).
bool verifyCertificate(const PackingCertificate& cert, double tol = kDefaultTol,
                       double strictMargin = 1e-6);

/// Recomputes min_pairwise from the vectors (helper shared by construction
/// and verification call sites).
Scalar certificateMinPairwise(const Norm& norm, const std::vector<Vec>& vectors);

/// Deterministic reference configurations:
///   hexagon-l2            6 unit vectors, min distance 1
///   pentagon-l2-strict    5 unit vectors, min distance 2 sin 36
///   axes-l1-strict        {+-e1, +-e2}, min distance 2
///   signs-linf-strict     all 2^d sign vectors (needs dim)
///   grid-linf             all 3^d - 1 nonzero {-1,0,1}-vectors (needs dim)
///   icosahedron-l2-strict 12 normalized icosahedron vertices
///   crosspolytope-l1      {+-e_i : i < d} (needs dim)
PackingCertificate knownPacking(const std::string& name, int dim = 0);

struct SearchParams {
    int k = 2;
    bool strict = false;
    double tol = 1e-6;           // H-mode success slack on the floating path
    double strict_margin = 1e-6; // strict-mode success margin
    long long budget = 100000;   // annealing iterations per restart
    int restarts = 32;
    uint64_t seed = 0;
};

struct SearchResult {
    bool found = false;
    double best_objective = 0;  // best min-pairwise distance reached
    PackingCertificate cert;    // best configuration, certificate when found
};

/// Stochastic lower-bound search: multi-start simulated annealing over k
/// unit vectors (random tangent steps, renormalization), local polish on the
/// minimum-distance pairs, and a final snap to small rationals that upgrades
/// near-rational optima to exact certificates. Deterministic for a fixed
/// seed; failure to reach the threshold is a reported outcome, not an error.
SearchResult searchLowerBound(const Norm& norm, const SearchParams& params);

struct KnownValue {
    std::string body;      // cube, octahedron, euclidean-disc, ...
    std::string quantity;  // "H" or "Hs"
    int lo = 0, hi = 0;    // value when lo == hi, interval otherwise
    bool parametric = false;  // depends on the dimension (cube family)
    std::string note;         // construction / provenance note
};

/// The table of established Hadwiger-type values used by the test gates.
const std::vector<KnownValue>& knownValuesTable();

/// Resolves a table entry; parametric bodies (cube) need dim. Returns the
/// [lo, hi] interval, collapsed when exact.
std::optional<std::pair<int, int>> lookupKnownValue(const std::string& body,
                                                    const std::string& quantity, int dim = 0);

/// Known strict Hadwiger number of the unit ball of this norm, when the
/// table settles it (planar norms, linf in any dimension, Euclidean 3-space).
std::optional<int> knownStrictHadwiger(const Norm& norm);

/// Known Hadwiger number of the unit ball of this norm, when settled.
std::optional<int> knownHadwiger(const Norm& norm);

}  // namespace minktree
