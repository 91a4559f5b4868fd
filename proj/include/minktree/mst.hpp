#pragma once

#include "minktree/geometry.hpp"
#include "minktree/norm.hpp"
#include "minktree/pointset.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace minktree {

struct WeightedEdge {
    int i = 0, j = 0;  // i < j
    Scalar weight;
    double approx = 0;  // cached double of weight
};

/// Spanning tree as an edge list over point indices. Edges are stored with
/// i < j and sorted lexicographically.
struct Tree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    Scalar total_length;
    std::vector<int> degree_sequence;

    int maxDegree() const {
        int m = 0;
        for (int d : degree_sequence) m = std::max(m, d);
        return m;
    }
    bool operator==(const Tree& o) const { return n == o.n && edges == o.edges; }
};

/// Builds a Tree from an edge list: normalizes/sorts edges, recomputes the
/// total length under the norm, and fills the degree sequence.
Tree makeTree(const PointSet& s, const Norm& norm, std::vector<std::pair<int, int>> edges);

/// All n(n-1)/2 edges sorted ascending by (weight, i, j). Exact comparisons
/// on the exact path. Throws InvalidInstanceError on duplicate points.
std::vector<WeightedEdge> buildEdges(const PointSet& s, const Norm& norm);

/// Groups sorted edges into weight classes: exact equality on the exact
/// path, anchor distance <= tol otherwise. Returns [begin,end) index pairs.
std::vector<std::pair<size_t, size_t>> weightClasses(const std::vector<WeightedEdge>& edges,
                                                     double tol = kDefaultTol);

enum class TieBreak {
    lexicographic,          // within a weight class, smallest (i, j) first
    reverse_lexicographic,  // within a weight class, largest (i, j) first
};

/// Deterministic Kruskal MST; ties resolved by the requested order.
Tree kruskalMst(const PointSet& s, const Norm& norm,
                TieBreak tieBreak = TieBreak::lexicographic, double tol = kDefaultTol);

struct EnumerationResult {
    std::vector<Tree> trees;  // lexicographically sorted by edge list
    bool complete = true;     // false when the cap truncated the list
};

inline constexpr long long kDefaultEnumerationCap = 1'000'000;

/// Enumerates minimal spanning trees by weight-class substitution: within
/// each Kruskal weight class, all maximal spanning forests of the class
/// edges on the contracted components are interchangeable. With
/// complete == true the list is the full MST set; otherwise it is a
/// cap-limited prefix (a flag, not an error). On the floating path weights
/// within tol merge into one class, which can overcount the MST set by
/// admitting near-minimal trees; exact counts need exact inputs under an
/// exact-capable norm.
EnumerationResult enumerateMsts(const PointSet& s, const Norm& norm,
                                long long cap = kDefaultEnumerationCap,
                                double tol = kDefaultTol);

struct DegreeReport {
    int delta_plus = 0;   // max over enumerated MSTs of the max degree
    int delta_minus = 0;  // min over enumerated MSTs of the max degree
    long long mst_count = 0;
    bool enumeration_complete = true;  // false: extremes are bounds only
};

DegreeReport degreeReport(const PointSet& s, const Norm& norm,
                          long long cap = kDefaultEnumerationCap, double tol = kDefaultTol);

struct AngleViolation {
    int a = 0, b = 0, c = 0;  // apex b, rays toward a and c
    double size = 0;
};

struct IncidentAngleReport {
    double min_size = 0;  // 2 when no vertex has two incident edges
    std::vector<AngleViolation> violations;
};

/// Checks every pair of incident tree edges: for a genuine MST the angle
/// size at the shared vertex is >= 1, so `violations` lists pairs with
/// size < 1 - tol.
IncidentAngleReport checkIncidentAngles(const Tree& t, const PointSet& s, const Norm& norm,
                                        double tol = kDefaultTol);

/// Independent oracle: minimum spanning tree weight by exhausting all
/// n^(n-2) Prufer sequences. Requires 2 <= n <= 9.
Scalar bruteForceMstWeight(const PointSet& s, const Norm& norm);

}  // namespace minktree
