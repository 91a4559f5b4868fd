#include "minktree/mst.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>

namespace minktree {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // smallest root wins, keeps ids deterministic
        parent[b] = a;
        return true;
    }
};

struct ClassEdge {
    int u, v;  // piece-local node ids
    int id;    // index into the sorted edge array
};

// Recursive spanning-tree enumeration on a small multigraph:
// include/exclude per edge in id order, pruning exclude-branches that can no
// longer connect the piece. Emits edge-id sets in deterministic order.
struct PieceEnumerator {
    int nodes;
    const std::vector<ClassEdge>& edges;
    long long limit;
    std::vector<std::vector<int>>& out;
    bool truncated = false;
    std::vector<int> chosen;

    void run() { recurse(0, Dsu(nodes), 0); }

    void recurse(size_t idx, Dsu dsu, int merged) {
        if (truncated) return;
        if (merged == nodes - 1) {
            if (static_cast<long long>(out.size()) >= limit) {
                truncated = true;
                return;
            }
            out.push_back(chosen);
            return;
        }
        if (idx == edges.size()) return;
        const auto& e = edges[idx];
        if (dsu.find(e.u) != dsu.find(e.v)) {
            Dsu next = dsu;
            next.unite(e.u, e.v);
            chosen.push_back(e.id);
            recurse(idx + 1, std::move(next), merged + 1);
            chosen.pop_back();
            if (truncated) return;
        }
        // exclude e: viable only if the rest still spans
        Dsu probe = dsu;
        int m = merged;
        for (size_t k = idx + 1; k < edges.size() && m < nodes - 1; ++k)
            if (probe.unite(edges[k].u, edges[k].v)) ++m;
        if (m == nodes - 1) recurse(idx + 1, std::move(dsu), merged);
    }
};

void checkAtLeastTwo(const PointSet& s) {
    if (s.size() < 2) throw InvalidInstanceError("need at least two points");
}

}  // namespace

Tree makeTree(const PointSet& s, const Norm& norm, std::vector<std::pair<int, int>> edges) {
    const int n = static_cast<int>(s.size());
    for (auto& [i, j] : edges) {
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n || i == j) throw std::invalid_argument("bad edge endpoint");
    }
    std::sort(edges.begin(), edges.end());
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("a spanning tree on n points has n-1 edges");
    Dsu dsu(n);
    for (const auto& [i, j] : edges)
        if (!dsu.unite(i, j)) throw std::invalid_argument("edge list contains a cycle");

    Tree t;
    t.n = n;
    t.edges = std::move(edges);
    t.degree_sequence.assign(n, 0);
    Scalar total(0);
    for (const auto& [i, j] : t.edges) {
        total += norm.dist(s.points[i], s.points[j]);
        ++t.degree_sequence[i];
        ++t.degree_sequence[j];
    }
    t.total_length = total;
    return t;
}

std::vector<WeightedEdge> buildEdges(const PointSet& s, const Norm& norm) {
    checkAtLeastTwo(s);
    s.validate();
    const int n = static_cast<int>(s.size());
    std::vector<WeightedEdge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Scalar w = norm.dist(s.points[i], s.points[j]);
            if (w.isZero()) throw InvalidInstanceError("duplicate points in instance");
            edges.push_back({i, j, w, w.value()});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        int c = Scalar::compare(a.weight, b.weight);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return edges;
}

std::vector<std::pair<size_t, size_t>> weightClasses(const std::vector<WeightedEdge>& edges,
                                                     double tol) {
    std::vector<std::pair<size_t, size_t>> classes;
    size_t begin = 0;
    for (size_t k = 1; k <= edges.size(); ++k) {
        if (k == edges.size() || !Scalar::approxEqual(edges[k].weight, edges[begin].weight, tol)) {
            classes.emplace_back(begin, k);
            begin = k;
        }
    }
    return classes;
}

Tree kruskalMst(const PointSet& s, const Norm& norm, TieBreak tieBreak, double tol) {
    auto edges = buildEdges(s, norm);
    auto classes = weightClasses(edges, tol);
    const int n = static_cast<int>(s.size());
    Dsu dsu(n);
    std::vector<std::pair<int, int>> picked;
    for (const auto& [b, e] : classes) {
        if (tieBreak == TieBreak::lexicographic) {
            for (size_t k = b; k < e; ++k)
                if (dsu.unite(edges[k].i, edges[k].j)) picked.emplace_back(edges[k].i, edges[k].j);
        } else {
            for (size_t k = e; k-- > b;)
                if (dsu.unite(edges[k].i, edges[k].j)) picked.emplace_back(edges[k].i, edges[k].j);
        }
        if (static_cast<int>(picked.size()) == n - 1) break;
    }
    return makeTree(s, norm, std::move(picked));
}

EnumerationResult enumerateMsts(const PointSet& s, const Norm& norm, long long cap, double tol) {
    checkAtLeastTwo(s);
    if (cap < 1) cap = 1;
    auto edges = buildEdges(s, norm);
    auto classes = weightClasses(edges, tol);
    const int n = static_cast<int>(s.size());

    bool complete = true;
    Dsu dsu(n);
    // Per weight class, the interchangeable choices (edge-id sets).
    std::vector<std::vector<std::vector<int>>> classChoices;

    for (const auto& [cb, ce] : classes) {
        // Map endpoints onto current components, drop intra-component edges.
        std::map<int, int> nodeId;
        std::vector<ClassEdge> live;
        for (size_t k = cb; k < ce; ++k) {
            int u = dsu.find(edges[k].i), v = dsu.find(edges[k].j);
            if (u == v) continue;
            for (int r : {u, v}) nodeId.emplace(r, 0);
            live.push_back({u, v, static_cast<int>(k)});
        }
        if (live.empty()) continue;
        int next = 0;
        for (auto& [root, id] : nodeId) id = next++;
        for (auto& e : live) {
            e.u = nodeId[e.u];
            e.v = nodeId[e.v];
        }

        // Split into connected pieces; each piece contributes its spanning
        // trees independently.
        Dsu pieces(next);
        for (const auto& e : live) pieces.unite(e.u, e.v);
        std::map<int, std::vector<ClassEdge>> byPiece;
        std::map<int, std::vector<int>> pieceNodes;
        for (const auto& e : live) byPiece[pieces.find(e.u)].push_back(e);
        for (const auto& [root, id] : nodeId) pieceNodes[pieces.find(id)].push_back(id);

        std::vector<std::vector<std::vector<int>>> perPiece;
        for (auto& [proot, pedges] : byPiece) {
            // Relabel piece nodes 0..m-1.
            std::map<int, int> local;
            for (int nd : pieceNodes[proot]) local.emplace(nd, static_cast<int>(local.size()));
            for (auto& e : pedges) {
                e.u = local[e.u];
                e.v = local[e.v];
            }
            std::vector<std::vector<int>> trees;
            PieceEnumerator en{static_cast<int>(local.size()), pedges, cap + 1, trees, false, {}};
            en.run();
            if (en.truncated) complete = false;
            perPiece.push_back(std::move(trees));
        }

        // Cartesian product of the piece choices, capped.
        std::vector<std::vector<int>> choices;
        std::vector<size_t> odo(perPiece.size(), 0);
        while (true) {
            std::vector<int> combo;
            for (size_t p = 0; p < perPiece.size(); ++p)
                combo.insert(combo.end(), perPiece[p][odo[p]].begin(), perPiece[p][odo[p]].end());
            choices.push_back(std::move(combo));
            if (static_cast<long long>(choices.size()) > cap) {
                complete = false;
                choices.pop_back();
                break;
            }
            size_t p = perPiece.size();
            while (p-- > 0) {
                if (++odo[p] < perPiece[p].size()) break;
                odo[p] = 0;
                if (p == 0) goto productDone;
            }
        }
    productDone:
        classChoices.push_back(std::move(choices));
        for (size_t k = cb; k < ce; ++k) dsu.unite(edges[k].i, edges[k].j);
    }

    // Cross-class product, capped, then sorted for a canonical order.
    EnumerationResult result;
    std::vector<size_t> odo(classChoices.size(), 0);
    while (true) {
        std::vector<std::pair<int, int>> treeEdges;
        treeEdges.reserve(n - 1);
        for (size_t c = 0; c < classChoices.size(); ++c)
            for (int id : classChoices[c][odo[c]])
                treeEdges.emplace_back(edges[id].i, edges[id].j);
        result.trees.push_back(makeTree(s, norm, std::move(treeEdges)));
        if (static_cast<long long>(result.trees.size()) >= cap) {
            size_t c = classChoices.size();
            bool more = false;
            while (c-- > 0) {
                if (odo[c] + 1 < classChoices[c].size()) {
                    more = true;
                    break;
                }
            }
            if (more) complete = false;
            break;
        }
        size_t c = classChoices.size();
        while (true) {
            if (c-- == 0) goto done;
            if (++odo[c] < classChoices[c].size()) break;
            odo[c] = 0;
            if (c == 0) goto done;
        }
    }
done:
    std::sort(result.trees.begin(), result.trees.end(),
              [](const Tree& a, const Tree& b) { return a.edges < b.edges; });
    result.complete = complete;
    return result;
}

DegreeReport degreeReport(const PointSet& s, const Norm& norm, long long cap, double tol) {
    auto enumerated = enumerateMsts(s, norm, cap, tol);
    DegreeReport r;
    r.mst_count = static_cast<long long>(enumerated.trees.size());
    r.enumeration_complete = enumerated.complete;
    r.delta_plus = 0;
    r.delta_minus = 0;
    for (const auto& t : enumerated.trees) {
        int d = t.maxDegree();
        r.delta_plus = std::max(r.delta_plus, d);
        r.delta_minus = r.delta_minus == 0 ? d : std::min(r.delta_minus, d);
    }
    return r;
}

IncidentAngleReport checkIncidentAngles(const Tree& t, const PointSet& s, const Norm& norm,
                                        double tol) {
    if (t.n != static_cast<int>(s.size()))
        throw std::invalid_argument("tree does not span the point set");
    std::vector<std::vector<int>> adj(t.n);
    for (const auto& [i, j] : t.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    IncidentAngleReport report;
    report.min_size = 2.0;
    for (int b = 0; b < t.n; ++b) {
        const auto& nb = adj[b];
        for (size_t x = 0; x < nb.size(); ++x) {
            for (size_t y = x + 1; y < nb.size(); ++y) {
                Scalar size = angleSize(norm, s.points[nb[x]], s.points[b], s.points[nb[y]]);
                double v = size.value();
                report.min_size = std::min(report.min_size, v);
                if (v < 1.0 - tol) report.violations.push_back({nb[x], b, nb[y], v});
            }
        }
    }
    return report;
}

Scalar bruteForceMstWeight(const PointSet& s, const Norm& norm) {
    const int n = static_cast<int>(s.size());
    if (n < 2) throw InvalidInstanceError("need at least two points");
    if (n > 9) throw std::invalid_argument("brute-force oracle is limited to n <= 9");
    s.validate();

    std::vector<std::vector<Scalar>> dist(n, std::vector<Scalar>(n, Scalar(0)));
    std::vector<std::array<double, 9>> distD(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Scalar d = norm.dist(s.points[i], s.points[j]);
            if (d.isZero()) throw InvalidInstanceError("duplicate points in instance");
            dist[i][j] = dist[j][i] = d;
            distD[i][j] = d.value();
            distD[j][i] = d.value();
        }
    }
    if (n == 2) return dist[0][1];

    const int seqLen = n - 2;
    const bool exactPath = norm.exactCapable() && s.allExact();

    auto decodeWeightD = [&](const int* seq) {
        int deg[9];
        for (int i = 0; i < n; ++i) deg[i] = 1;
        for (int k = 0; k < seqLen; ++k) ++deg[seq[k]];
        double w = 0;
        for (int k = 0; k < seqLen; ++k) {
            int leaf = 0;
            while (deg[leaf] != 1) ++leaf;
            w += distD[leaf][seq[k]];
            deg[leaf] = 0;
            --deg[seq[k]];
        }
        int u = 0;
        while (deg[u] == 0) ++u;
        int v = u + 1;
        while (deg[v] == 0) ++v;
        return w + distD[u][v];
    };
    // explicit return type: boost's expression templates must not escape
    auto decodeWeightExact = [&](const int* seq) -> Rational {
        int deg[9];
        for (int i = 0; i < n; ++i) deg[i] = 1;
        for (int k = 0; k < seqLen; ++k) ++deg[seq[k]];
        Rational w = 0;
        for (int k = 0; k < seqLen; ++k) {
            int leaf = 0;
            while (deg[leaf] != 1) ++leaf;
            w += dist[leaf][seq[k]].rat();
            deg[leaf] = 0;
            --deg[seq[k]];
        }
        int u = 0;
        while (deg[u] == 0) ++u;
        int v = u + 1;
        while (deg[v] == 0) ++v;
        return w + dist[u][v].rat();
    };

    // Pass 1: floating minimum over all Prufer sequences.
    int seq[7] = {0};
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        best = std::min(best, decodeWeightD(seq));
        int k = seqLen - 1;
        while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
        if (k < 0) break;
        ++seq[k];
    }
    if (!exactPath) return Scalar(best);

    // Pass 2: exact comparison among near-minimal candidates. The floating
    // sum of <= 8 weights bounded by the instance diameter is far more
    // accurate than this margin.
    const double margin = 1e-7;
    std::fill(std::begin(seq), std::end(seq), 0);
    bool have = false;
    Rational bestExact;
    while (true) {
        if (decodeWeightD(seq) <= best + margin) {
            Rational w = decodeWeightExact(seq);
            if (!have || w < bestExact) {
                bestExact = w;
                have = true;
            }
        }
        int k = seqLen - 1;
        while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
        if (k < 0) break;
        ++seq[k];
    }
    return Scalar(bestExact);
}

}  // namespace minktree
