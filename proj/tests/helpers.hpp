#pragma once

#include "minktree/mst.hpp"
#include "minktree/norm.hpp"
#include "minktree/pointset.hpp"
#include "minktree/rng.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace minktree::testing {

/// Random rational coordinate in [-10, 10] with denominator <= 16.
inline Scalar randomRationalCoord(Rng& rng) {
    long long den = 1 + rng.uniformInt(16);
    long long num = rng.uniformInt(static_cast<int>(20 * den + 1)) - 10 * den;
    return Scalar(Rational(num, den));
}

/// Random instance with pairwise-distinct points.
inline PointSet randomRationalInstance(int n, int dim, Rng& rng) {
    PointSet s;
    s.dim = dim;
    std::set<std::vector<std::pair<long long, long long>>> seen;
    while (static_cast<int>(s.points.size()) < n) {
        Vec p(dim);
        std::vector<std::pair<long long, long long>> key;
        for (int c = 0; c < dim; ++c) {
            p[c] = randomRationalCoord(rng);
            const auto& q = p[c].rat();
            key.emplace_back(boost::multiprecision::numerator(q).convert_to<long long>(),
                             boost::multiprecision::denominator(q).convert_to<long long>());
        }
        if (seen.insert(key).second) s.points.push_back(std::move(p));
    }
    return s;
}

inline PointSet randomFloatInstance(int n, int dim, Rng& rng, double lo = -10, double hi = 10) {
    PointSet s;
    s.dim = dim;
    for (int i = 0; i < n; ++i) {
        Vec p(dim);
        for (int c = 0; c < dim; ++c) p[c] = Scalar(rng.uniform(lo, hi));
        s.points.push_back(std::move(p));
    }
    return s;
}

using EdgeList = std::vector<std::pair<int, int>>;

inline Scalar edgeListWeight(const PointSet& s, const Norm& norm, const EdgeList& edges) {
    Scalar total(0);
    for (const auto& [i, j] : edges) total += norm.dist(s.points[i], s.points[j]);
    return total;
}

/// Independent oracle for the full MST set: decodes every Prufer sequence,
/// keeps the minimum-weight trees (exact comparison on the exact path,
/// 1e-9 grouping otherwise). Only for n <= 8.
inline std::vector<EdgeList> allMinTreesByBruteForce(const PointSet& s, const Norm& norm) {
    const int n = static_cast<int>(s.size());
    if (n == 2) return {{{0, 1}}};
    const bool exact = norm.exactCapable() && s.allExact();

    std::vector<std::vector<Scalar>> dist(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) dist[i][j] = dist[j][i] = norm.dist(s.points[i], s.points[j]);

    auto decode = [&](const std::vector<int>& seq) {
        std::vector<int> deg(n, 1);
        for (int v : seq) ++deg[v];
        EdgeList edges;
        for (int v : seq) {
            int leaf = 0;
            while (deg[leaf] != 1) ++leaf;
            edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
            deg[leaf] = 0;
            --deg[v];
        }
        int u = 0;
        while (deg[u] == 0) ++u;
        int w = u + 1;
        while (deg[w] == 0) ++w;
        edges.emplace_back(u, w);
        std::sort(edges.begin(), edges.end());
        return edges;
    };

    std::vector<EdgeList> best;
    Scalar bestWeight(0);
    bool have = false;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        EdgeList edges = decode(seq);
        Scalar w(0);
        for (const auto& [i, j] : edges) w += dist[i][j];
        if (!have) {
            best = {edges};
            bestWeight = w;
            have = true;
        } else if (exact ? w.rat() < bestWeight.rat() : w.value() < bestWeight.value() - 1e-9) {
            best = {edges};
            bestWeight = w;
        } else if (exact ? w.rat() == bestWeight.rat()
                         : std::fabs(w.value() - bestWeight.value()) <= 1e-9) {
            best.push_back(edges);
        }
        int k = n - 3;
        while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
        if (k < 0) break;
        ++seq[k];
    }
    std::sort(best.begin(), best.end());
    best.erase(std::unique(best.begin(), best.end()), best.end());
    return best;
}

/// Spanning-tree count of a simple graph by the matrix-tree theorem: the
/// determinant of the reduced Laplacian, evaluated in exact rational
/// arithmetic. Independent of the MST enumeration path.
inline long long spanningTreeCountKirchhoff(int n, const EdgeList& edges) {
    std::vector<std::vector<Rational>> lap(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [i, j] : edges) {
        lap[i][i] += 1;
        lap[j][j] += 1;
        lap[i][j] -= 1;
        lap[j][i] -= 1;
    }
    // determinant of the (n-1)x(n-1) minor
    const int m = n - 1;
    Rational det = 1;
    for (int col = 0; col < m; ++col) {
        int piv = col;
        while (piv < m && lap[piv][col].is_zero()) ++piv;
        if (piv == m) return 0;
        if (piv != col) {
            std::swap(lap[piv], lap[col]);
            det = -det;
        }
        det *= lap[col][col];
        for (int r = col + 1; r < m; ++r) {
            if (lap[r][col].is_zero()) continue;
            Rational f = lap[r][col] / lap[col][col];
            for (int c = col; c < m; ++c) lap[r][c] -= f * lap[col][c];
        }
    }
    if (det < 0) det = -det;
    return boost::multiprecision::numerator(det).convert_to<long long>() /
           boost::multiprecision::denominator(det).convert_to<long long>();
}

/// Regular k-gon of unit vectors plus the origin (l2 instances).
inline PointSet regularStarInstance(int k, bool withCenter = true) {
    PointSet s;
    s.dim = 2;
    if (withCenter) s.points.push_back({Scalar(0.0), Scalar(0.0)});
    for (int i = 0; i < k; ++i) {
        double a = 2.0 * M_PI * i / k;
        s.points.push_back({Scalar(std::cos(a)), Scalar(std::sin(a))});
    }
    return s;
}

inline PointSet crossInstance() {
    PointSet s;
    s.dim = 2;
    s.points = {{Scalar(0), Scalar(0)},
                {Scalar(1), Scalar(0)},
                {Scalar(-1), Scalar(0)},
                {Scalar(0), Scalar(1)},
                {Scalar(0), Scalar(-1)}};
    return s;
}

inline PointSet unitSquareInstance() {
    PointSet s;
    s.dim = 2;
    s.points = {{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}, {Scalar(1), Scalar(1)},
                {Scalar(0), Scalar(1)}};
    return s;
}

inline PointSet collinearInstance() {
    PointSet s;
    s.dim = 2;
    s.points = {{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}, {Scalar(3), Scalar(0)}};
    return s;
}

}  // namespace minktree::testing
