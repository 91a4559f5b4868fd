#include "minktree/geometry.hpp"

namespace minktree {

Scalar angleSize(const Norm& norm, const Vec& a, const Vec& b, const Vec& c) {
    Vec u = a - b;
    Vec w = c - b;
    if (vecIsZero(u) || vecIsZero(w))
        throw std::invalid_argument("angle apex coincides with a ray endpoint");
    return norm.eval(norm.normalize(u) - norm.normalize(w));
}

double angleSizeD(const Norm& norm, std::span<const double> a, std::span<const double> b,
                  std::span<const double> c) {
    const size_t d = b.size();
    std::vector<double> u(d), w(d);
    for (size_t i = 0; i < d; ++i) {
        u[i] = a[i] - b[i];
        w[i] = c[i] - b[i];
    }
    double lu = norm.evalD(u), lw = norm.evalD(w);
    if (lu == 0.0 || lw == 0.0)
        throw std::invalid_argument("angle apex coincides with a ray endpoint");
    std::vector<double> diff(d);
    for (size_t i = 0; i < d; ++i) diff[i] = u[i] / lu - w[i] / lw;
    return norm.evalD(diff);
}

Scalar minPairwiseDistance(const PointSet& s, const Norm& norm) {
    if (s.size() < 2) throw InvalidInstanceError("need at least two points");
    bool have = false;
    Scalar best(0);
    for (size_t i = 0; i < s.size(); ++i) {
        for (size_t j = i + 1; j < s.size(); ++j) {
            Scalar d = norm.dist(s.points[i], s.points[j]);
            if (d.isZero()) throw InvalidInstanceError("duplicate points in instance");
            if (!have || Scalar::compare(d, best) < 0) {
                best = d;
                have = true;
            }
        }
    }
    return best;
}

}  // namespace minktree
